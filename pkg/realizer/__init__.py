"""realizer: observable and real realizations of first-order IO-equations."""

__version__ = "0.1.0"
