"""Expression text and problem files.

- parser: text to Poly / RatFunc
- printer: canonical text of Poly / RatFunc
- problem: key=value and YAML problem files
"""

from .parser import parse_expr, parse_poly, parse_ratfunc
from .printer import display_name, print_equation, print_expr
from .problem import format_problem, load_problem, parse_problem_text, save_problem

__all__ = [
    "parse_expr",
    "parse_poly",
    "parse_ratfunc",
    "display_name",
    "print_equation",
    "print_expr",
    "format_problem",
    "load_problem",
    "parse_problem_text",
    "save_problem",
]
