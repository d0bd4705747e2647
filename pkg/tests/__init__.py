# Realizer test suite
