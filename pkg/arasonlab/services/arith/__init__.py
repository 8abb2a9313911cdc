from .rational import Rat, check_height, factorize, format_rat, is_prime, parse_rat, squarefree_part
from .square_class import SquareClass, local_square, sc_mul, sc_prod, square_class

__all__ = [
    "Rat",
    "SquareClass",
    "check_height",
    "factorize",
    "format_rat",
    "is_prime",
    "local_square",
    "parse_rat",
    "sc_mul",
    "sc_prod",
    "square_class",
    "squarefree_part",
]
