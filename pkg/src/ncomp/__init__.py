"""A level-indexed calculus of safe recursion: coercion monoid, typed
point-free terms, a standard-model evaluator, finite chain models and
law checkers."""

from .errors import (
    CompositionError, FuelExhausted, LevelRangeError, NCompError, ParseError,
    ShapeError, SideConditionError, StrictnessError, TypingError,
)
from .evaluate import LevelTuple, denote, evaluate, normalize_point
from .library import stdlib
from .objects import N, Obj, ObjNF, TOP
from .sexpr import parse_program, parse_term, show_term
from .terms import infer_type

__version__ = "0.1.0"

__all__ = [
    "CompositionError", "FuelExhausted", "LevelRangeError", "NCompError", "ParseError",
    "ShapeError", "SideConditionError", "StrictnessError", "TypingError",
    "LevelTuple", "denote", "evaluate", "normalize_point", "stdlib",
    "N", "Obj", "ObjNF", "TOP", "parse_program", "parse_term", "show_term", "infer_type",
]
