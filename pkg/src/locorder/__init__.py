"""Computational local orders of convergence under adaptive multiprecision."""

from .driver import EstimatorMode, PrecisionPolicy, RunReport, lambdas_at_I, run
from .methods import METHODS, get_method
from .problems import PROBLEMS, get_problem, reference_root

__all__ = [
    "EstimatorMode",
    "METHODS",
    "PROBLEMS",
    "PrecisionPolicy",
    "RunReport",
    "get_method",
    "get_problem",
    "lambdas_at_I",
    "reference_root",
    "run",
]
