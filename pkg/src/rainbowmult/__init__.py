"""Rainbow copies of cliques in edge-colored complete graphs.

Parallel colorings, iterated blow-ups, exact rainbow clique counts and
exact-arithmetic certificates that a clique is rainbow-uncommon.
"""
from .coloring import (
    BlowupColoring,
    EdgeColoring,
    ValidationReport,
    color_of,
    materialize,
    parallel_coloring,
    read_coloring,
    validate,
    write_coloring,
)
from .counting import CountResult, count_rainbow_complete, is_rainbow, rainbow_proportion
from .errors import DomainError, FormatError, InvariantViolation, RainbowError, ResourceError
from .kernels import BACKEND

__version__ = "0.1.0"
