"""Chain graphs G_w built from 0-1 words: modules, realizers and ages."""
from .errors import BudgetExceeded, PreconditionError, UsageError
from .graphs import Graph, graph_from_word, is_prime, nontrivial_modules
from .verdict import Verdict
from .words import WordStream, parse_stream

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "PreconditionError", "UsageError", "Graph", "graph_from_word",
    "is_prime", "nontrivial_modules", "Verdict", "WordStream", "parse_stream",
]
