"""Finite automata with restricted initial/final states: determinization
blow-ups, closure operations, closedness tests and universality reductions."""

from nfakit.core import (
    AutomatonError,
    Dfa,
    Nfa,
    PreconditionError,
    accepts,
    complement,
    reverse,
    trim,
)
from nfakit.kernels import BACKEND
from nfakit.subset import (
    BudgetExceeded,
    determinize,
    equivalent,
    minimize,
    shortest_rejected,
    state_complexity,
    universal,
)

__version__ = "0.1.0"

__all__ = [
    "AutomatonError",
    "BACKEND",
    "BudgetExceeded",
    "Dfa",
    "Nfa",
    "PreconditionError",
    "accepts",
    "complement",
    "determinize",
    "equivalent",
    "minimize",
    "reverse",
    "shortest_rejected",
    "state_complexity",
    "trim",
    "universal",
]
