"""Backend selection for the subset-construction hot loops.

The compiled extension is used when it imported cleanly and the automaton fits
in 64-bit masks; otherwise the pure-Python implementation runs. Setting
``NFAKIT_PURE_PYTHON=1`` before import forces the fallback everywhere.
"""

from __future__ import annotations

import os

from nfakit import _pykernels
from nfakit._pykernels import SubsetLimitExceeded

try:
    if os.environ.get("NFAKIT_PURE_PYTHON"):
        raise ImportError("compiled kernels disabled by environment")
    from nfakit import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
C_MAX_STATES = 64

__all__ = ["BACKEND", "SubsetLimitExceeded", "determinize", "refine", "state_complexity"]


def _pick(nstates: int):
    if _ckernels is not None and nstates <= C_MAX_STATES:
        return _ckernels
    return _pykernels


def determinize(nstates: int, nsym: int, delta: list[int], init: int, limit: int = 0):
    return _pick(nstates).determinize(nsym, delta, init, limit)


def refine(n: int, nsym: int, table: list[int], final: list[bool]) -> list[int]:
    # refinement works on int ids, so the compiled path has no size cap
    mod = _ckernels if _ckernels is not None else _pykernels
    return mod.refine(n, nsym, table, final)


def state_complexity(nstates: int, nsym: int, delta: list[int], init: int, final: int, limit: int = 0) -> int:
    return _pick(nstates).state_complexity(nsym, delta, init, final, limit)
