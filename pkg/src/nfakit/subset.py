"""Determinization, minimization and the exact decision procedures built on them."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from nfakit import kernels
from nfakit.core import (
    AutomatonError,
    Dfa,
    Nfa,
    PreconditionError,
    Word,
    difference_witness,
    from_mask,
)

__all__ = [
    "BudgetExceeded",
    "DeterminizationTrace",
    "EnumerationResult",
    "MODES",
    "DEFAULT_ENUM_BUDGET",
    "determinize",
    "minimize",
    "state_complexity",
    "equivalent",
    "universal",
    "shortest_rejected",
    "enumeration_size",
    "enumerate_class",
    "enumerate_max_blowup",
]

DEFAULT_ENUM_BUDGET = 1 << 24

MODES = ("asf-single-initial", "asi-one-final", "asif", "unary-asf")


class BudgetExceeded(RuntimeError):
    """A search or enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class DeterminizationTrace:
    """Subset-construction result: the DFA plus the NFA subset behind each DFA state."""

    subsets: tuple
    dfa: Dfa

    def to_dict(self) -> dict:
        from nfakit.io import to_dict

        return {"dfa": to_dict(self.dfa), "subsets": [sorted(s) for s in self.subsets]}


def _as_nfa(m) -> Nfa:
    return m.nfa if isinstance(m, Dfa) else m


def determinize(m, limit: int = 0) -> DeterminizationTrace:
    """Subset construction over reachable subsets only.

    DFA state 0 is the set of initial states; the others are numbered in
    breadth-first discovery order with symbols expanded by index. The empty
    subset appears (as a rejecting sink) exactly when it is reachable.
    ``limit`` caps the number of subset states (0 means no cap).
    """
    nfa = _as_nfa(m)
    try:
        subsets, table = kernels.determinize(nfa.n, nfa.k, nfa.flat_delta(), nfa.initial_mask, limit)
    except kernels.SubsetLimitExceeded as exc:
        raise BudgetExceeded(f"subset construction exceeded {limit} states") from exc
    k = nfa.k
    rows = tuple(tuple(table[i * k:(i + 1) * k]) for i in range(len(subsets)))
    fin = 0
    for i, s in enumerate(subsets):
        if s & nfa.final_mask:
            fin |= 1 << i
    dfa = Dfa(len(subsets), nfa.alphabet, rows, 0, fin)
    return DeterminizationTrace(tuple(from_mask(s) for s in subsets), dfa)


def _bfs_order(dfa: Dfa) -> list:
    order = [dfa.initial]
    seen = {dfa.initial}
    i = 0
    while i < len(order):
        for t in dfa.table[order[i]]:
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA for L(dfa).

    Unreachable states are dropped, Myhill-Nerode classes are found by Moore
    refinement, and the quotient is renumbered breadth-first from the initial
    state. That numbering is canonical: two minimal DFAs for the same language
    come out equal, not merely isomorphic.
    """
    order = _bfs_order(dfa)
    pos = {q: i for i, q in enumerate(order)}
    n, k = len(order), dfa.k
    table = [pos[dfa.table[q][a]] for q in order for a in range(k)]
    final = [dfa.is_final(q) for q in order]
    block = kernels.refine(n, k, table, final)

    # canonical renumbering of blocks
    rep: dict = {}
    for i in range(n):
        rep.setdefault(block[i], i)
    start = block[0]
    numbering = {start: 0}
    queue = deque([start])
    rows: dict = {}
    while queue:
        b = queue.popleft()
        r = rep[b]
        row = []
        for a in range(k):
            t = block[table[r * k + a]]
            if t not in numbering:
                numbering[t] = len(numbering)
                queue.append(t)
            row.append(numbering[t])
        rows[numbering[b]] = tuple(row)
    fin = 0
    for b, i in numbering.items():
        if final[rep[b]]:
            fin |= 1 << i
    return Dfa(len(numbering), dfa.alphabet, tuple(rows[i] for i in range(len(numbering))), 0, fin)


def state_complexity(m, limit: int = 0) -> int:
    """Number of states of the minimal complete DFA (dead state included)."""
    if isinstance(m, Dfa):
        return minimize(m).n
    try:
        return kernels.state_complexity(m.n, m.k, m.flat_delta(), m.initial_mask, m.final_mask, limit)
    except kernels.SubsetLimitExceeded as exc:
        raise BudgetExceeded(f"subset construction exceeded {limit} states") from exc


def _to_dfa(m) -> Dfa:
    return m if isinstance(m, Dfa) else determinize(m).dfa


def equivalent(a, b) -> bool:
    if a.alphabet != b.alphabet:
        raise AutomatonError(f"alphabet mismatch: {list(a.alphabet)} vs {list(b.alphabet)}")
    da, db = _to_dfa(a), _to_dfa(b)
    return difference_witness(da, db) is None and difference_witness(db, da) is None


def universal(m) -> bool:
    dfa = _to_dfa(m)
    return all(dfa.is_final(q) for q in _bfs_order(dfa))


def shortest_rejected(m) -> Optional[Word]:
    """Shortest word outside L(m), lexicographically least by symbol index; None if universal."""
    dfa = _to_dfa(m)
    parent: dict = {dfa.initial: None}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        if not dfa.is_final(q):
            word = []
            while parent[q] is not None:
                q, a = parent[q]
                word.append(a)
            return tuple(reversed(word))
        for a in range(dfa.k):
            t = dfa.table[q][a]
            if t not in parent:
                parent[t] = (q, a)
                queue.append(t)
    return None


# -- exhaustive enumeration -------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    max_complexity: int
    witness: Optional[Nfa]
    total_enumerated: int


def _choices(n: int, mode: str) -> list:
    """(initial_mask, final_mask) pairs allowed by a restriction mode."""
    full = (1 << n) - 1
    if mode in ("asf-single-initial", "unary-asf"):
        return [(1 << q, full) for q in range(n)]
    if mode == "asi-one-final":
        return [(full, 1 << q) for q in range(n)]
    if mode == "asif":
        return [(full, full)]
    raise PreconditionError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def enumeration_size(n: int, alphabet_size: int, mode: str) -> int:
    return (1 << (n * n * alphabet_size)) * len(_choices(n, mode))


def enumerate_class(n: int, alphabet_size: int, mode: str) -> Iterator[Nfa]:
    """Every NFA of the class, in a fixed order.

    The outer loop walks transition relations as an integer code whose bits,
    ``n`` at a time, give the target sets of cells (state, symbol) in row-major
    order; the inner loop walks the initial/final choices of the mode.
    """
    if mode == "unary-asf" and alphabet_size != 1:
        raise PreconditionError("unary-asf mode requires alphabet size 1")
    alphabet = tuple(str(i) for i in range(alphabet_size))
    choices = _choices(n, mode)
    cells = n * alphabet_size
    cell_mask = (1 << n) - 1
    for code in range(1 << (n * cells)):
        delta = tuple(
            tuple((code >> (n * (q * alphabet_size + a))) & cell_mask for a in range(alphabet_size))
            for q in range(n)
        )
        for init, fin in choices:
            yield Nfa(n, alphabet, delta, init, fin)


def enumerate_max_blowup(n: int, alphabet_size: int, mode: str,
                         budget: int = DEFAULT_ENUM_BUDGET) -> EnumerationResult:
    """Exact maximum state complexity over a restricted class of n-state NFAs.

    No isomorphism reduction is applied. The witness is the first automaton in
    enumeration order attaining the maximum.
    """
    if n < 1 or alphabet_size < 1:
        raise PreconditionError("need n >= 1 and alphabet size >= 1")
    total = enumeration_size(n, alphabet_size, mode)
    if total > budget:
        raise BudgetExceeded(f"class has {total} automata, budget is {budget}")
    best, witness, count = -1, None, 0
    for nfa in enumerate_class(n, alphabet_size, mode):
        sc = kernels.state_complexity(nfa.n, nfa.k, nfa.flat_delta(), nfa.initial_mask, nfa.final_mask)
        count += 1
        if sc > best:
            best, witness = sc, nfa
    return EnumerationResult(best, witness, count)


def all_nfas(n: int, alphabet_size: int) -> Iterator[Nfa]:
    """Every NFA with exactly n states: all transition relations and all I, F."""
    alphabet = tuple(str(i) for i in range(alphabet_size))
    cell_mask = (1 << n) - 1
    for code in range(1 << (n * n * alphabet_size)):
        delta = tuple(
            tuple((code >> (n * (q * alphabet_size + a))) & cell_mask for a in range(alphabet_size))
            for q in range(n)
        )
        for init, fin in itertools.product(range(1 << n), repeat=2):
            yield Nfa(n, alphabet, delta, init, fin)
