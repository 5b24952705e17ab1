"""Explicit automaton families with known blow-ups, and fooling sets.

A fooling set ``{(x_i, y_i)}`` for L has every ``x_i y_i`` in L and, for
``i != j``, at least one of ``x_i y_j`` / ``x_j y_i`` outside L. Its size is a
lower bound on the number of states of any NFA for L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from nfakit.core import Dfa, Nfa, PreconditionError, _forward_closure, format_word
from nfakit.subset import BudgetExceeded, state_complexity

__all__ = [
    "witness_all_final",
    "witness_asif",
    "witness_asi",
    "witness_suff",
    "witness_fact",
    "jiraskova_nfa",
    "jiraskova_asf_modified",
    "FAMILIES",
    "generate",
    "FoolingSet",
    "check_fooling_set",
    "find_fooling_set",
    "DEFAULT_FOOLING_BUDGET",
]

BINARY = ("0", "1")
TERNARY = ("0", "1", "2")
DEFAULT_FOOLING_BUDGET = 1 << 22


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def witness_all_final(n: int) -> Nfa:
    """Binary all-final NFA with one initial state whose minimal DFA has 2^n states.

    Defined for n = 1 and n >= 3; there is no binary all-final witness for n = 2.
    """
    _need(n >= 1, f"n must be positive, got {n}")
    _need(n != 2, "no binary all-final witness for n=2")
    if n == 1:
        return Nfa.build(BINARY, 1, [(0, "0", 0)], [0], [0])
    trans = [(i, "0", i + 1) for i in range(n - 2)]
    trans.append((n - 1, "0", n - 1))
    for i in range(n - 1):
        trans += [(i, "1", 0), (i, "1", i + 1)]
    return Nfa.build(BINARY, n, trans, [0], range(n))


def _asif_skeleton(n: int) -> list:
    if n == 1:
        return [(0, "0", 0)]
    trans = [(i, "0", i - 1) for i in range(1, n)]
    trans.append((0, "0", n - 1))
    trans += [(i, "1", i + 1) for i in range(n - 1)]
    return trans


def witness_asif(n: int) -> Nfa:
    """Binary NFA with every state initial and final, state complexity 2^n."""
    _need(n >= 1, f"n must be positive, got {n}")
    return Nfa.build(BINARY, n, _asif_skeleton(n), range(n), range(n))


def witness_asi(n: int) -> Nfa:
    """All-initial NFA with one final state and state complexity 2^n.

    Uses the :func:`witness_asif` transitions with final state ``n-1``; if that
    ever measured below 2^n, final state 0 would be used instead.
    """
    _need(n >= 1, f"n must be positive, got {n}")
    m = Nfa.build(BINARY, n, _asif_skeleton(n), range(n), [n - 1])
    if state_complexity(m) != 1 << n:
        m = m.replace(final_mask=1)
    return m


def witness_suff(n: int) -> Dfa:
    """n-state DFA whose suffix closure needs 2^n - 1 states."""
    _need(n >= 2, f"suff witness needs n >= 2, got {n}")
    table = []
    for q in range(n):
        table.append((q if q < n - 1 else 0, (q + 1) % n))
    return Dfa.build(BINARY, table, 0, [0])


def witness_fact(n: int) -> Dfa:
    """n-state DFA whose factor closure needs 2^(n-1) states."""
    _need(n >= 3, f"fact witness needs n >= 3, got {n}")
    table = []
    for q in range(n):
        zero = q if q < n - 2 else n - 1
        if q < n - 2:
            one = (q + 1) % n
        elif q == n - 2:
            one = 0
        else:
            one = n - 1
        table.append((zero, one))
    return Dfa.build(BINARY, table, 0, [0])


def _jiraskova_transitions(n: int) -> list:
    trans = []
    for i in range(n - 1):
        trans += [(i, "0", 0), (i, "0", i + 1), (i, "1", i + 1)]
    trans += [(n - 1, "0", j) for j in range(1, n)]
    return trans


def jiraskova_nfa(n: int) -> Nfa:
    _need(n >= 2, f"needs n >= 2, got {n}")
    return Nfa.build(BINARY, n, _jiraskova_transitions(n), [0], [n - 1])


def jiraskova_asf_modified(n: int) -> Nfa:
    """The n-state binary family plus a state ``n`` entered on ``2`` from ``n-1``; all states final."""
    _need(n >= 2, f"needs n >= 2, got {n}")
    trans = _jiraskova_transitions(n) + [(n - 1, "2", n)]
    return Nfa.build(TERNARY, n + 1, trans, [0], range(n + 1))


FAMILIES: dict = {
    "all-final": witness_all_final,
    "asif": witness_asif,
    "asi": witness_asi,
    "suff": witness_suff,
    "fact": witness_fact,
    "jiraskova": jiraskova_nfa,
    "jiraskova-asf": jiraskova_asf_modified,
}


def generate(family: str, n: int):
    try:
        fn: Callable = FAMILIES[family]
    except KeyError:
        raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    return fn(n)


# -- fooling sets -----------------------------------------------------------


@dataclass(frozen=True)
class FoolingSet:
    pairs: tuple  # of (x, y) words as symbol-index tuples

    def __len__(self) -> int:
        return len(self.pairs)

    def to_json(self, alphabet) -> list:
        return [[[alphabet[a] for a in x], [alphabet[a] for a in y]] for x, y in self.pairs]

    def format(self, alphabet) -> list:
        return [(format_word(alphabet, x), format_word(alphabet, y)) for x, y in self.pairs]


def check_fooling_set(dfa: Dfa, fs: FoolingSet) -> bool:
    def member(w) -> bool:
        return dfa.is_final(dfa.run(w))

    pairs = list(fs.pairs)
    if not all(member(tuple(x) + tuple(y)) for x, y in pairs):
        return False
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            (xi, yi), (xj, yj) = pairs[i], pairs[j]
            if member(tuple(xi) + tuple(yj)) and member(tuple(xj) + tuple(yi)):
                return False
    return True


def _shortlex_words(k: int, max_len: int):
    yield ()
    layer = [()]
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in range(k)]
        yield from layer


def find_fooling_set(dfa: Dfa, target: int, max_len: int,
                     budget: int = DEFAULT_FOOLING_BUDGET) -> Optional[FoolingSet]:
    """Search for a fooling set of ``target`` pairs with words of length <= ``max_len``.

    A pair ``(x, y)`` only matters through ``p`` (the state reached on ``x``)
    and ``R`` (the states from which ``y`` is accepted), so candidates are the
    distinct ``(p, R)`` with ``p`` in ``R``, each represented by shortlex-least
    words. Two candidates are compatible unless ``p_i`` is in ``R_j`` and
    ``p_j`` is in ``R_i``; a fooling set is a clique of compatible candidates,
    found by degree-ordered backtracking.

    Returns None when no set is found among these candidates. Raises
    :class:`BudgetExceeded` if the candidate space or the search exceeds
    ``budget``.
    """
    k = dfa.k
    n_words = sum(k ** i for i in range(max_len + 1))
    if n_words * n_words > budget:
        raise BudgetExceeded(f"{n_words}^2 candidate pairs exceed budget {budget}")
    if target <= 0:
        return FoolingSet(())
    reach = _forward_closure(dfa.nfa, 1 << dfa.initial)
    states = [q for q in range(dfa.n) if reach >> q & 1]

    x_rep: dict = {}
    y_rep: dict = {}
    for w in _shortlex_words(k, max_len):
        p = dfa.run(w)
        x_rep.setdefault(p, w)
        r = 0
        for q in states:
            if dfa.is_final(dfa.run(w, q)):
                r |= 1 << q
        y_rep.setdefault(r, w)

    nodes = []  # (p, R, x, y) in a fixed order
    for r, y in y_rep.items():
        for p, x in x_rep.items():
            if r >> p & 1:
                nodes.append((p, r, x, y))
    if target == 1:
        return FoolingSet(((nodes[0][2], nodes[0][3]),)) if nodes else None

    m = len(nodes)
    adj = [0] * m
    for i in range(m):
        pi, ri = nodes[i][0], nodes[i][1]
        for j in range(i + 1, m):
            pj, rj = nodes[j][0], nodes[j][1]
            if not (rj >> pi & 1 and ri >> pj & 1):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    order = sorted(range(m), key=lambda i: -bin(adj[i]).count("1"))
    steps = [0]

    def extend(clique: list, cand: list) -> Optional[list]:
        if len(clique) == target:
            return clique
        if len(clique) + len(cand) < target:
            return None
        for idx, v in enumerate(cand):
            steps[0] += 1
            if steps[0] > budget:
                raise BudgetExceeded(f"clique search exceeded {budget} steps")
            rest = [u for u in cand[idx + 1:] if adj[v] >> u & 1]
            found = extend(clique + [v], rest)
            if found is not None:
                return found
            if len(clique) + len(cand) - idx - 1 < target:
                break
        return None

    found = extend([], order)
    if found is None:
        return None
    return FoolingSet(tuple((nodes[i][2], nodes[i][3]) for i in found))
