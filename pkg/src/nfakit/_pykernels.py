"""Pure-Python hot loops: subset construction and Moore partition refinement.

State sets are Python ints used as bitmasks (bit q set iff state q is a member).
Transition tables are flat lists indexed by ``state * nsymbols + symbol``.
"""

from __future__ import annotations


class SubsetLimitExceeded(Exception):
    """Raised when a subset construction discovers more states than allowed."""


def determinize(nsym: int, delta: list[int], init: int, limit: int = 0) -> tuple[list[int], list[int]]:
    """Breadth-first subset construction.

    Returns ``(subsets, table)``: ``subsets[i]`` is the mask of DFA state ``i``
    in discovery order (state 0 is ``init``), and ``table[i * nsym + a]`` is its
    successor on symbol ``a``. Symbols are expanded in index order.
    """
    index = {init: 0}
    subsets = [init]
    table: list[int] = []
    i = 0
    while i < len(subsets):
        s = subsets[i]
        for a in range(nsym):
            t = 0
            bits = s
            while bits:
                low = bits & -bits
                t |= delta[(low.bit_length() - 1) * nsym + a]
                bits ^= low
            j = index.get(t)
            if j is None:
                j = len(subsets)
                if limit and j >= limit:
                    raise SubsetLimitExceeded(limit)
                index[t] = j
                subsets.append(t)
            table.append(j)
        i += 1
    return subsets, table


def refine(n: int, nsym: int, table: list[int], final: list[bool]) -> list[int]:
    """Moore refinement; returns a block id for every state.

    Block ids are numbered by first occurrence in state order, so the result
    is a deterministic function of the input.
    """
    if n == 0:
        return []
    block = [0] * n
    if any(final) and not all(final):
        first = final[0]
        block = [0 if f == first else 1 for f in final]
    count = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new = [0] * n
        for q in range(n):
            base = q * nsym
            key = (block[q],) + tuple(block[table[base + a]] for a in range(nsym))
            b = sigs.get(key)
            if b is None:
                b = sigs[key] = len(sigs)
            new[q] = b
        block = new
        if len(sigs) == count:
            return block
        count = len(sigs)


def state_complexity(nsym: int, delta: list[int], init: int, final_mask: int, limit: int = 0) -> int:
    subsets, table = determinize(nsym, delta, init, limit)
    final = [bool(s & final_mask) for s in subsets]
    return len(set(refine(len(subsets), nsym, table, final)))
