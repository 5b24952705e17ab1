"""Brute-force reference implementations used to cross-check the fast paths."""

from __future__ import annotations

from collections import deque
from typing import Iterator

from nfakit.core import Dfa

__all__ = ["all_words", "language_upto", "prefix_closed_by_words", "suffix_closed_by_words",
           "factorial_by_words"]


def all_words(k: int, max_len: int) -> Iterator[tuple]:
    """Every word over ``k`` symbols of length at most ``max_len``, in shortlex order."""
    layer = [()]
    yield ()
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in range(k)]
        yield from layer


def language_upto(m, max_len: int) -> set:
    from nfakit.core import accepts

    return {w for w in all_words(m.k, max_len) if accepts(m, w)}


def _words_by_configuration(dfa: Dfa, starts: list) -> Iterator[tuple]:
    """Shortlex words u, skipping any u whose tuple of states reached from ``starts``
    was already produced. Every behaviour of the tuple is covered, so checks
    that depend only on that tuple see every case after finitely many words
    (at most n^len(starts))."""
    seen = {tuple(starts)}
    queue = deque([((), tuple(starts))])
    while queue:
        w, conf = queue.popleft()
        yield w, conf
        for a in range(dfa.k):
            nxt = tuple(dfa.table[s][a] for s in conf)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((w + (a,), nxt))


def prefix_closed_by_words(dfa: Dfa) -> bool:
    """Check ``ua in L implies u in L`` for enough words u."""
    for _, (s,) in _words_by_configuration(dfa, [dfa.initial]):
        if not dfa.is_final(s) and any(dfa.is_final(dfa.table[s][a]) for a in range(dfa.k)):
            return False
    return True


def suffix_closed_by_words(dfa: Dfa) -> bool:
    """Check ``au in L implies u in L`` for every letter a and enough words u."""
    starts = [dfa.initial] + [dfa.table[dfa.initial][a] for a in range(dfa.k)]
    for _, conf in _words_by_configuration(dfa, starts):
        if not dfa.is_final(conf[0]) and any(dfa.is_final(s) for s in conf[1:]):
            return False
    return True


def factorial_by_words(dfa: Dfa) -> bool:
    return prefix_closed_by_words(dfa) and suffix_closed_by_words(dfa)
