"""Seeded random automata.

All draws go through :class:`random.Random` (Mersenne Twister MT19937) seeded
with an integer, so a seed fixes every sample on every platform.
"""

from __future__ import annotations

import random
from typing import Optional

from nfakit.core import Dfa, Nfa

__all__ = ["make_rng", "random_nfa", "random_dfa", "alphabet_of"]


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def alphabet_of(k: int) -> tuple:
    return tuple(str(i) for i in range(k))


def random_nfa(rng: random.Random, n: int, k: int, all_final: bool = False,
               initial: Optional[int] = 0) -> Nfa:
    """Every state joins each target set with probability 1/2.

    The single initial state is ``initial`` (0 by default); each state is final
    with probability 1/2 unless ``all_final``.
    """
    delta = tuple(tuple(rng.getrandbits(n) for _ in range(k)) for _ in range(n))
    fin = (1 << n) - 1 if all_final else rng.getrandbits(n)
    return Nfa(n, alphabet_of(k), delta, 1 << initial, fin)


def random_dfa(rng: random.Random, n: int, k: int) -> Dfa:
    """Complete DFA with uniform targets, initial state 0, each state final with probability 1/2."""
    table = tuple(tuple(rng.randrange(n) for _ in range(k)) for _ in range(n))
    return Dfa(n, alphabet_of(k), table, 0, rng.getrandbits(n))
