"""Prefix, suffix and factor closures, closedness tests for DFAs, and the
constructions turning closed languages into restricted NFAs."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from nfakit.core import (
    Dfa,
    Nfa,
    PreconditionError,
    Word,
    _backward_closure,
    _forward_closure,
    difference_witness,
    restrict,
    reverse,
    trim,
)
from nfakit.subset import determinize, minimize

__all__ = [
    "ClosureKind",
    "pref_dfa",
    "suff_nfa",
    "fact_nfa",
    "closure_violation",
    "is_prefix_closed",
    "is_suffix_closed",
    "is_factorial",
    "to_all_final_nfa",
    "to_all_initial_nfa",
    "to_asif_nfa",
]


class ClosureKind(str, Enum):
    PREFIX = "prefix"
    SUFFIX = "suffix"
    FACTOR = "factor"


def _coaccessible_mask(dfa: Dfa) -> int:
    return _backward_closure(dfa.nfa, dfa.final_mask)


def _reachable_states(dfa: Dfa) -> list:
    mask = _forward_closure(dfa.nfa, 1 << dfa.initial)
    return [q for q in range(dfa.n) if mask >> q & 1]


def pref_dfa(dfa: Dfa) -> Dfa:
    """Same DFA with every state that can reach a final state made final."""
    return dfa.with_final(_coaccessible_mask(dfa))


def suff_nfa(dfa: Dfa) -> Nfa:
    """NFA for suff(L): the DFA's own transitions, every reachable state initial."""
    nfa = dfa.nfa
    return nfa.replace(initial_mask=_forward_closure(nfa, nfa.initial_mask))


def fact_nfa(dfa: Dfa) -> Nfa:
    """NFA for fact(L): the trim part of the DFA with all states initial and final."""
    t = trim(dfa.nfa)
    return t.replace(initial_mask=t.full_mask, final_mask=t.full_mask)


def closure_violation(dfa: Dfa, kind: ClosureKind | str) -> Optional[Word]:
    """A word in closure(L) but not in L, or None when L is closed.

    For suffix and factor closure the start states are tried in increasing
    order and the first witness found is returned.
    """
    kind = ClosureKind(kind)
    if kind is ClosureKind.PREFIX:
        return difference_witness(pref_dfa(dfa), dfa)
    coacc = _coaccessible_mask(dfa)
    for i in _reachable_states(dfa):
        shifted = dfa.with_initial(i)
        if kind is ClosureKind.FACTOR:
            shifted = shifted.with_final(coacc)
        w = difference_witness(shifted, dfa)
        if w is not None:
            return w
    return None


def is_prefix_closed(dfa: Dfa) -> bool:
    return closure_violation(dfa, ClosureKind.PREFIX) is None


def is_suffix_closed(dfa: Dfa) -> bool:
    return closure_violation(dfa, ClosureKind.SUFFIX) is None


def is_factorial(dfa: Dfa) -> bool:
    return closure_violation(dfa, ClosureKind.FACTOR) is None


def _require_nonempty(dfa: Dfa) -> None:
    if not (_forward_closure(dfa.nfa, 1 << dfa.initial) & dfa.final_mask):
        raise PreconditionError("language is empty; the characterization covers nonempty languages only")


def to_all_final_nfa(dfa: Dfa) -> Nfa:
    """All-final, single-initial NFA accepting a nonempty prefix-closed L(dfa)."""
    _require_nonempty(dfa)
    w = closure_violation(dfa, ClosureKind.PREFIX)
    if w is not None:
        raise PreconditionError(f"language is not prefix-closed: {dfa.decode(w)!r} is a prefix but not a member")
    part = restrict(dfa.nfa, _coaccessible_mask(dfa))
    return part.replace(final_mask=part.full_mask)


def to_all_initial_nfa(dfa: Dfa) -> Nfa:
    """All-initial NFA with exactly one final state for a nonempty suffix-closed L(dfa).

    The reversal of a suffix-closed language is prefix-closed, so build the
    all-final NFA for the reversed language and reverse it back.
    """
    _require_nonempty(dfa)
    w = closure_violation(dfa, ClosureKind.SUFFIX)
    if w is not None:
        raise PreconditionError(f"language is not suffix-closed: {dfa.decode(w)!r} is a suffix but not a member")
    rev = minimize(determinize(reverse(dfa)).dfa)
    return reverse(to_all_final_nfa(rev))


def to_asif_nfa(dfa: Dfa) -> Nfa:
    """NFA with every state initial and final for a nonempty factorial L(dfa)."""
    _require_nonempty(dfa)
    w = closure_violation(dfa, ClosureKind.FACTOR)
    if w is not None:
        raise PreconditionError(f"language is not factorial: {dfa.decode(w)!r} is a factor but not a member")
    t = trim(dfa.nfa)
    return t.replace(initial_mask=t.full_mask, final_mask=t.full_mask)
