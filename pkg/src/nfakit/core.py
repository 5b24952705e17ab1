"""Automaton data model and the basic language operations.

States are dense integers ``0..n-1``. Internally every set of states is a Python
int bitmask; the public surface hands out ``frozenset`` objects (``StateSet``).
Words are tuples of symbol indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, Union

StateSet = frozenset
Word = tuple

__all__ = [
    "AutomatonError",
    "PreconditionError",
    "Nfa",
    "Dfa",
    "UnaryAsfResult",
    "to_mask",
    "from_mask",
    "encode_word",
    "format_word",
    "step",
    "accepts",
    "reachable",
    "coaccessible",
    "trim",
    "reverse",
    "complement",
    "difference_witness",
    "unary_asf_analyze",
    "unary_asf_inequivalent",
]


class AutomatonError(ValueError):
    """Malformed automaton, bad symbol, or mismatched alphabets."""


class PreconditionError(ValueError):
    """An operation was applied outside the class of automata it is defined on."""


def to_mask(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def from_mask(mask: int) -> frozenset:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_alphabet(alphabet: Sequence[str]) -> tuple:
    alphabet = tuple(alphabet)
    if any(not isinstance(a, str) or not a for a in alphabet):
        raise AutomatonError(f"symbol names must be non-empty strings: {alphabet!r}")
    if len(set(alphabet)) != len(alphabet):
        raise AutomatonError(f"duplicate symbol names in alphabet {alphabet!r}")
    return alphabet


def encode_word(alphabet: Sequence[str], word: Union[str, Sequence]) -> Word:
    """Turn a word given by names (or indices) into a tuple of symbol indices.

    A plain string is split into characters when every symbol name is a single
    character, and on whitespace otherwise. ``"ε"`` denotes the empty word.
    """
    lookup = {name: i for i, name in enumerate(alphabet)}
    if isinstance(word, str):
        if word in ("", "ε"):
            return ()
        if all(len(a) == 1 for a in alphabet):
            parts: Sequence = list(word)
        else:
            parts = word.split()
    else:
        parts = word
    out = []
    for p in parts:
        if isinstance(p, int) and not isinstance(p, bool):
            if not 0 <= p < len(alphabet):
                raise AutomatonError(f"symbol index {p} outside alphabet of size {len(alphabet)}")
            out.append(p)
        elif p in lookup:
            out.append(lookup[p])
        else:
            raise AutomatonError(f"unknown symbol {p!r}; alphabet is {list(alphabet)}")
    return tuple(out)


def format_word(alphabet: Sequence[str], word: Sequence[int]) -> str:
    if not word:
        return "ε"
    sep = "" if all(len(a) == 1 for a in alphabet) else " "
    return sep.join(alphabet[a] for a in word)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with any number of initial states.

    ``delta[q][a]`` is the target mask of state ``q`` on symbol ``a`` (0 means
    no transition). ``origin``, when present, maps each state to the state of
    the automaton it was derived from; it does not take part in equality.
    """

    n: int
    alphabet: tuple
    delta: tuple
    initial_mask: int
    final_mask: int
    origin: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        if self.n < 0:
            raise AutomatonError(f"negative state count {self.n}")
        full = (1 << self.n) - 1
        k = len(self.alphabet)
        if len(self.delta) != self.n or any(len(row) != k for row in self.delta):
            raise AutomatonError("transition table shape does not match states x alphabet")
        for row in self.delta:
            for m in row:
                if m & ~full:
                    raise AutomatonError(f"transition target outside 0..{self.n - 1}")
        if self.initial_mask & ~full or self.final_mask & ~full:
            raise AutomatonError(f"initial/final state outside 0..{self.n - 1}")
        if self.origin is not None and len(self.origin) != self.n:
            raise AutomatonError("origin map must have one entry per state")

    @classmethod
    def build(
        cls,
        alphabet: Sequence[str],
        n: int,
        transitions: Iterable[tuple] = (),
        initial: Iterable[int] = (0,),
        final: Iterable[int] = (),
        origin: Optional[Sequence[int]] = None,
    ) -> "Nfa":
        """Build from ``(source, symbol, target)`` triples; symbols by name or index."""
        alphabet = _check_alphabet(alphabet)
        k = len(alphabet)
        rows = [[0] * k for _ in range(n)]
        for p, a, q in transitions:
            (a,) = encode_word(alphabet, [a])
            if not (0 <= p < n and 0 <= q < n):
                raise AutomatonError(f"transition ({p}, {alphabet[a]}, {q}) has a state outside 0..{n - 1}")
            rows[p][a] |= 1 << q
        for q in list(initial) + list(final):
            if not 0 <= q < n:
                raise AutomatonError(f"state {q} outside 0..{n - 1}")
        return cls(
            n,
            alphabet,
            tuple(tuple(r) for r in rows),
            to_mask(initial),
            to_mask(final),
            tuple(origin) if origin is not None else None,
        )

    @property
    def k(self) -> int:
        return len(self.alphabet)

    @property
    def states(self) -> frozenset:
        return frozenset(range(self.n))

    @property
    def initial(self) -> frozenset:
        return from_mask(self.initial_mask)

    @property
    def final(self) -> frozenset:
        return from_mask(self.final_mask)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def targets(self, q: int, a: Union[int, str]) -> frozenset:
        (a,) = encode_word(self.alphabet, [a])
        return from_mask(self.delta[q][a])

    def transitions(self) -> Iterator[tuple]:
        for p in range(self.n):
            for a in range(self.k):
                for q in _bits(self.delta[p][a]):
                    yield p, a, q

    def flat_delta(self) -> list:
        return [m for row in self.delta for m in row]

    # structural flags
    @property
    def is_all_final(self) -> bool:
        return self.final_mask == self.full_mask

    @property
    def is_all_initial(self) -> bool:
        return self.initial_mask == self.full_mask

    @property
    def is_asif(self) -> bool:
        return self.is_all_final and self.is_all_initial

    @property
    def is_single_initial(self) -> bool:
        return bin(self.initial_mask).count("1") == 1

    @property
    def is_unary(self) -> bool:
        return self.k == 1

    @property
    def is_deterministic(self) -> bool:
        """True iff this NFA is a complete DFA in disguise."""
        return self.is_single_initial and all(
            m and not (m & (m - 1)) for row in self.delta for m in row
        )

    def replace(self, **changes) -> "Nfa":
        fields = dict(
            n=self.n,
            alphabet=self.alphabet,
            delta=self.delta,
            initial_mask=self.initial_mask,
            final_mask=self.final_mask,
            origin=self.origin,
        )
        fields.update(changes)
        return Nfa(**fields)

    def encode(self, word) -> Word:
        return encode_word(self.alphabet, word)

    def decode(self, word: Sequence[int]) -> str:
        return format_word(self.alphabet, word)

    def to_dfa(self) -> "Dfa":
        if not self.is_deterministic:
            raise AutomatonError("automaton is not a complete deterministic automaton")
        table = tuple(tuple(m.bit_length() - 1 for m in row) for row in self.delta)
        return Dfa(self.n, self.alphabet, table, self.initial_mask.bit_length() - 1, self.final_mask)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton; ``table[q][a]`` is the successor state."""

    n: int
    alphabet: tuple
    table: tuple
    initial: int
    final_mask: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        if self.n < 1:
            raise AutomatonError("a complete DFA needs at least one state")
        if not 0 <= self.initial < self.n:
            raise AutomatonError(f"initial state {self.initial} outside 0..{self.n - 1}")
        if len(self.table) != self.n or any(len(r) != len(self.alphabet) for r in self.table):
            raise AutomatonError("transition table shape does not match states x alphabet")
        if any(not 0 <= t < self.n for r in self.table for t in r):
            raise AutomatonError(f"transition target outside 0..{self.n - 1}")
        if self.final_mask & ~((1 << self.n) - 1):
            raise AutomatonError(f"final state outside 0..{self.n - 1}")

    @classmethod
    def build(cls, alphabet: Sequence[str], table: Sequence[Sequence[int]], initial: int = 0,
              final: Iterable[int] = ()) -> "Dfa":
        return cls(len(table), tuple(alphabet), tuple(tuple(r) for r in table), initial, to_mask(final))

    @property
    def k(self) -> int:
        return len(self.alphabet)

    @property
    def final(self) -> frozenset:
        return from_mask(self.final_mask)

    def is_final(self, q: int) -> bool:
        return bool(self.final_mask >> q & 1)

    def run(self, word: Sequence[int], start: Optional[int] = None) -> int:
        q = self.initial if start is None else start
        for a in word:
            q = self.table[q][a]
        return q

    def with_initial(self, q: int) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.table, q, self.final_mask)

    def with_final(self, mask: int) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.table, self.initial, mask)

    def encode(self, word) -> Word:
        return encode_word(self.alphabet, word)

    def decode(self, word: Sequence[int]) -> str:
        return format_word(self.alphabet, word)

    @cached_property
    def nfa(self) -> Nfa:
        """The same automaton viewed as an NFA."""
        delta = tuple(tuple(1 << t for t in row) for row in self.table)
        return Nfa(self.n, self.alphabet, delta, 1 << self.initial, self.final_mask)


Automaton = Union[Nfa, Dfa]


def _as_nfa(m: Automaton) -> Nfa:
    return m.nfa if isinstance(m, Dfa) else m


def _step_mask(nfa: Nfa, s: int, a: int) -> int:
    t = 0
    for q in _bits(s):
        t |= nfa.delta[q][a]
    return t


def step(nfa: Nfa, states: Iterable[int], a: Union[int, str]) -> frozenset:
    """Union of ``delta(q, a)`` over ``q`` in ``states``."""
    (a,) = encode_word(nfa.alphabet, [a])
    s = to_mask(states)
    if s & ~nfa.full_mask:
        raise AutomatonError(f"state set {sorted(from_mask(s))} not valid for {nfa.n} states")
    return from_mask(_step_mask(nfa, s, a))


def accepts(m: Automaton, word) -> bool:
    w = encode_word(m.alphabet, word)
    if isinstance(m, Dfa):
        return m.is_final(m.run(w))
    s = m.initial_mask
    for a in w:
        s = _step_mask(m, s, a)
        if not s:
            return False
    return bool(s & m.final_mask)


def _forward_closure(nfa: Nfa, start: int) -> int:
    seen = start
    todo = list(_bits(start))
    while todo:
        p = todo.pop()
        for m in nfa.delta[p]:
            new = m & ~seen
            if new:
                seen |= new
                todo.extend(_bits(new))
    return seen


def _backward_closure(nfa: Nfa, target: int) -> int:
    preds: list[int] = [0] * nfa.n
    for p, _, q in nfa.transitions():
        preds[q] |= 1 << p
    seen = target
    todo = list(_bits(target))
    while todo:
        q = todo.pop()
        new = preds[q] & ~seen
        if new:
            seen |= new
            todo.extend(_bits(new))
    return seen


def reachable(m: Automaton) -> frozenset:
    nfa = _as_nfa(m)
    return from_mask(_forward_closure(nfa, nfa.initial_mask))


def coaccessible(m: Automaton) -> frozenset:
    """States from which some word leads into a final state."""
    nfa = _as_nfa(m)
    return from_mask(_backward_closure(nfa, nfa.final_mask))


def restrict(nfa: Nfa, keep: int) -> Nfa:
    """Sub-automaton on the states in mask ``keep``, renumbered in increasing order."""
    old = list(_bits(keep))
    new_id = {q: i for i, q in enumerate(old)}

    def remap(mask: int) -> int:
        r = 0
        for q in _bits(mask & keep):
            r |= 1 << new_id[q]
        return r

    delta = tuple(tuple(remap(m) for m in nfa.delta[q]) for q in old)
    base = nfa.origin
    origin = tuple(base[q] if base is not None else q for q in old)
    return Nfa(len(old), nfa.alphabet, delta, remap(nfa.initial_mask), remap(nfa.final_mask), origin)


def trim(nfa: Nfa) -> Nfa:
    """Keep only states that are reachable and coaccessible.

    The result's ``origin`` gives, for each new state, its id in ``nfa``.
    """
    keep = _forward_closure(nfa, nfa.initial_mask) & _backward_closure(nfa, nfa.final_mask)
    return restrict(nfa, keep)


def reverse(m: Automaton) -> Nfa:
    nfa = _as_nfa(m)
    rows = [[0] * nfa.k for _ in range(nfa.n)]
    for p, a, q in nfa.transitions():
        rows[q][a] |= 1 << p
    return Nfa(nfa.n, nfa.alphabet, tuple(tuple(r) for r in rows), nfa.final_mask, nfa.initial_mask)


def complement(dfa: Dfa) -> Dfa:
    return dfa.with_final(((1 << dfa.n) - 1) & ~dfa.final_mask)


def difference_witness(d1: Dfa, d2: Dfa) -> Optional[Word]:
    """Shortest word in L(d1) minus L(d2), lexicographically least among those.

    Breadth-first search over the product automaton, expanding symbols in
    index order. Returns None when L(d1) is contained in L(d2).
    """
    if d1.alphabet != d2.alphabet:
        raise AutomatonError(f"alphabet mismatch: {list(d1.alphabet)} vs {list(d2.alphabet)}")
    start = (d1.initial, d2.initial)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if d1.is_final(p) and not d2.is_final(q):
            word = []
            while parent[pair] is not None:
                pair, a = parent[pair]
                word.append(a)
            return tuple(reversed(word))
        for a in range(d1.k):
            nxt = (d1.table[p][a], d2.table[q][a])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return None


@dataclass(frozen=True)
class UnaryAsfResult:
    """Language of a unary all-final NFA: ``a*`` or ``{ε, a, ..., a^bound}``.

    ``bound == -1`` encodes the empty language.
    """

    all_words: bool
    bound: int = -1

    @property
    def kind(self) -> str:
        return "all-words" if self.all_words else "finite"

    def __str__(self) -> str:
        return "a*" if self.all_words else f"finite up to a^{self.bound}"


def unary_asf_analyze(nfa: Nfa) -> UnaryAsfResult:
    """Decide the language of a unary NFA whose states are all final.

    With every state final the language is either all of ``a*`` (a cycle is
    reachable) or ``{ε, ..., a^i}``; membership of ``a^n`` separates the two.
    Runs ``O(n)`` set steps.
    """
    if not nfa.is_unary:
        raise PreconditionError(f"expected a unary automaton, alphabet has {nfa.k} symbols")
    if not nfa.is_all_final:
        raise PreconditionError("expected every state to be final")
    if bin(nfa.initial_mask).count("1") > 1:
        raise PreconditionError("expected at most one initial state")
    s = nfa.initial_mask
    longest = -1
    for i in range(nfa.n + 1):
        if not s:
            break
        longest = i
        s = _step_mask(nfa, s, 0)
    if longest == nfa.n:
        return UnaryAsfResult(True)
    return UnaryAsfResult(False, longest)


def unary_asf_inequivalent(n1: Nfa, n2: Nfa) -> bool:
    return unary_asf_analyze(n1) != unary_asf_analyze(n2)
