"""Universality-preserving transformations onto restricted NFA classes.

Each reduction maps an NFA ``M`` to ``M'`` with ``L(M) = Σ*`` iff ``L(M') = Δ*``;
:func:`certify` checks that property exactly by determinization, which is only
feasible for small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from nfakit.core import Nfa, PreconditionError, _bits, _forward_closure, restrict
from nfakit.subset import BudgetExceeded, universal
from nfakit import subset

__all__ = [
    "HASH",
    "MORPHISM",
    "ReductionCertificate",
    "asf_reduction",
    "asif_reduction",
    "recode_4_to_2",
    "split_initial",
    "separate_incoming_labels",
    "recode_morphism",
    "attach_return_gadget",
    "make_asif",
    "asf3_to_asif2",
    "augment_hash_asf",
    "augment_hash_asif",
    "apply_morphism",
    "REDUCTIONS",
    "certify",
]

HASH = "#"
# letter index -> code over {"0", "1"}
MORPHISM = ("1", "10", "100")
GADGET_STATES = 3


def _initial_state(m: Nfa) -> int:
    if not m.is_single_initial:
        raise PreconditionError(f"expected exactly one initial state, got {sorted(m.initial)}")
    return m.initial_mask.bit_length() - 1


def _add_hash(m: Nfa, q0: int) -> Nfa:
    if HASH in m.alphabet:
        raise PreconditionError(f"alphabet already contains {HASH!r}")
    delta = tuple(
        row + ((1 << q0) if m.final_mask >> p & 1 else 0,) for p, row in enumerate(m.delta)
    )
    return m.replace(alphabet=m.alphabet + (HASH,), delta=delta)


def asf_reduction(m: Nfa) -> Nfa:
    """Add ``#`` edges from every final state back to the initial state, then make all states final."""
    q0 = _initial_state(m)
    out = _add_hash(m, q0)
    return out.replace(final_mask=out.full_mask)


def asif_reduction(m: Nfa) -> Nfa:
    """Drop states unreachable from the initial state, add ``#`` edges as in
    :func:`asf_reduction`, then make every state initial and final."""
    _initial_state(m)
    m = restrict(m, _forward_closure(m, m.initial_mask))
    out = _add_hash(m, m.initial_mask.bit_length() - 1)
    return out.replace(initial_mask=out.full_mask, final_mask=out.full_mask)


def recode_4_to_2(m: Nfa) -> Nfa:
    """Binary recoding of a 4-letter all-final NFA.

    Letter ``c`` becomes the two bits of ``c`` (``0 -> 00``, ``1 -> 01``,
    ``2 -> 10``, ``3 -> 11``). State ``A`` keeps its id; ``A0 = n + A`` and
    ``A1 = 2n + A`` are reached from ``A`` on the first bit and carry ``A``'s
    targets on the second bit.
    """
    if m.k != 4:
        raise PreconditionError(f"expected a 4-letter alphabet, got {m.k}")
    if not m.is_all_final:
        raise PreconditionError("expected every state to be final")
    n = m.n
    rows = [[0, 0] for _ in range(3 * n)]
    for a in range(n):
        rows[a][0] = 1 << (n + a)
        rows[a][1] = 1 << (2 * n + a)
        for c in range(4):
            hi, lo = divmod(c, 2)
            rows[(1 + hi) * n + a][lo] |= m.delta[a][c]
    full = (1 << (3 * n)) - 1
    return Nfa(3 * n, ("0", "1"), tuple(tuple(r) for r in rows), m.initial_mask, full,
               tuple(list(range(n)) + [-1] * (2 * n)))


# -- ASF over three letters to ASIF over two letters ------------------------


def split_initial(m: Nfa) -> Nfa:
    """Give the initial state ``q0`` a twin ``p0`` (new id ``n``) so nothing enters ``q0``.

    ``p0`` copies the outgoing edges of ``q0`` and takes over all incoming ones.
    """
    q0 = _initial_state(m)
    bit0, bitp = 1 << q0, 1 << m.n
    rows = []
    for row in m.delta:
        rows.append(tuple((t & ~bit0) | bitp if t & bit0 else t for t in row))
    rows.append(rows[q0])
    fin = m.final_mask | (bitp if m.final_mask & bit0 else 0)
    origin = tuple(m.origin or range(m.n)) + (q0,)
    return Nfa(m.n + 1, m.alphabet, tuple(rows), m.initial_mask, fin, origin)


def _in_labels(m: Nfa) -> list:
    labels = [0] * m.n
    for _, a, q in m.transitions():
        labels[q] |= 1 << a
    return labels


def separate_incoming_labels(m: Nfa) -> Nfa:
    """Replicate states so that all edges entering a state carry the same letter.

    The initial state must have no incoming edges. Every other state ``q`` gets
    one copy per letter actually used on an edge into ``q``; copies share
    ``q``'s outgoing edges. States without incoming edges are unreachable and
    disappear. The initial state becomes state 0.
    """
    q0 = _initial_state(m)
    labels = _in_labels(m)
    if labels[q0]:
        raise PreconditionError("initial state has incoming transitions; apply split_initial first")
    ids = {(q0, None): 0}
    for q in range(m.n):
        if q != q0:
            for a in _bits(labels[q]):
                ids[(q, a)] = len(ids)
    rows = [[0] * m.k for _ in ids]
    fin = 0
    for (p, _), i in ids.items():
        for b in range(m.k):
            for r in _bits(m.delta[p][b]):
                rows[i][b] |= 1 << ids[(r, b)]
        if m.final_mask >> p & 1:
            fin |= 1 << i
    base = m.origin
    origin = tuple(base[p] if base else p for (p, _) in ids)
    return Nfa(len(ids), m.alphabet, tuple(tuple(r) for r in rows), 1, fin, origin)


def incoming_label(m: Nfa, q: int) -> Optional[int]:
    """The unique letter on edges into ``q`` (None if there are none)."""
    labels = _in_labels(m)[q]
    if not labels:
        return None
    if labels & (labels - 1):
        raise PreconditionError(f"state {q} has incoming edges on several letters")
    return labels.bit_length() - 1


def recode_morphism(m: Nfa) -> Nfa:
    """Spell every letter ``c`` as ``MORPHISM[c]`` over ``{0, 1}``.

    Requires uniform incoming labels. A state entered on a multi-bit code gets
    a private chain of intermediate ("new") states, shared by all of its
    predecessors, so exactly the paths of the original survive. Old states keep
    their ids and finality; new states follow them and are not final, hence
    ``L(result) = h(L(m))``.
    """
    if m.k != len(MORPHISM):
        raise PreconditionError(f"expected a {len(MORPHISM)}-letter alphabet, got {m.k}")
    labels = [incoming_label(m, q) for q in range(m.n)]
    # entry[q]: state that a predecessor of q moves to on the leading "1"
    entry = list(range(m.n))
    chain_edges = []
    nxt = m.n
    for q, c in enumerate(labels):
        if c is None or len(MORPHISM[c]) == 1:
            continue
        chain = list(range(nxt, nxt + len(MORPHISM[c]) - 1))
        nxt += len(chain)
        entry[q] = chain[0]
        for s, t in zip(chain, chain[1:] + [q]):
            chain_edges.append((s, t))
    rows = [[0, 0] for _ in range(nxt)]
    for p, c, q in m.transitions():
        rows[p][1] |= 1 << entry[q]
    for s, t in chain_edges:
        rows[s][0] |= 1 << t
    origin = tuple(m.origin or range(m.n)) + (-1,) * (nxt - m.n)
    return Nfa(nxt, ("0", "1"), tuple(tuple(r) for r in rows), m.initial_mask, m.final_mask, origin)


def attach_return_gadget(m: Nfa, old_count: int) -> Nfa:
    """Allow ``1 0^k`` (k >= 3) from every old state back to the initial state.

    One shared gadget ``a -0-> b -0-> c``, ``c -0-> c``, ``c -0-> q0`` is added
    and every old state (ids below ``old_count``, the initial state included)
    gets an edge to ``a`` on ``1``. None of the gadget states reads ``1``.
    """
    q0 = _initial_state(m)
    if m.alphabet != ("0", "1"):
        raise PreconditionError("expected the binary alphabet ('0', '1')")
    a, b, c = m.n, m.n + 1, m.n + 2
    rows = [list(r) for r in m.delta] + [[1 << b, 0], [1 << c, 0], [(1 << c) | (1 << q0), 0]]
    for p in range(old_count):
        rows[p][1] |= 1 << a
    origin = tuple(m.origin or range(m.n)) + (-1,) * GADGET_STATES
    return Nfa(m.n + GADGET_STATES, m.alphabet, tuple(tuple(r) for r in rows), m.initial_mask, m.final_mask, origin)


def make_asif(m: Nfa) -> Nfa:
    return m.replace(initial_mask=m.full_mask, final_mask=m.full_mask)


def asf3_to_asif2(m: Nfa) -> Nfa:
    """Reduce a 3-letter all-final NFA to a binary NFA with all states initial and final.

    Five stages: :func:`split_initial`, :func:`separate_incoming_labels`,
    :func:`recode_morphism`, :func:`attach_return_gadget`, :func:`make_asif`.
    For ``n`` input states the output has at most ``18n + 4`` states: at most
    ``3n + 1`` old states, at most two intermediate states per non-initial old
    state, and three gadget states.
    """
    if m.k != 3:
        raise PreconditionError(f"expected a 3-letter alphabet, got {m.k}")
    if not m.is_all_final:
        raise PreconditionError("expected every state to be final")
    separated = separate_incoming_labels(split_initial(m))
    recoded = recode_morphism(separated)
    return make_asif(attach_return_gadget(recoded, separated.n))


def apply_morphism(word: Sequence[int]) -> tuple:
    """Image of a word over {0,1,2} under the recoding, as binary symbol indices."""
    return tuple(int(ch) for c in word for ch in MORPHISM[c])


# -- shortest-rejected augmentation ----------------------------------------


def _require_epsilon(m: Nfa) -> int:
    q0 = _initial_state(m)
    if not m.final_mask >> q0 & 1:
        raise PreconditionError("the empty word must be accepted (initial state final)")
    return q0


def augment_hash_asf(m: Nfa) -> Nfa:
    _require_epsilon(m)
    return asf_reduction(m)


def augment_hash_asif(m: Nfa) -> Nfa:
    """``#`` edges from final states to the initial state; then every state initial and final."""
    q0 = _require_epsilon(m)
    return make_asif(_add_hash(m, q0))


REDUCTIONS: dict = {
    "asf": asf_reduction,
    "asif": asif_reduction,
    "recode4to2": recode_4_to_2,
    "asf3-asif2": asf3_to_asif2,
    "augment-asf": augment_hash_asf,
    "augment-asif": augment_hash_asif,
}


@dataclass(frozen=True)
class ReductionCertificate:
    name: str
    input: Nfa
    output: Nfa
    input_universal: Optional[bool]
    output_universal: Optional[bool]
    checked_at_scale: bool

    @property
    def holds(self) -> bool:
        return self.checked_at_scale and self.input_universal == self.output_universal

    def to_dict(self) -> dict:
        from nfakit.io import to_dict

        return {
            "reduction": self.name,
            "input": to_dict(self.input),
            "output": to_dict(self.output),
            "input_universal": self.input_universal,
            "output_universal": self.output_universal,
            "checked_at_scale": self.checked_at_scale,
        }


def certify(name: str, m: Nfa, limit: int = 1 << 16,
            reduction: Optional[Callable[[Nfa], Nfa]] = None) -> ReductionCertificate:
    """Apply a named reduction and compare universality of input and output exactly.

    If either subset construction exceeds ``limit`` states the certificate is
    returned unchecked.
    """
    fn = reduction or REDUCTIONS[name]
    out = fn(m)
    try:
        u_in = universal(subset.determinize(m, limit).dfa)
        u_out = universal(subset.determinize(out, limit).dfa)
    except BudgetExceeded:
        return ReductionCertificate(name, m, out, None, None, False)
    return ReductionCertificate(name, m, out, u_in, u_out, True)
