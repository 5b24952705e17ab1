import pytest

from nfakit.core import Nfa, PreconditionError, accepts, encode_word
from nfakit.oracles import all_words
from nfakit.reductions import (
    GADGET_STATES,
    apply_morphism,
    asf3_to_asif2,
    asf_reduction,
    asif_reduction,
    attach_return_gadget,
    augment_hash_asf,
    augment_hash_asif,
    certify,
    incoming_label,
    make_asif,
    recode_4_to_2,
    recode_morphism,
    separate_incoming_labels,
    split_initial,
)
from nfakit.sampling import random_nfa
from nfakit.subset import equivalent, shortest_rejected, universal


def universal_1state(k: int) -> Nfa:
    alpha = tuple(str(i) for i in range(k))
    return Nfa.build(alpha, 1, [(0, a, 0) for a in alpha], [0], [0])


def sample(rng, count, max_n, k, all_final=False):
    return [random_nfa(rng, rng.randint(1, max_n), k, all_final=all_final) for _ in range(count)]


def test_asf_reduction_examples():
    out = asf_reduction(universal_1state(2))
    assert out.alphabet == ("0", "1", "#") and out.is_all_final
    assert universal(out)
    dead = Nfa.build(("0", "1"), 1, [(0, "0", 0), (0, "1", 0)], [0], [])
    out = asf_reduction(dead)
    assert not accepts(out, "#")


def test_asif_reduction_examples():
    out = asif_reduction(universal_1state(2))
    assert out.is_asif and universal(out)
    junk = Nfa.build(("0", "1"), 3, [(0, "0", 0), (0, "1", 0), (1, "0", 2), (2, "1", 1)], [0], [0])
    assert asif_reduction(junk).n == 1


def test_reductions_reject_bad_input():
    multi = Nfa.build(("0", "1"), 2, [], [0, 1], [0])
    for fn in (asf_reduction, asif_reduction, augment_hash_asf, augment_hash_asif):
        with pytest.raises(PreconditionError):
            fn(multi)
    hashed = Nfa.build(("0", "#"), 1, [], [0], [0])
    with pytest.raises(PreconditionError):
        asf_reduction(hashed)
    with pytest.raises(PreconditionError):
        recode_4_to_2(universal_1state(3))
    with pytest.raises(PreconditionError):
        recode_4_to_2(universal_1state(4).replace(final_mask=0))
    with pytest.raises(PreconditionError):
        asf3_to_asif2(universal_1state(2))
    no_eps = Nfa.build(("0",), 2, [(0, "0", 1)], [0], [1])
    with pytest.raises(PreconditionError):
        augment_hash_asf(no_eps)
    with pytest.raises(PreconditionError):
        augment_hash_asif(no_eps)


def test_asf_asif_iff(rng):
    for m in sample(rng, 500, 4, 2):
        u = universal(m)
        assert universal(asf_reduction(m)) == u
        assert universal(asif_reduction(m)) == u


def test_asf_asif_iff_unary_inputs(rng):
    for m in sample(rng, 200, 4, 1):
        assert certify("asf", m).holds and certify("asif", m).holds


def test_output_flags_and_sizes(rng):
    for m in sample(rng, 100, 4, 2):
        a = asf_reduction(m)
        assert a.is_all_final and a.n == m.n
        b = asif_reduction(m)
        assert b.is_asif and b.n <= m.n


def test_recode_examples():
    out = recode_4_to_2(universal_1state(4))
    assert out.alphabet == ("0", "1") and out.n == 3 and out.is_all_final
    assert universal(out)


def test_recode_iff(rng):
    for m in sample(rng, 200, 3, 4, all_final=True):
        out = recode_4_to_2(m)
        assert out.n == 3 * m.n and out.is_all_final
        assert universal(out) == universal(m)


def test_recode_simulates_letter_pairs(rng):
    for m in sample(rng, 50, 3, 4, all_final=True):
        out = recode_4_to_2(m)
        for w in all_words(4, 3):
            code = tuple(bit for c in w for bit in divmod(c, 2))
            assert accepts(out, code) == accepts(m, w)


def test_asf3_universal_example():
    out = asf3_to_asif2(universal_1state(3))
    assert out.alphabet == ("0", "1") and out.is_asif
    assert universal(out)


def test_gadget_needed_at_initial_state():
    # two consecutive returns: the second starts at the initial state
    out = asf3_to_asif2(universal_1state(3))
    assert accepts(out, "10001000")


def test_stage_split_initial(rng):
    for m in sample(rng, 100, 3, 3, all_final=True):
        s = split_initial(m)
        q0 = next(iter(s.initial))
        assert incoming_label(s, q0) is None
        assert equivalent(s, m)


def test_stage_separate_labels(rng):
    for m in sample(rng, 100, 3, 3, all_final=True):
        s = separate_incoming_labels(split_initial(m))
        assert s.initial == {0}
        for q in range(1, s.n):
            assert incoming_label(s, q) is not None
        assert s.n <= 3 * m.n + 1
        assert equivalent(s, m)
    with pytest.raises(PreconditionError):
        separate_incoming_labels(universal_1state(3))


def test_stage_recode_is_morphic_image(rng):
    for m in sample(rng, 60, 3, 3, all_final=True):
        sep = separate_incoming_labels(split_initial(m))
        rec = recode_morphism(sep)
        assert rec.initial == sep.initial and rec.final == sep.final
        for w in all_words(3, 4):
            assert accepts(rec, apply_morphism(w)) == accepts(m, w)
        # nothing outside h(Σ*) is accepted
        image = {apply_morphism(w) for w in all_words(3, 7)}
        for v in all_words(2, 7):
            if accepts(rec, v):
                assert v in image


def test_stage_gadget_shape():
    m = universal_1state(3)
    sep = separate_incoming_labels(split_initial(m))
    rec = recode_morphism(sep)
    g = attach_return_gadget(rec, sep.n)
    assert g.n == rec.n + GADGET_STATES
    a, b, c = rec.n, rec.n + 1, rec.n + 2
    for s in (a, b, c):
        assert not g.targets(s, 1)
    assert g.targets(a, 0) == {b} and g.targets(b, 0) == {c} and g.targets(c, 0) == {c, 0}
    for p in range(sep.n):
        assert a in g.targets(p, 1)
    assert make_asif(g).is_asif


def test_asf3_iff(rng):
    for m in sample(rng, 200, 3, 3, all_final=True):
        out = asf3_to_asif2(m)
        assert out.is_asif and out.n <= 18 * m.n + 4
        assert universal(out) == universal(m)


def test_augment_examples():
    univ = universal_1state(2)
    assert universal(augment_hash_asf(univ))
    out = augment_hash_asif(univ)
    assert out.is_asif and universal(out)


def test_augment_properties(rng):
    done = 0
    while done < 300:
        m = random_nfa(rng, rng.randint(1, 4), 2)
        if not m.final_mask & 1 or universal(m):
            continue
        done += 1
        w = shortest_rejected(m)
        h = encode_word(("0", "1", "#"), "#")
        a = augment_hash_asf(m)
        assert a.is_all_final
        assert len(shortest_rejected(a)) >= len(w)
        assert not accepts(a, w + h)
        b = augment_hash_asif(m)
        assert b.is_asif
        assert not universal(b)
        assert not accepts(b, h + w + h)


def test_certificate_fields():
    cert = certify("asf", universal_1state(2))
    assert cert.checked_at_scale and cert.input_universal and cert.output_universal and cert.holds
    doc = cert.to_dict()
    assert doc["reduction"] == "asf" and doc["output"]["alphabet"] == ["0", "1", "#"]


def test_certificate_unchecked_over_limit():
    from nfakit.families import witness_all_final

    cert = certify("asf", witness_all_final(8), limit=10)
    assert not cert.checked_at_scale and not cert.holds
