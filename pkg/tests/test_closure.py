import pytest

from nfakit.closure import (
    ClosureKind,
    closure_violation,
    fact_nfa,
    is_factorial,
    is_prefix_closed,
    is_suffix_closed,
    pref_dfa,
    suff_nfa,
    to_all_final_nfa,
    to_all_initial_nfa,
    to_asif_nfa,
)
from nfakit.core import Dfa, Nfa, PreconditionError, accepts
from nfakit.families import witness_fact, witness_suff
from nfakit.oracles import (
    all_words,
    factorial_by_words,
    language_upto,
    prefix_closed_by_words,
    suffix_closed_by_words,
)
from nfakit.sampling import random_dfa, random_nfa
from nfakit.subset import determinize, equivalent, minimize, state_complexity

SIGMA_STAR = Dfa.build(("0", "1"), [(0, 0)], 0, [0])


def single_word_dfa():
    # exactly {"01"}
    return Dfa.build(("0", "1"), [(1, 3), (3, 2), (3, 3), (3, 3)], 0, [2])


def mindfa(m) -> Dfa:
    return minimize(determinize(m).dfa)


def words(m, max_len=4) -> set:
    return language_upto(m, max_len)


def test_pref_examples():
    d = single_word_dfa()
    assert words(pref_dfa(d)) == {(), (0,), (0, 1)}
    assert equivalent(pref_dfa(SIGMA_STAR), SIGMA_STAR)
    assert pref_dfa(d).n == d.n


def test_suff_examples():
    assert words(suff_nfa(single_word_dfa())) == {(), (1,), (0, 1)}
    assert state_complexity(suff_nfa(witness_suff(3))) == 7


def test_fact_examples():
    assert words(fact_nfa(single_word_dfa())) == {(), (0,), (1,), (0, 1)}
    f = fact_nfa(witness_fact(4))
    assert f.n == 3
    assert state_complexity(f) == 8
    all_coacc = Dfa.build(("0", "1"), [(1, 0), (0, 1)], 0, [0])
    assert state_complexity(fact_nfa(all_coacc)) == 1


def test_suff_nfa_bounded_prefix_oracle(rng):
    for _ in range(200):
        d = random_dfa(rng, rng.randint(1, 5), 2)
        s = suff_nfa(d)
        prefixes = list(all_words(2, d.n - 1))
        for w in all_words(2, 4):
            assert accepts(s, w) == any(accepts(d, u + w) for u in prefixes)


def test_suff_witness_never_reaches_empty_subset():
    for n in range(2, 9):
        assert frozenset() not in determinize(suff_nfa(witness_suff(n))).subsets


def test_closedness_examples():
    d = single_word_dfa()
    assert is_prefix_closed(pref_dfa(d))
    assert not is_prefix_closed(d)
    assert is_suffix_closed(SIGMA_STAR) and is_factorial(SIGMA_STAR)
    assert not is_suffix_closed(d)
    assert closure_violation(d, "suffix") == (1,)
    assert closure_violation(d, ClosureKind.PREFIX) == ()


def test_closedness_agrees_with_oracle(rng):
    closed_seen = {"prefix": 0, "suffix": 0, "factor": 0}
    for _ in range(500):
        d = random_dfa(rng, rng.randint(1, 6), 2)
        for cand in (d, pref_dfa(d), mindfa(suff_nfa(d)), mindfa(fact_nfa(d))):
            p, s, f = is_prefix_closed(cand), is_suffix_closed(cand), is_factorial(cand)
            assert p == prefix_closed_by_words(cand)
            assert s == suffix_closed_by_words(cand)
            assert f == factorial_by_words(cand)
            assert f == (p and s)
            closed_seen["prefix"] += p
            closed_seen["suffix"] += s
            closed_seen["factor"] += f
    # the derived candidates guarantee both outcomes are exercised
    assert min(closed_seen.values()) > 500


def test_violation_witness_is_genuine(rng):
    for _ in range(200):
        d = random_dfa(rng, rng.randint(1, 6), 2)
        w = closure_violation(d, "prefix")
        if w is not None:
            assert not accepts(d, w) and accepts(pref_dfa(d), w)
        w = closure_violation(d, "suffix")
        if w is not None:
            assert not accepts(d, w) and accepts(suff_nfa(d), w)
        w = closure_violation(d, "factor")
        if w is not None:
            assert not accepts(d, w) and accepts(fact_nfa(d), w)


def test_fact_of_anything_is_factorial(rng):
    for _ in range(100):
        d = random_dfa(rng, rng.randint(1, 6), 2)
        assert is_factorial(mindfa(fact_nfa(d)))


def test_to_all_final_examples():
    m = to_all_final_nfa(SIGMA_STAR)
    assert m.n == 1 and m.is_all_final and m.targets(0, 0) == {0}
    eps = Dfa.build(("0", "1"), [(1, 1), (1, 1)], 0, [0])
    m = to_all_final_nfa(eps)
    assert m.n == 1 and m.is_all_final and not list(m.transitions())


def test_to_all_initial_examples():
    m = to_all_initial_nfa(SIGMA_STAR)
    assert m.n == 1 and m.is_asif and m.targets(0, 1) == {0}


def test_to_asif_examples():
    m = to_asif_nfa(SIGMA_STAR)
    assert m.n == 1 and m.is_asif
    upto_one = Dfa.build(("0",), [(1,), (2,), (2,)], 0, [0, 1])
    m = to_asif_nfa(upto_one)
    assert m.n == 2 and m.is_asif
    chain = Nfa.build(("0",), 2, [(0, "0", 1)], [0, 1], [0, 1])
    assert equivalent(m, chain)


def test_characterizations_reject_bad_input():
    d = single_word_dfa()
    for fn in (to_all_final_nfa, to_all_initial_nfa, to_asif_nfa):
        with pytest.raises(PreconditionError):
            fn(d)
        with pytest.raises(PreconditionError):
            fn(SIGMA_STAR.with_final(0))


def test_characterization_roundtrips(rng):
    done = 0
    while done < 300:
        d = random_dfa(rng, rng.randint(1, 6), 2)
        if not language_upto(d, d.n):
            continue
        done += 1
        p = pref_dfa(d)
        m = to_all_final_nfa(p)
        assert m.is_all_final and m.is_single_initial and equivalent(m, p)
        s = mindfa(suff_nfa(d))
        m = to_all_initial_nfa(s)
        assert m.is_all_initial and len(m.final) == 1 and equivalent(m, s)
        f = mindfa(fact_nfa(d))
        m = to_asif_nfa(f)
        assert m.is_asif and equivalent(m, f)


def test_all_final_nfas_are_prefix_closed(rng):
    for _ in range(300):
        m = random_nfa(rng, rng.randint(1, 5), 2, all_final=True)
        assert is_prefix_closed(mindfa(m))
        asif = m.replace(initial_mask=m.full_mask)
        assert is_factorial(mindfa(asif))


def test_closure_identities(rng):
    for _ in range(200):
        d = random_dfa(rng, rng.randint(1, 6), 2)
        assert equivalent(pref_dfa(pref_dfa(d)), pref_dfa(d))
        fact = fact_nfa(d)
        assert equivalent(fact, suff_nfa(pref_dfa(d)))
        assert equivalent(fact, pref_dfa(mindfa(suff_nfa(d))))
        assert equivalent(suff_nfa(mindfa(suff_nfa(d))), suff_nfa(d))


def test_closure_upper_bounds(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        d = random_dfa(rng, n, 2)
        assert state_complexity(suff_nfa(d)) <= (1 << n) - 1
        assert state_complexity(fact_nfa(d)) <= 1 << (n - 1)
        assert state_complexity(pref_dfa(d)) <= n
