from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotacycle.cycles import (
    Cycle,
    NoSuchCycle,
    ReducedWordSpec,
    a_terms,
    build_cycle,
    canonical_parity,
    compute_A,
    cycle_count_comparison,
    cycle_from_member,
    cycle_from_parity,
    enumerate_cycles,
    existence_report,
    first_appearance_c,
    is_primitive,
    max_structure_check,
    parity,
    reduce_cycle,
    scale_cycle,
    shared_parity_check,
    smallest_member,
    spec_from_parity,
    step,
    z_map,
)
from rotacycle.words import BinaryWord, max_rotation, period, rotations, word

PARITY_3N11 = "11101011100100"
CYCLE_3N11 = (13, 25, 43, 70, 35, 58, 29, 49, 79, 124, 62, 31, 52, 26)
CYCLE_3N9823 = (
    11609, 22325, 38399, 62510, 31255, 51794, 25897,
    43757, 70547, 110732, 55366, 27683, 46436, 23218,
)
CYCLE_3N13 = (319, 485, 734, 367, 557, 842, 421, 638)


def all_parity_vectors(max_l):
    for l in range(1, max_l + 1):
        for v in range(1, 1 << l):
            yield parity(format(v, f"0{l}b"))


def naive_cycles(k, c, bound):
    """Walk from every start; a start is on a cycle iff it returns to itself within the bound."""
    found = set()
    for x in range(1, bound + 1):
        seen = {x}
        y = step(x, k, c)
        while y <= bound and y not in seen:
            seen.add(y)
            y = step(y, k, c)
        if y == x:
            orbit = [x]
            while (y := step(orbit[-1], k, c)) != x:
                orbit.append(y)
            i = orbit.index(min(orbit))
            found.add(tuple(orbit[i:] + orbit[:i]))
    return sorted(found)


# --- step


@pytest.mark.parametrize("x, k, c, expected", [(319, 3, 13, 485), (638, 3, 13, 319), (13, 3, 11, 25)])
def test_step_examples(x, k, c, expected):
    assert step(x, k, c) == expected


@pytest.mark.parametrize("k, c", [(4, 1), (3, 2), (1, 1), (3, 0)])
def test_step_rejects_bad_params(k, c):
    with pytest.raises(ValueError):
        step(5, k, c)


def test_step_walks_3n13_cycle():
    for i, x in enumerate(CYCLE_3N13):
        assert step(x, 3, 13) == CYCLE_3N13[(i + 1) % 8]


# --- z


def test_z_examples():
    assert z_map(word("11011010")) == 319
    assert z_map(word("01011011")) == 842
    assert z_map(word(PARITY_3N11)) == 11609
    assert word(PARITY_3N11).positions() == [0, 1, 2, 4, 6, 7, 8, 11]


def test_z_rejects_zero_word():
    with pytest.raises(ValueError):
        z_map(word("000"))


def test_z_k_direct_sum():
    b = word("1011")
    # positions 0, 2, 3
    assert z_map(b, 5) == 25 * 1 + 5 * 4 + 1 * 8


# --- reduced words and A


@pytest.mark.parametrize(
    "text, pairs",
    [(PARITY_3N11, ((3, 1), (1, 1), (3, 2), (1, 2))), ("10", ((1, 1),)), ("11000", ((2, 3),))],
)
def test_spec_from_parity(text, pairs):
    spec = spec_from_parity(parity(text))
    assert spec.pairs == pairs
    assert str(spec.to_parity()) == text


def test_spec_requires_canonical_rotation():
    with pytest.raises(ValueError):
        spec_from_parity(parity("0110"))
    with pytest.raises(ValueError):
        ReducedWordSpec(((1, 0),))


def test_a_terms_3n11_vector():
    spec = spec_from_parity(parity(PARITY_3N11))
    assert a_terms(spec) == [4617, 1296, 3648, 2048]
    assert compute_A(spec) == 11609


@pytest.mark.parametrize("pairs, expected", [(((2, 3),), 5), (((1, 1), (1, 2)), 7)])
def test_compute_A_small_shapes(pairs, expected):
    assert compute_A(ReducedWordSpec(pairs)) == expected


def test_A_is_k_minus_2_times_z():
    # run-wise sum of geometric series: A = (k - 2) * z_k
    for pv in all_parity_vectors(10):
        if not pv.is_canonical:
            continue
        spec = spec_from_parity(pv)
        for k in (3, 5, 7, 9):
            assert compute_A(spec, k) == (k - 2) * z_map(pv, k)


# --- smallest member


def test_smallest_member_examples():
    assert smallest_member(spec_from_parity(parity(PARITY_3N11)), 3, 11) == 13
    assert 11 * 11609 == 9823 * 13
    assert smallest_member(ReducedWordSpec(((2, 3),)), 3, 23) == 5
    assert smallest_member(ReducedWordSpec(((1, 1),)), 3, 1) == 1


def test_smallest_member_flags_non_integral():
    v = smallest_member(ReducedWordSpec(((2, 3),)), 3, 1)
    assert v == Fraction(5, 23) and v.denominator != 1


def test_smallest_member_positivity_error():
    with pytest.raises(NoSuchCycle) as exc:
        smallest_member(ReducedWordSpec(((2, 1),)), 3, 1)
    assert exc.value.predicate == "positivity"


# --- build_cycle


def test_build_cycle_examples():
    assert build_cycle(spec_from_parity(parity(PARITY_3N11)), 3, 11).members == CYCLE_3N11
    assert build_cycle(ReducedWordSpec(((2, 3),)), 3, 23).members == (5, 19, 40, 20, 10)
    assert build_cycle(spec_from_parity(parity(PARITY_3N11)), 3, 9823).members == CYCLE_3N9823


def test_build_cycle_3n13_from_bmax():
    cyc = build_cycle(spec_from_parity(word("11011010")), 3, 2**8 - 3**5)
    assert cyc.members == CYCLE_3N13
    assert max(cyc.members) == 842


def test_build_cycle_no_such_cycle():
    with pytest.raises(NoSuchCycle) as exc:
        build_cycle(ReducedWordSpec(((2, 3),)), 3, 1)
    assert exc.value.predicate == "integrality"


def test_build_cycle_periodic_word_gives_fundamental_cycle():
    assert build_cycle(spec_from_parity(parity("1010")), 3, 1).members == (1, 2)


def test_build_cycle_starts_at_smallest_for_any_canonical_rotation():
    # 10010 is canonical but its start value 11 is not the smallest member
    assert smallest_member(spec_from_parity(parity("10010")), 3, 23) == 11
    assert build_cycle(spec_from_parity(parity("10010")), 3, 23).members == (7, 22, 11, 28, 14)


def test_canonical_parity_rotates_to_least_z():
    canon, r = canonical_parity(parity("00111010111001"))
    assert str(canon) == PARITY_3N11
    assert r == 2


def test_cycle_from_member():
    assert cycle_from_member(27683, 3, 9823).members == CYCLE_3N9823
    with pytest.raises(NoSuchCycle):
        cycle_from_member(3, 3, 1, max_length=50)


def test_cycle_type_validates():
    with pytest.raises(ValueError):
        Cycle(3, 13, (485, 734))
    with pytest.raises(ValueError):
        Cycle(3, 13, (485,) + CYCLE_3N13[2:] + (319,))


# --- existence report


def test_existence_3n11_vector():
    report = existence_report(parity(PARITY_3N11), 3, 11)
    assert report.positivity and report.z_divisibility
    assert 11 * 11609 % (2**14 - 3**8) == 0


def test_existence_positivity_fails_for_all_ones():
    for l in range(1, 8):
        assert not existence_report(parity("1" * l), 3, 1).positivity


def test_existence_divides_c_is_not_necessary():
    report = existence_report(parity("10"), 3, 5)
    assert not report.divides_c
    # yet (5, 10) is a 3n+5 cycle with parity 10
    assert (5, 10) in [c.members for c in enumerate_cycles(3, 5, 100)]
    assert report.z_divisibility


# --- first appearance, primitivity, reduction


@pytest.mark.parametrize("text, expected", [(PARITY_3N11, 11), ("11000", 23), ("10", 1)])
def test_first_appearance(text, expected):
    assert first_appearance_c(parity(text)) == expected


def test_first_appearance_3n11_by_euclid():
    assert gcd(11609, 9823) == 893
    assert 9823 // 893 == 11


def test_first_appearance_positivity_error():
    with pytest.raises(NoSuchCycle):
        first_appearance_c(parity("1101"))


def test_is_primitive():
    assert is_primitive(Cycle(3, 11, CYCLE_3N11))
    assert not is_primitive(Cycle(3, 69, (15, 57, 120, 60, 30)))
    assert not is_primitive(Cycle(3, 9823, CYCLE_3N9823))


def test_reduce_cycle():
    big = Cycle(3, 9823, CYCLE_3N9823)
    assert reduce_cycle(big, 893) == Cycle(3, 11, CYCLE_3N11)
    assert reduce_cycle(big, 1) == big
    assert reduce_cycle(Cycle(3, 69, (15, 57, 120, 60, 30)), 3) == Cycle(3, 23, (5, 19, 40, 20, 10))
    with pytest.raises(ValueError):
        reduce_cycle(Cycle(3, 11, CYCLE_3N11), 11)


@given(st.sampled_from(["10", "11000", "10100", PARITY_3N11, "1110100", "110100"]), st.integers(0, 20))
def test_scale_then_reduce_is_identity(text, t):
    a = 2 * t + 1
    cyc = build_cycle(spec_from_parity(parity(text)), 3, first_appearance_c(parity(text)))
    assert reduce_cycle(scale_cycle(cyc, a), a) == cyc


# --- max structure


@pytest.mark.parametrize("members, c", [(CYCLE_3N11, 11), ((5, 19, 40, 20, 10), 23), ((1, 2), 1)])
def test_max_structure(members, c):
    assert max_structure_check(Cycle(3, c, members))


# --- enumeration oracle


def test_enumerate_examples():
    found = [c.members for c in enumerate_cycles(3, 13, 1000)]
    assert (13, 26) in found and CYCLE_3N13 in found
    assert [c.members for c in enumerate_cycles(3, 1, 10)] == [(1, 2)]
    assert CYCLE_3N11 in [c.members for c in enumerate_cycles(3, 11, 200)]


@pytest.mark.parametrize("k, c", [(3, 1), (3, 5), (3, 13), (3, 17), (5, 1), (5, 3), (7, 5), (3, 69)])
def test_enumerate_matches_naive_walk(k, c):
    assert [cyc.members for cyc in enumerate_cycles(k, c, 3000)] == naive_cycles(k, c, 3000)


def test_enumerate_is_ordered_and_bounded(oracle):
    cycles = oracle(3, 13, 10**5)
    mins = [c.members[0] for c in cycles]
    assert mins == sorted(mins)
    assert all(max(c.members) <= 10**5 for c in cycles)


# --- shared parity


def test_shared_parity_coprime_is_empty(oracle):
    assert shared_parity_check(3, 5, 7, 10_000) == []


def test_shared_parity_primitivity_filter():
    assert shared_parity_check(3, 11, 9823, 200_000) == []
    ours = [c for c in enumerate_cycles(3, 9823, 200_000) if c.members == CYCLE_3N9823]
    assert ours and not ours[0].primitive


def test_shared_parity_requires_distinct_c():
    with pytest.raises(ValueError):
        shared_parity_check(3, 5, 5, 100)


def test_cycle_count_comparison_is_observational():
    report = cycle_count_comparison(3, 5, 3, 2000)
    assert report["count_ac"] >= report["count_c"]


# --- properties against the oracle


def closed_form_cycles(k, c, max_l, bound):
    """Cycles predicted by the closed form for every parity vector up to ``max_l``."""
    out = set()
    for pv in all_parity_vectors(max_l):
        if pv.zeros == 0 or (1 << pv.length) <= k**pv.ones or not pv.is_canonical:
            continue
        v = smallest_member(spec_from_parity(pv), k, c)
        if v.denominator == 1:
            cyc = build_cycle(spec_from_parity(pv), k, c)
            if max(cyc.members) <= bound:
                out.add(cyc.members)
    return out


@pytest.mark.parametrize("c", [1, 5, 7, 11, 13, 23, 65, 69, 85])
def test_closed_form_matches_oracle_l14(c, oracle):
    bound = 10**5
    predicted = closed_form_cycles(3, c, 14, bound)
    found = {cyc.members for cyc in oracle(3, c, bound) if len(cyc) <= 14}
    assert predicted == found
    for cyc in oracle(3, c, bound):
        assert smallest_member(spec_from_parity(cyc.parity), 3, c) == cyc.members[0]


def test_every_oracle_cycle_passes_necessary_conditions(oracle):
    for k in (3, 5, 7):
        for c in range(1, 100, 2):
            for cyc in oracle(k, c, 10**4):
                report = existence_report(cyc.parity, k, c)
                assert report.positivity and report.z_divisibility


def test_first_appearance_is_primitive_l12():
    for pv in all_parity_vectors(12):
        if pv.zeros == 0 or (1 << pv.length) <= 3**pv.ones:
            continue
        c = first_appearance_c(pv)
        cyc = cycle_from_parity(pv, 3, c)
        assert cyc.primitive
        assert len(cyc) == period(pv)
        if pv.length <= 9:
            # no smaller c realizes the vector
            z, den = z_map(pv), (1 << pv.length) - 3**pv.ones
            assert all(d * z % den for d in range(1, c, 2))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30).flatmap(lambda l: st.tuples(st.just(l), st.integers(1, (1 << l) - 2))))
def test_integrality_is_rotation_invariant(lv):
    l, v = lv
    pv = parity(format(v, f"0{l}b"))
    for k in (3, 5):
        d = (1 << l) - k**pv.ones
        if d <= 0:
            continue
        for c in (1, 5, 7, d):
            flags = {c * z_map(r, k) % d == 0 for r in rotations(pv)}
            assert len(flags) == 1


# --- z and cycles at c = 2^l - 3^N1


def test_z_images_are_the_cycle_at_c_equal_D():
    for pv in all_parity_vectors(10):
        d = (1 << pv.length) - 3**pv.ones
        if pv.zeros == 0 or d <= 0 or period(pv) != pv.length:
            continue
        cyc = cycle_from_parity(pv, 3, d)
        zs = [z_map(r) for r in rotations(pv)]
        assert sorted(cyc.members) == sorted(zs)
        assert cyc.members[0] == min(zs)


def test_bmax_gives_least_member_for_3n13():
    b = word("10110101")
    assert z_map(max_rotation(b)) == min(z_map(r) for r in rotations(b)) == 319


def test_bmax_is_not_always_least_z():
    # 110010 is its own max rotation, yet 101100 has the smaller z
    b = word("110010")
    assert max_rotation(b) == b
    assert z_map(b) == 31
    assert z_map(word("101100")) == 29
    assert cycle_from_parity(b, 3, 2**6 - 3**3).members[0] == 29


# --- generalized k


def test_generalized_closed_form_k5_k7(oracle):
    for k in (5, 7):
        for c in range(1, 100, 2):
            for cyc in oracle(k, c, 10**5):
                spec = spec_from_parity(cyc.parity)
                d = (k - 2) * ((1 << len(cyc)) - k**cyc.ones)
                assert Fraction(c * compute_A(spec, k), d) == cyc.members[0]


def test_generalized_first_appearance_k5():
    # 5n+1 has the cycle (1, 3, 8, 4, 2) with parity 11000
    assert [1, 3, 8, 4, 2] == [1, step(1, 5, 1), step(3, 5, 1), 4, 2]
    assert first_appearance_c(parity("11000"), 5) == 1
    assert build_cycle(ReducedWordSpec(((2, 3),)), 5, 1).members == (1, 3, 8, 4, 2)
