import pytest
from hypothesis import given, strategies as st

from meander.compositions import (Composition, RootSubset, SpecError, canonicalize_seaweed_D,
                                  composition_to_subset_A, composition_to_subset_BC,
                                  composition_to_subset_D, has_crossing, is_admissible,
                                  normalize_excluded, seaweed, subset_to_composition_A,
                                  subset_to_composition_BC, subset_to_composition_D,
                                  subsets_of_spec, symmetrize)

from conftest import all_pairs, compositions


def test_composition_drops_zero_parts():
    c = Composition((2, 0, 3, 0))
    assert c.parts == (2, 3) and c.sum() == 5
    assert c.reverse().parts == (3, 2)
    assert str(Composition()) == "∅"


def test_composition_rejects_negative_parts():
    with pytest.raises(SpecError):
        Composition((2, -1))


@given(st.lists(st.integers(0, 6), max_size=8))
def test_reverse_is_involution(parts):
    c = Composition(parts)
    assert c.reverse().reverse() == c
    assert c.reverse().sum() == c.sum()


def test_parse():
    assert Composition.parse("2,4,3").parts == (2, 4, 3)
    assert Composition.parse("") == Composition()


def test_root_subset_bounds():
    with pytest.raises(SpecError):
        RootSubset(3, [4])


# type A

def test_subset_to_composition_A():
    # complement {2, 6} in gl_9
    S = RootSubset(9, [i for i in range(1, 9) if i not in (2, 6)])
    assert subset_to_composition_A(9, S).parts == (2, 4, 3)
    assert subset_to_composition_A(5, RootSubset(5, range(1, 5))).parts == (5,)
    assert subset_to_composition_A(5, RootSubset(5)).parts == (1,) * 5


def test_subset_to_composition_A_rejects_alpha_n():
    with pytest.raises(SpecError):
        subset_to_composition_A(5, RootSubset(5, [5]))


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_A(n):
    for m in range(1 << (n - 1)):
        S = RootSubset.from_mask(n, m)
        assert composition_to_subset_A(subset_to_composition_A(n, S)) == S


# type D

def test_subset_to_composition_D_examples():
    n = 5
    assert subset_to_composition_D(n, RootSubset(n)) == (Composition((1,) * 5), True)
    assert subset_to_composition_D(n, RootSubset(n, [1, 2, 3, 4])) == (Composition((5,)), True)
    a, ok = subset_to_composition_D(n, RootSubset.full(n))
    assert ok and a.sum() == 0
    assert subset_to_composition_D(n, RootSubset(n, [1, 2, 3, 5])) == (None, False)


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_D(n):
    for m in range(1 << n):
        S = RootSubset.from_mask(n, m)
        a, ok = subset_to_composition_D(n, S)
        assert ok == is_admissible(n, S)
        if not ok:
            continue
        # so_2 has no roots: S = {alpha_1} gives the empty composition
        assert a.sum() == n or a.sum() <= n - 2 or n == 1
        assert composition_to_subset_D(a, n) == S


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_BC(n):
    for m in range(1 << n):
        S = RootSubset.from_mask(n, m)
        a = subset_to_composition_BC(n, S)
        assert composition_to_subset_BC(a, n) == S


def test_canonicalize_examples():
    n = 5
    q = canonicalize_seaweed_D(n, RootSubset(n, [1, 2, 3, 5]), RootSubset(n, [1, 2, 3, 4]))
    assert (q.a.parts, q.b.parts, q.crossing) == ((5,), (5,), True)
    q = canonicalize_seaweed_D(n, RootSubset(n, [1, 3, 5]), RootSubset(n, [2, 3, 4]))
    assert (q.a.parts, q.b.parts, q.crossing) == ((2, 3), (1, 4), True)
    q = canonicalize_seaweed_D(n, RootSubset(n, [1, 3]), RootSubset(n, [1, 2, 4]))
    assert (q.a.parts, q.b.parts, q.crossing) == ((2, 2, 1), (3, 2), False)


@pytest.mark.parametrize("n", range(2, 7))
def test_canonicalize_swap_symmetry(n):
    for S, T in all_pairs(n):
        p, q = canonicalize_seaweed_D(n, S, T), canonicalize_seaweed_D(n, T, S)
        assert (p.a, p.b, p.crossing) == (q.b, q.a, q.crossing)
        if has_crossing(n, S, T):
            assert is_admissible(n, S) != is_admissible(n, T)


@pytest.mark.parametrize("n", range(2, 7))
def test_subsets_of_spec_inverts_canonicalization(n):
    for S, T in all_pairs(n):
        spec = canonicalize_seaweed_D(n, S, T)
        S2, T2 = subsets_of_spec(spec)
        assert canonicalize_seaweed_D(n, S2, T2) == spec


def test_symmetrize():
    assert symmetrize((2, 2), 4).parts == (2, 2, 2, 2)
    assert symmetrize((1, 1), 4).parts == (1, 1, 4, 1, 1)
    assert symmetrize((1,) * 5, 5, "B").parts == (1,) * 11
    with pytest.raises(SpecError):
        symmetrize((3, 3), 5)


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))).flatmap(
    lambda nk: st.tuples(st.just(nk[0]), compositions(nk[1]) if nk[1] else st.just(()))))
def test_symmetrize_palindromic(n_a):
    n, a = n_a
    for variant, total in (("D_or_C", 2 * n), ("B", 2 * n + 1)):
        s = symmetrize(a, n, variant)
        assert s.sum() == total
        assert s.parts == s.reverse().parts


def test_normalize_excluded():
    assert normalize_excluded((2, 2), 5).parts == (2, 2, 1)
    assert normalize_excluded((2, 2), 4).parts == (2, 2)
    assert normalize_excluded((), 1).parts == (1,)


def test_spec_invariants():
    with pytest.raises(SpecError):
        seaweed("A", 3, (1, 2), (2,))
    with pytest.raises(SpecError):
        seaweed("C", 3, (4,), ())
    with pytest.raises(SpecError):
        seaweed("D", 4, (2, 2), (3, 1), crossing=True)  # b_t = 1
    with pytest.raises(SpecError):
        seaweed("D", 4, (2,), (4,), crossing=True)
    with pytest.raises(SpecError):
        seaweed("B", 3, (3,), (3,), crossing=True)
    # a composition of n - 1 is read as (a, 1)
    assert seaweed("D", 5, (2, 2), (5,)).a.parts == (2, 2, 1)


def test_tie_alters_below():
    assert seaweed("D", 4, (4,), (4,), crossing=True).crossing_side == "below"
    assert seaweed("D", 4, (1, 3), (2, 2), crossing=True).crossing_side == "above"
