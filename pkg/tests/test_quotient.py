import itertools
import random

import pytest

from charp import Ideal, PolyRing, QuotientRing, membership_oracle
from support import fermat_ring, random_poly


def test_lift_includes_defining_ideal():
    R = fermat_ring(2)
    x, y, z = R.ambient.gens()
    g = x**3 + y**3 + z**3
    L = R.lift([x, y])
    assert set(L.gens) == {x, y, g}


def test_project_equal_examples():
    R = fermat_ring(2)
    x, y, z = R.ambient.gens()
    g = x**3 + y**3 + z**3
    S = R.ambient
    assert R.project_equal(Ideal(S, [x]), Ideal(S, [x, g]))
    assert not R.project_equal(Ideal(S, [x]), Ideal(S, [y]))
    # independent check for the negative case: x - y is not reachable from
    # {y, g} by products of degree <= 1, and the ideal is homogeneous
    assert not membership_oracle(x - y, [y, g], 1)


def test_poor_regular_sequence_examples():
    S = PolyRing(2, ["x", "y"])
    x, y = S.gens()
    R = QuotientRing(S, [])
    assert R.is_poor_regular_sequence([x, y]).ok
    bad = R.is_poor_regular_sequence([x, x])
    assert not bad.ok and bad.failure_index == 1
    fermat = fermat_ring(2)
    fx, fy, _ = fermat.ambient.gens()
    assert fermat.is_poor_regular_sequence([fx, fy]).ok


def test_poor_regular_sequence_zero_element():
    S = PolyRing(2, ["x", "y"])
    x, _ = S.gens()
    R = QuotientRing(S, [])
    check = R.is_poor_regular_sequence([x, S.zero()])
    assert not check.ok and check.failure_index == 1
    # 0 is a nonzerodivisor on the zero module: (1, 0) passes
    assert R.is_poor_regular_sequence([S.one(), S.zero()]).ok
    with pytest.raises(ValueError):
        R.is_poor_regular_sequence([])


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_poor_regular_sequence_permutation_invariance(p):
    R = fermat_ring(p)
    x, y, z = R.ambient.gens()
    seqs = [[x, y], [x + y, y], [x**2, y**2]]
    for seq in seqs:
        results = {R.is_poor_regular_sequence(list(perm)).ok
                   for perm in itertools.permutations(seq)}
        assert len(results) == 1


def test_system_of_parameters_examples():
    R = fermat_ring(2)
    x, y, z = R.ambient.gens()
    assert R.dimension == 2
    assert R.is_system_of_parameters([x, y])
    assert not R.is_system_of_parameters([x])
    assert not R.is_system_of_parameters([x, y, z])
    assert not R.is_system_of_parameters([x, x])  # wrong dimension after cut


def test_system_of_parameters_rejects_bad_input():
    R = fermat_ring(2)
    x, y, _ = R.ambient.gens()
    with pytest.raises(ValueError):
        R.is_system_of_parameters([x + x**2, y])  # not homogeneous
    with pytest.raises(ValueError):
        R.is_system_of_parameters([R.ambient.one(), y])  # degree 0
    with pytest.raises(ValueError):
        R.is_system_of_parameters([R.ambient.zero(), y])


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cm_link_sops_are_regular_sequences(p):
    # hypersurface quotients are Cohen-Macaulay, so systems of parameters
    # must pass the regular-sequence check; exercised on the Fermat family
    R = fermat_ring(p)
    x, y, z = R.ambient.gens()
    assert R.cm_hint
    rng = random.Random(p)
    candidates = [[x, y], [y, z], [x + y, z], [x + z, y]]
    for _ in range(4):
        f = random_poly(rng, R.ambient, max_degree=1, max_terms=2)
        h = random_poly(rng, R.ambient, max_degree=1, max_terms=2)
        if not f.is_zero and not h.is_zero and f.is_homogeneous() and h.is_homogeneous():
            candidates.append([f, h])
    for seq in candidates:
        try:
            is_sop = R.is_system_of_parameters(seq)
        except ValueError:
            continue
        if is_sop:
            assert R.is_poor_regular_sequence(seq).ok


def test_cm_hint_rules():
    S = PolyRing(2, ["x", "y", "z"])
    x, y, z = S.gens()
    assert QuotientRing(S, []).cm_hint  # polynomial ring
    assert QuotientRing(S, [x * y]).cm_hint  # principal
    assert QuotientRing(S, [x, y]).cm_hint  # complete intersection
    assert not QuotientRing(S, [x * y, x * z]).cm_hint  # not a regular sequence
    assert QuotientRing(S, [x * y, x * z], cm_hint=True).cm_hint  # user override


def test_dimension_cache_consistency():
    R = fermat_ring(3)
    assert R.dimension == R.defining.krull_dimension()
