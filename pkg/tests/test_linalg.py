import random

from charp import DenseMembershipOracle, Ideal, PolyRing, membership_oracle
from charp.linalg import GFRowSpace, monomials_up_to
from support import fermat_ring, random_poly


def test_row_space_basics():
    V = GFRowSpace(3, 5)
    assert V.insert([1, 2, 0])
    assert V.insert([0, 1, 1])
    assert not V.insert([1, 3, 1])  # the sum, already in the span
    assert V.contains([2, 4, 0])
    assert not V.contains([0, 0, 1])
    assert V.rank() == 2


def test_row_space_membership_matches_enumeration():
    rng = random.Random(12)
    p = 3
    for _ in range(10):
        rows = [[rng.randrange(p) for _ in range(4)] for _ in range(3)]
        V = GFRowSpace(4, p)
        for r in rows:
            V.insert(r)
        # enumerate the actual span
        span = set()
        for c0 in range(p):
            for c1 in range(p):
                for c2 in range(p):
                    v = tuple(
                        (c0 * rows[0][i] + c1 * rows[1][i] + c2 * rows[2][i]) % p
                        for i in range(4)
                    )
                    span.add(v)
        for v in span:
            assert V.contains(list(v))
        assert len(span) == p ** V.rank()


def test_monomials_up_to():
    ms = monomials_up_to(2, 2)
    assert ms == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_oracle_positive_answers_are_members():
    ring = PolyRing(2, ["x", "y"])
    rng = random.Random(3)
    for _ in range(10):
        gens = [random_poly(rng, ring) for _ in range(2)]
        I = Ideal(ring, gens)
        oracle = DenseMembershipOracle(ring, gens, 5)
        for _ in range(5):
            f = random_poly(rng, ring, max_degree=3)
            if oracle.contains(f):
                assert f in I


def test_fermat_degree_facts():
    # the two dense-linear-algebra facts behind the closure golden values
    R = fermat_ring(2)
    x, y, z = R.ambient.gens()
    g = x**3 + y**3 + z**3
    assert not membership_oracle(z**2, [x, y, g], 2)
    assert membership_oracle(z**4, [x**2, y**2, g], 4)
