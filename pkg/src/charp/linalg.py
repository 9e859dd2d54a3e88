"""Dense exact linear algebra over F_p, used as an independent membership
oracle.

This is the only place a dense, degree-truncated polynomial representation
appears: membership of f in an ideal, restricted to witnesses of bounded
degree, becomes the question of whether f's coefficient vector lies in the
row space of all shifted generators m * g with deg(m * g) <= D.  The
answer approximates ideal membership from below: a positive answer is a
certificate, a negative one only says no witness exists within the degree
bound.  None of the Groebner machinery is used here.
"""

from __future__ import annotations

import itertools

from .poly import Polynomial, PolyRing


def monomials_up_to(nvars: int, max_degree: int):
    """All exponent tuples of total degree <= max_degree, sorted by
    (degree, tuple)."""
    out = []
    for m in itertools.product(range(max_degree + 1), repeat=nvars):
        if sum(m) <= max_degree:
            out.append(m)
    out.sort(key=lambda m: (sum(m), m))
    return out


class GFRowSpace:
    """Incremental row space over F_p in reduced echelon form."""

    def __init__(self, width: int, p: int):
        self.width = width
        self.p = p
        self.pivots: dict[int, list[int]] = {}  # pivot column -> normalized row

    def _reduce(self, vec: list[int]) -> list[int]:
        p = self.p
        for col, row in self.pivots.items():
            c = vec[col]
            if c:
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
        return vec

    def insert(self, vec) -> bool:
        """Add a vector to the space; returns True if it enlarged the space."""
        p = self.p
        vec = self._reduce([c % p for c in vec])
        for col, c in enumerate(vec):
            if c:
                inv = pow(c, -1, p)
                row = [a * inv % p for a in vec]
                # back-substitute so every stored row stays fully reduced
                for col2, row2 in self.pivots.items():
                    c2 = row2[col]
                    if c2:
                        self.pivots[col2] = [(a - c2 * b) % p for a, b in zip(row2, row)]
                self.pivots[col] = row
                return True
        return False

    def contains(self, vec) -> bool:
        return not any(self._reduce([c % self.p for c in vec]))

    def rank(self) -> int:
        return len(self.pivots)


class DenseMembershipOracle:
    """Degree-truncated membership oracle for the ideal generated by ``gens``.

    ``contains(f)`` is True iff f is an F_p-combination of the products
    m * g with g a generator and deg(m * g) <= max_degree.  True implies
    ideal membership; False is inconclusive beyond the degree bound.
    """

    def __init__(self, ring: PolyRing, gens, max_degree: int):
        self.ring = ring
        self.max_degree = max_degree
        basis = monomials_up_to(ring.nvars, max_degree)
        self.index = {m: i for i, m in enumerate(basis)}
        self.space = GFRowSpace(len(basis), ring.p)
        for g in gens:
            if g.is_zero:
                continue
            d = g.total_degree()
            if d > max_degree:
                continue
            for shift in monomials_up_to(ring.nvars, max_degree - d):
                self.space.insert(self._vector(g, shift))

    def _vector(self, g: Polynomial, shift=None):
        vec = [0] * len(self.index)
        for m, c in g.terms.items():
            if shift is not None:
                m = tuple(a + b for a, b in zip(m, shift))
            vec[self.index[m]] = c
        return vec

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero:
            return True
        if f.total_degree() > self.max_degree:
            return False
        return self.space.contains(self._vector(f))


def membership_oracle(f: Polynomial, gens, max_degree: int | None = None) -> bool:
    """One-shot degree-truncated membership test; the default bound is
    deg(f) + max generator degree + 2."""
    ring = f.ring
    if max_degree is None:
        gdeg = max((g.total_degree() for g in gens if not g.is_zero), default=0)
        max_degree = max(f.total_degree(), 0) + gdeg + 2
    return DenseMembershipOracle(ring, gens, max_degree).contains(f)
