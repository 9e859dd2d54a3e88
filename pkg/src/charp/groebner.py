"""Groebner-basis engine and ideal calculus over F_p[x_1, ..., x_n].

Normal forms, Buchberger completion to the unique reduced basis, ideal
membership, colon ideals, intersections, elimination and dimension.  The
reduced basis for a fixed order is unique, so results do not depend on
generator order; bases are cached per order on each Ideal (cache writes
are idempotent and therefore safe under concurrent population).

No modular or tracing shortcuts and no F4/F5: determinism and correctness
over speed, which is adequate at desk scale.
"""

from __future__ import annotations

import heapq
import itertools

from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolyRing,
    RingMismatchError,
    block_order,
    divide_exact,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class _Reducer:
    """A basis element prepared for division: leading data precomputed."""

    __slots__ = ("lm", "lcinv", "terms", "poly")

    def __init__(self, g: Polynomial, order: MonomialOrder, p: int):
        self.lm = g.leading_monomial(order)
        self.lcinv = pow(g.terms[self.lm], -1, p)
        self.terms = g.terms
        self.poly = g


def _reduce_terms(terms: dict, reds, p: int, key, keycache: dict, quots=None) -> dict:
    """Core division loop on a term table (consumed and returned).

    Repeatedly cancels the highest reducible monomial using the first
    reducer whose leading monomial divides it.  ``keycache`` maps monomials
    to their order keys and may be shared across calls on the same ring.
    """
    work = terms
    irreducible: set = set()
    while True:
        target = None
        target_key = None
        for m in work:
            if m in irreducible:
                continue
            k = keycache.get(m)
            if k is None:
                k = keycache[m] = key(m)
            if target is None or k > target_key:
                target, target_key = m, k
        if target is None:
            return work
        hit = None
        for red in reds:
            lm = red.lm
            ok = True
            for a, b in zip(lm, target):
                if a > b:
                    ok = False
                    break
            if ok:
                hit = red
                break
        if hit is None:
            irreducible.add(target)
            continue
        factor = work[target] * hit.lcinv % p
        shift = tuple(b - a for a, b in zip(hit.lm, target))
        if quots is not None:
            q = quots[reds.index(hit)]
            q[shift] = (q.get(shift, 0) + factor) % p
        for mg, cg in hit.terms.items():
            mm = tuple(a + b for a, b in zip(mg, shift))
            s = (work.get(mm, 0) - factor * cg) % p
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)


def normal_form(f: Polynomial, reducers, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f on division by ``reducers``; no term of the result is
    divisible by any reducer's leading monomial, and f - result lies in the
    ideal the reducers generate.  Deterministic: the highest reducible term
    is cancelled first, by the first divisor in list order."""
    if order is None:
        order = f.ring.order
    reducers = list(reducers)
    if any(g.is_zero for g in reducers):
        raise ValueError("zero polynomial among reducers")
    if not reducers:
        return f
    p = f.ring.p
    reds = [_Reducer(g, order, p) for g in reducers]
    out = _reduce_terms(dict(f.terms), reds, p, order.key, {})
    return Polynomial(f.ring, out, _canonical=True)


def reduce_with_quotients(f: Polynomial, reducers, order: MonomialOrder | None = None):
    """Division with record: returns (quotients, remainder) with
    f == sum(q_i * g_i) + remainder."""
    if order is None:
        order = f.ring.order
    reducers = list(reducers)
    if any(g.is_zero for g in reducers):
        raise ValueError("zero polynomial among reducers")
    if not reducers:
        return [], f
    p = f.ring.p
    reds = [_Reducer(g, order, p) for g in reducers]
    quots = [{} for _ in reds]
    out = _reduce_terms(dict(f.terms), reds, p, order.key, {}, quots=quots)
    return (
        [Polynomial(f.ring, q, _canonical=True) for q in quots],
        Polynomial(f.ring, out, _canonical=True),
    )


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if order is None:
        order = f.ring.order
    ring = f.ring
    p = ring.p
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lmf, lmg)
    cf = pow(f.terms[lmf], -1, p)
    cg = pow(g.terms[lmg], -1, p)
    return f * ring.monomial(mono_div(lcm, lmf), cf) - g * ring.monomial(mono_div(lcm, lmg), cg)


def buchberger(generators, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
    """The unique reduced Groebner basis of the given generators.

    Pair selection follows the normal strategy (smallest lcm in the order,
    ties by pair index); the pair queue is maintained with the
    Gebauer-Moller update, which subsumes the coprime and chain criteria
    and retires basis elements whose lead becomes redundant.  The result is
    monic, mutually reduced and sorted by descending leading monomial; the
    zero ideal yields the empty basis.
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return ()
    ring = gens[0].ring
    if order is None:
        order = ring.order
    p = ring.p
    key = order.key
    keycache: dict = {}

    reds: list[_Reducer] = []
    lms: list = []
    alive: list[bool] = []
    pending: dict = {}  # (i, j) -> lcm of the leading monomials
    heap: list = []  # (selection key of the lcm, i, j); stale entries skipped

    def update(t):
        """Gebauer-Moller pair update for the new basis element t.

        Candidates are processed by ascending lcm, so a dominating lcm
        (a proper divisor) can only sit among the already-kept survivors,
        and an equal lcm only in the same key class; this keeps the filter
        near-linear in the candidate count.
        """
        lt = lms[t]
        candidates = []
        for i in range(t):
            if alive[i]:
                li = mono_lcm(lms[i], lt)
                candidates.append((key(li), i, li))
        candidates.sort()
        kept: list = []  # (index, lcm) survivors, ascending lcm
        npos = len(candidates)
        for pos, (k_li, i, li) in enumerate(candidates):
            coprime = li == mono_mul(lms[i], lt)
            if not coprime:
                if pos + 1 < npos and candidates[pos + 1][0] == k_li:
                    continue  # a later candidate carries the same lcm
                dominated = False
                for _, lj in kept:
                    if mono_divides(lj, li):
                        dominated = True
                        break
                if dominated:
                    continue
            kept.append((i, li))
        # drop old pairs whose lcm factors through lt
        for (i, j), l in list(pending.items()):
            if (
                mono_divides(lt, l)
                and mono_lcm(lms[i], lt) != l
                and mono_lcm(lms[j], lt) != l
            ):
                del pending[(i, j)]
        # enqueue the non-coprime survivors
        for i, li in kept:
            if li == mono_mul(lms[i], lt):
                continue
            pending[(i, t)] = li
            heapq.heappush(heap, (key(li), i, t))
        # retire elements whose lead the new lead divides
        for i in range(t):
            if alive[i] and mono_divides(lt, lms[i]):
                alive[i] = False

    def add_element(h):
        reds.append(_Reducer(h, order, p))
        lms.append(reds[-1].lm)
        alive.append(True)
        update(len(reds) - 1)

    # seed with the interreduced input: redundant generators (common in
    # bracket-power lists) reduce to zero here and never enter the queue
    for g in sorted(gens, key=lambda h: key(h.leading_monomial(order))):
        if reds:
            table = _reduce_terms(dict(g.terms), reds, p, key, keycache)
            h = Polynomial(ring, table, _canonical=True)
        else:
            h = g
        if not h.is_zero:
            add_element(h.monic(order))

    while heap:
        _, i, j = heapq.heappop(heap)
        if pending.pop((i, j), None) is None:
            continue  # pruned by a later update
        s = s_polynomial(reds[i].poly, reds[j].poly, order)
        table = _reduce_terms(dict(s.terms), reds, p, key, keycache)
        if not table:
            continue
        add_element(Polynomial(ring, table, _canonical=True).monic(order))

    # minimalize: drop elements whose lead is divisible by another's lead
    minimal: list[int] = []
    for i in sorted((i for i in range(len(reds)) if alive[i]), key=lambda i: key(lms[i])):
        if not any(mono_divides(lms[k], lms[i]) for k in minimal):
            minimal.append(i)
    basis = [reds[i].poly for i in minimal]

    # tail-reduce each element against the others
    reduced = []
    for i, g in enumerate(basis):
        others = [_Reducer(o, order, p) for o in basis[:i] + basis[i + 1:]]
        if others:
            table = _reduce_terms(dict(g.terms), others, p, key, keycache)
            g = Polynomial(ring, table, _canonical=True)
        reduced.append(g.monic(order))
    reduced = [h for h in reduced if not h.is_zero]
    reduced.sort(key=lambda h: key(h.leading_monomial(order)), reverse=True)
    return tuple(reduced)


class Ideal:
    """An ideal of a PolyRing, given by generators (zero generators dropped)."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        gens = tuple(g for g in gens if not g.is_zero)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} does not live in {ring!r}")
        self.ring = ring
        self.gens = gens
        self._gb: dict = {}

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    def groebner_basis(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.gens, order)
            self._gb[order] = gb  # idempotent: the reduced basis is unique
        return gb

    # -- membership ----------------------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("membership test across different rings")
        gb = self.groebner_basis()
        if not gb:
            return f.is_zero
        return normal_form(f, gb).is_zero

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def is_subset_of(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError("subset test across different rings")
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError("equality test across different rings")
        return self.groebner_basis() == other.groebner_basis()

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return bool(gb) and gb[0].total_degree() == 0

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("sum of ideals across different rings")
        return Ideal(self.ring, self.gens + other.gens)

    # -- colon, intersection, elimination -------------------------------------

    def colon(self, f: Polynomial) -> "Ideal":
        """(self : f) = {g : g*f in self}, via intersection with (f)."""
        if f.is_zero:
            raise ValueError("colon by the zero polynomial")
        meet = self.intersect(Ideal(self.ring, [f]))
        return Ideal(self.ring, [divide_exact(g, f) for g in meet.gens])

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        """(self : other), the intersection of (self : g) over generators g."""
        if other.ring != self.ring:
            raise RingMismatchError("colon across different rings")
        result = None
        for g in other.gens:
            piece = self.colon(g)
            result = piece if result is None else result.intersect(piece)
        if result is None:  # colon by the zero ideal is the unit ideal
            return Ideal(self.ring, [self.ring.one()])
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        """Tag-variable intersection: eliminate t from t*I + (1-t)*K."""
        if other.ring != self.ring:
            raise RingMismatchError("intersection across different rings")
        ring = self.ring
        tag = next(
            f"_t{i}" for i in itertools.count() if f"_t{i}" not in ring._index
        )
        ext = PolyRing(ring.p, (tag,) + ring.variables, block_order(1), internal=True)

        def emb(g):
            return Polynomial(ext, {(0,) + m: c for m, c in g.terms.items()}, _canonical=True)

        t = ext.var(tag)
        one = ext.one()
        gens = [t * emb(g) for g in self.gens]
        gens += [(one - t) * emb(g) for g in other.gens]
        kept = [h for h in buchberger(gens, ext.order) if all(m[0] == 0 for m in h.terms)]
        back = [
            Polynomial(ring, {m[1:]: c for m, c in h.terms.items()}, _canonical=True)
            for h in kept
        ]
        return Ideal(ring, back)

    def eliminate(self, front_vars) -> "Ideal":
        """self ∩ F_p[variables not in front_vars], as an ideal of the same ring."""
        front = tuple(front_vars)
        for v in front:
            if v not in self.ring._index:
                raise ValueError(f"unknown variable {v!r}")
        if not front:
            return Ideal(self.ring, self.gens)
        ring = self.ring
        rest = tuple(v for v in ring.variables if v not in front)
        perm = [ring._index[v] for v in front + rest]
        ext = PolyRing(ring.p, front + rest, block_order(len(front)), internal=True)

        def fwd(g):
            return Polynomial(
                ext, {tuple(m[i] for i in perm): c for m, c in g.terms.items()}, _canonical=True
            )

        k = len(front)
        kept = [
            h for h in buchberger([fwd(g) for g in self.gens], ext.order)
            if all(not any(m[:k]) for m in h.terms)
        ]
        inv = {pos: i for i, pos in enumerate(perm)}
        n = ring.nvars

        def back(h):
            return Polynomial(
                ring,
                {tuple(m[inv[i]] for i in range(n)): c for m, c in h.terms.items()},
                _canonical=True,
            )

        return Ideal(ring, [back(h) for h in kept])

    # -- dimension -------------------------------------------------------------

    def krull_dimension(self) -> int:
        """Dimension of S/self via independent variable sets modulo the
        initial ideal; -1 for the unit ideal."""
        gb = self.groebner_basis()
        n = self.ring.nvars
        if not gb:
            return n
        supports = [
            frozenset(i for i, e in enumerate(g.leading_monomial()) if e) for g in gb
        ]
        if frozenset() in supports:  # a unit leads the basis
            return -1
        for size in range(n, 0, -1):
            for subset in itertools.combinations(range(n), size):
                chosen = set(subset)
                if not any(s <= chosen for s in supports):
                    return size
        return 0

    def vector_space_dimension(self) -> int | None:
        """Number of standard monomials when the quotient is finite
        dimensional over F_p; None means infinite."""
        dim = self.krull_dimension()
        if dim > 0:
            return None
        gb = self.groebner_basis()
        lms = [g.leading_monomial() for g in gb]
        n = self.ring.nvars
        box = []
        for i in range(n):
            pure = [m[i] for m in lms if sum(m) == m[i]]
            box.append(min(pure))  # dim <= 0 guarantees a pure power per variable
        count = 0
        for m in itertools.product(*(range(b) for b in box)):
            if not any(mono_divides(lm, m) for lm in lms):
                count += 1
        return count
