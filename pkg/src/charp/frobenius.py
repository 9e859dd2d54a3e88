"""Bracket powers, exact Frobenius preimages, closure chains and the
uniform-bound census.

The closure of an ideal I of R = S/J is approximated by the ascending
chain C_e = {r : r**(p**e) in I^[p^e]}, computed exactly through an
elimination-based preimage operator.  Window stabilization of the chain is
a heuristic stopping rule: every element of the returned ideal is
certified to lie in the closure (the certificate is re-verified on every
run), but equality with the full closure is not proved and reports say so
explicitly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .groebner import Ideal, buchberger
from .poly import Polynomial, PolyRing, block_order, frobenius_power
from .quotient import QuotientRing

STATUS_STABLE = "certified_subset_window_stable"
STATUS_NOT_STABILIZED = "not_stabilized"


class NotStabilizedError(RuntimeError):
    """The closure chain did not window-stabilize within the given bounds."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def bracket_power(I: Ideal, e: int) -> Ideal:
    """I^[p^e], generated by the p^e-th powers of I's generators (a valid
    generating set because Frobenius is a ring endomorphism)."""
    if e < 0:
        raise ValueError(f"bracket-power exponent must be non-negative, got {e}")
    if e == 0:
        return Ideal(I.ring, I.gens)
    return Ideal(I.ring, [frobenius_power(g, e) for g in I.gens])


def frobenius_preimage(K: Ideal, e: int) -> Ideal:
    """U_e(K) = {r : r**(p**e) in K}, the largest ideal whose e-th bracket
    power is contained in K.

    Computed exactly by elimination: adjoin a fresh variable linked to the
    p-th power of a ring variable, eliminate that ring variable and read
    the contraction back through the substitution.  The contraction equals
    the preimage because raising to the p-th power and substituting
    x_i -> x_i**p agree over F_p.  The substitutions for different
    variables commute, so the full contraction composes one variable at a
    time, and higher exponents compose one Frobenius step at a time
    (U_{a+b} = U_a o U_b); both factorizations keep every elimination small.
    """
    if e < 1:
        raise ValueError("preimage exponent must be positive (e = 0 is the identity)")
    result = K
    for _ in range(e):
        for i in range(K.ring.nvars):
            result = _contract_one_variable(result, i)
    return result


def _contract_one_variable(K: Ideal, i: int) -> Ideal:
    """phi^{-1}(K) for the substitution phi fixing every variable except
    x_i, which maps to x_i**p."""
    ring = K.ring
    p = ring.p
    n = ring.nvars
    if "_u" in ring._index:
        raise ValueError("ring already contains the reserved variable '_u'")
    others = [j for j in range(n) if j != i]
    tvars = (ring.variables[i],) + tuple(ring.variables[j] for j in others) + ("_u",)
    ext = PolyRing(p, tvars, block_order(1), internal=True)

    def fwd(g):
        return Polynomial(
            ext,
            {
                (m[i],) + tuple(m[j] for j in others) + (0,): c
                for m, c in g.terms.items()
            },
            _canonical=True,
        )

    u_mono = (0,) * n + (1,)
    xp_mono = (p,) + (0,) * n
    relation = Polynomial(ext, {u_mono: 1, xp_mono: p - 1}, _canonical=True)
    gens = [fwd(g) for g in K.gens] + [relation]
    kept = [h for h in buchberger(gens, ext.order) if all(m[0] == 0 for m in h.terms)]

    def back(h):
        table = {}
        for m, c in h.terms.items():
            mm = [0] * n
            mm[i] = m[-1]
            for pos, j in enumerate(others):
                mm[j] = m[1 + pos]
            table[tuple(mm)] = c
        return Polynomial(ring, table, _canonical=True)

    return Ideal(ring, [back(h) for h in kept])


def closure_step(R: QuotientRing, I: Ideal, e: int) -> Ideal:
    """The lift of C_e(I) = {r in R : r**(p**e) in I^[p^e]}."""
    K = bracket_power(I, e) + R.defining
    return R.lift(frobenius_preimage(K, e))


@dataclass
class ClosureChainReport:
    """Result of a closure-chain run.

    ``chain`` lists (e, reduced Groebner basis of the lifted C_e); the
    certificate re-verifies g**(p**E) in I^[p^E] + J for every generator g
    of the final chain member, so the returned ideal is contained in the
    closure unconditionally.  Window stabilization does not prove equality
    with the closure (``completeness``)."""

    ring: QuotientRing
    input_ideal: Ideal
    chain: tuple
    status: str
    stabilization_index: int | None
    q_exponent: int | None
    certificate_ok: bool
    e_max: int
    window: int
    completeness: str = (
        "heuristic: window stabilization certifies containment in the closure, "
        "not equality with it"
    )

    @property
    def stabilized(self) -> bool:
        return self.status == STATUS_STABLE

    @property
    def closure(self) -> Ideal:
        """The last chain member (the certified closure approximation), lifted."""
        return self.ring.lift(self.chain[-1][1])

    @property
    def q_value(self) -> int | None:
        if self.q_exponent is None:
            return None
        return self.ring.p ** self.q_exponent


def frobenius_closure(R: QuotientRing, I, e_max: int = 8, window: int = 2) -> ClosureChainReport:
    """Run the closure chain C_0 = I, C_1, ... until the last ``window``
    chain members coincide or ``e_max`` is reached.

    A window of w asks for w consecutive equal members, i.e. w - 1
    consecutive equalities C_e = C_{e+1} (w = 1 is treated as 2: at least
    one equality is always required)."""
    if e_max < 1:
        raise ValueError(f"e_max must be >= 1, got {e_max}")
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    needed = max(window - 1, 1)
    if isinstance(I, Ideal):
        I = I.gens
    lift = R.lift(I)
    chain_ideals = [lift]
    run = 0
    stab = None
    for e in range(1, e_max + 1):
        C = closure_step(R, lift, e)
        prev = chain_ideals[-1]
        if not prev.is_subset_of(C):
            raise RuntimeError("closure chain failed to ascend; preimage bug")
        equal = C.groebner_basis() == prev.groebner_basis()
        chain_ideals.append(C)
        run = run + 1 if equal else 0
        if run == needed:
            stab = e - needed
            break
    status = STATUS_STABLE if stab is not None else STATUS_NOT_STABILIZED
    last_e = len(chain_ideals) - 1
    cert_e = stab if stab is not None else last_e
    certificate_ok = _verify_certificate(R, lift, chain_ideals[cert_e], cert_e)
    if not certificate_ok:
        raise RuntimeError("closure soundness certificate failed; preimage bug")
    report = ClosureChainReport(
        ring=R,
        input_ideal=lift,
        chain=tuple((e, C.groebner_basis()) for e, C in enumerate(chain_ideals)),
        status=status,
        stabilization_index=stab,
        q_exponent=None,
        certificate_ok=certificate_ok,
        e_max=e_max,
        window=window,
    )
    if stab is not None:
        report.q_exponent = _q_exponent(R, lift, chain_ideals[stab], stab)
    return report


def _verify_certificate(R, lift, C, e) -> bool:
    """g**(p**e) in I^[p^e] + J for every basis element g of C."""
    target = bracket_power(lift, e) + R.defining
    return all(target.contains(frobenius_power(g, e)) for g in C.groebner_basis())


def _q_exponent(R, lift, closure, stab) -> int:
    """Smallest e' with (closure)^[p^e'] + J = I^[p^e'] + J; at most the
    stabilization index, because closure = C_E satisfies the equality at E."""
    for e in range(stab + 1):
        left = bracket_power(closure, e) + R.defining
        right = bracket_power(lift, e) + R.defining
        if left.equals(right):
            return e
    raise RuntimeError("Q-exponent search failed below the stabilization index")


def q_number(report: ClosureChainReport) -> tuple[int, int]:
    """(e', p**e') for the smallest e' with (C)^[p^e'] = I^[p^e'] in R."""
    if not report.stabilized:
        raise NotStabilizedError(
            "Q-number requires a window-stabilized closure chain", report
        )
    if report.q_exponent is None:
        report.q_exponent = _q_exponent(
            report.ring,
            report.input_ideal,
            report.ring.lift(report.chain[report.stabilization_index][1]),
            report.stabilization_index,
        )
    return report.q_exponent, report.ring.p ** report.q_exponent


# ---------------------------------------------------------------------------
# census of Q-exponents over parameter families

@dataclass(frozen=True)
class CensusRow:
    """Per-ideal census record."""

    parameters: tuple  # ((name, value), ...)
    ideal_digest: tuple  # closure basis, as canonical strings
    q_exponent: int | None
    regular_sequence_ok: bool
    stabilized: bool


@dataclass
class CensusReport:
    rows: tuple
    uniform_e: int | None
    uniform_e_is_lower_bound: bool
    recheck_ok: bool | None
    e_max: int
    window: int


_PLACEHOLDER_RE = re.compile(r"\{([A-Za-z_][A-Za-z0-9_]*)\}")


def instantiate_template(ring: PolyRing, template: str, ranges) -> list:
    """Expand a generator template like ``x^{a}, y^{b}`` over integer ranges.

    ``ranges`` maps parameter names to iterables of integers; rows are
    emitted in row-major order of the ranges as given.  Placeholders are
    substituted as integer exponents only.
    """
    names = list(ranges)
    used = set(_PLACEHOLDER_RE.findall(template))
    unknown = used - set(names)
    if unknown:
        raise ValueError(f"template parameter(s) {sorted(unknown)} have no range")
    unused = set(names) - used
    if unused:
        raise ValueError(f"range parameter(s) {sorted(unused)} do not appear in the template")
    rows = []
    for values in itertools.product(*(list(ranges[n]) for n in names)):
        assignment = dict(zip(names, values))
        text = _PLACEHOLDER_RE.sub(lambda m: str(assignment[m.group(1)]), template)
        gens = [ring.parse(part) for part in text.split(",")]
        rows.append((tuple(zip(names, values)), gens))
    return rows


def frobenius_power_family(R: QuotientRing, I: Ideal, n_max: int) -> list:
    """The family I^[p^n] for n = 0..n_max, as labeled census rows."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    return [
        ((("n", n),), list(bracket_power(Ideal(R.ambient, I.gens), n).gens))
        for n in range(n_max + 1)
    ]


def _census_row(R, params, gens, e_max, window):
    regseq = bool(R.is_poor_regular_sequence(gens)) if gens else False
    report = frobenius_closure(R, gens, e_max=e_max, window=window)
    closure_gb = report.chain[-1][1]
    row = CensusRow(
        parameters=tuple(params),
        ideal_digest=tuple(str(g) for g in closure_gb),
        q_exponent=report.q_exponent,
        regular_sequence_ok=regseq,
        stabilized=report.stabilized,
    )
    return row, closure_gb, list(gens)


def run_census(R: QuotientRing, labeled_rows, e_max: int = 8, window: int = 2,
               jobs: int = 1) -> CensusReport:
    """Closure/Q-exponent census over explicit labeled rows
    [(params, generators), ...].  Rows are independent; with jobs > 1 they
    are dispatched to a process pool, and output order follows input order
    either way."""
    if jobs > 1 and len(labeled_rows) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(
                pool.map(
                    _census_row_task,
                    [(R, params, gens, e_max, window) for params, gens in labeled_rows],
                )
            )
    else:
        outcomes = [
            _census_row(R, params, gens, e_max, window) for params, gens in labeled_rows
        ]
    rows = tuple(row for row, _, _ in outcomes)
    stabilized_q = [row.q_exponent for row in rows if row.stabilized]
    all_stabilized = all(row.stabilized for row in rows) and bool(rows)
    uniform_e = max(stabilized_q, default=None)
    recheck_ok = None
    if uniform_e is not None:
        recheck_ok = True
        for row, closure_gb, gens in outcomes:
            if not row.stabilized:
                continue
            left = bracket_power(R.lift(closure_gb), uniform_e) + R.defining
            right = bracket_power(R.lift(gens), uniform_e) + R.defining
            if not left.equals(right):
                recheck_ok = False
    return CensusReport(
        rows=rows,
        uniform_e=uniform_e,
        uniform_e_is_lower_bound=not all_stabilized,
        recheck_ok=recheck_ok,
        e_max=e_max,
        window=window,
    )


def _census_row_task(args):
    return _census_row(*args)


def uniform_census(R: QuotientRing, template: str, ranges, e_max: int = 8,
                   window: int = 2, jobs: int = 1) -> CensusReport:
    """Census over a generator template with integer parameters; see
    :func:`instantiate_template` and :func:`run_census`."""
    rows = instantiate_template(R.ambient, template, ranges)
    if not rows:
        raise ValueError("template instantiates to no rows")
    return run_census(R, rows, e_max=e_max, window=window, jobs=jobs)
