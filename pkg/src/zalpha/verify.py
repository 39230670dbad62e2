"""Independent verification oracles.

Word enumeration and coverage never consult the expander's digit choice:
enumeration builds all digit strings forward, and coverage runs a
breadth-first search over *all* coset-compatible digit subtractions per
target, so agreement with expander output is a genuine two-path check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .corering import (
    FieldElem,
    IntPoly,
    MinPoly,
    _alpha_power,
    div_by_alpha,
    field_add,
    field_from_int,
    field_mul,
    field_scale,
    to_field,
)
from .digitset import DigitSet
from .errors import GuardExceeded, InputError
from .places import AlgebraicNumber, embed
from .rationals import format_decimal_up, sqrt_lower

WORD_GUARD = 10_000_000

DEFAULT_TOLERANCE = Fraction(1, 10**9)


def normalize_alphabet(F, m: MinPoly) -> list[IntPoly]:
    """Accept a DigitSet, IntPolys, or plain integers as the alphabet."""
    if isinstance(F, DigitSet):
        return [d.rep for d in F.digits]
    out = []
    for entry in F:
        if isinstance(entry, IntPoly):
            out.append(entry)
        elif isinstance(entry, int):
            out.append(IntPoly.from_int(entry))
        else:
            raise InputError(f"bad alphabet entry {entry!r}")
    return out


@dataclass(frozen=True)
class CoverageReport:
    alphabet_size: int
    word_len: int
    region_desc: str
    covered: bool
    misses: tuple[FieldElem, ...]

    def to_json(self) -> dict:
        return {
            "alphabet_size": self.alphabet_size,
            "word_len": self.word_len,
            "region": self.region_desc,
            "covered": self.covered,
            "misses": [m.to_json() for m in self.misses],
        }


@dataclass(frozen=True)
class NumberSystemReport:
    is_candidate: bool
    card_ok: bool
    canonical: bool
    coverage: CoverageReport

    def to_json(self) -> dict:
        return {
            "is_candidate": self.is_candidate,
            "card_ok": self.card_ok,
            "canonical": self.canonical,
            "coverage": self.coverage.to_json(),
            "desk_scale_evidence_only": True,
        }


@dataclass
class AuditReport:
    passed: bool
    tolerance: Fraction
    steps_checked: int
    entries: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "tolerance": format_decimal_up(self.tolerance, 12),
            "steps_checked": self.steps_checked,
            "violations": self.violations,
        }


# ---------------------------------------------------------------------------


def enumerate_words(F, a: AlgebraicNumber, L: int) -> set[FieldElem]:
    """Exact value set of all digit strings of length <= L over F.

    Forward dynamic programming on values; guarded by the total word
    count sum |F|^k <= 10^7.
    """
    m = a.minpoly
    alphabet = normalize_alphabet(F, m)
    total = 0
    power = 1
    for _ in range(L):
        power *= max(1, len(alphabet))
        total += power
        if total > WORD_GUARD:
            raise GuardExceeded(
                f"{len(alphabet)}^{L} words exceed the {WORD_GUARD} guard"
            )
    zero = field_from_int(0, m)
    result = {zero}
    frontier = {zero}
    eps_values = [to_field(e, m) for e in alphabet]
    for k in range(L):
        alpha_k = FieldElem(_alpha_power(m, k))
        shifted = [field_mul(ev, alpha_k, m) for ev in eps_values]
        frontier = {field_add(v, sh) for v in frontier for sh in shifted}
        result |= frontier
    return result


def _canonical_tuple(p: IntPoly, m: MinPoly) -> tuple[int, ...]:
    if p.degree <= m.degree - 1:
        return p.coeffs
    fe = to_field(p, m)
    if all(c.denominator == 1 for c in fe.coords):
        return IntPoly(tuple(int(c) for c in fe.coords)).coeffs
    raise InputError(
        f"region element {list(p.coeffs)} has no canonical integer witness"
    )


def coverage(
    F,
    a: AlgebraicNumber,
    region,
    L: int,
    guard: int = WORD_GUARD,
) -> CoverageReport:
    """Whether every region element is a word of length <= L over F.

    Per target this searches the full nondeterministic digit relation
    t -> (t - eps)/alpha over all coset-compatible eps (breadth-first,
    shared across targets), which is exactly membership of t among word
    values; the expander's orthant selection rule is never consulted.
    """
    m = a.minpoly
    alphabet = normalize_alphabet(F, m)
    a0 = abs(m.a0)
    targets = [_canonical_tuple(t, m) for t in region]
    visited: set[tuple[int, ...]] = set(targets)
    frontier: set[tuple[int, ...]] = set(targets)
    edges: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}
    for _ in range(L):
        nxt: set[tuple[int, ...]] = set()
        for s in frontier:
            if s == ():
                continue
            sp = IntPoly(s)
            succs = []
            for eps in alphabet:
                diff = sp - eps
                if diff.constant % a0 == 0:
                    succs.append(div_by_alpha(diff, m).coeffs)
            edges[s] = tuple(succs)
            for q in succs:
                if q not in visited:
                    nxt.add(q)
        visited |= nxt
        if len(visited) > guard:
            raise GuardExceeded(f"residual search exceeded {guard} states")
        frontier = nxt
        if not frontier:
            break
    # distance to zero inside the explored graph
    rev: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for s, succs in edges.items():
        for q in succs:
            rev.setdefault(q, []).append(s)
    dist = {(): 0}
    queue = [()]
    while queue:
        nxt_q = []
        for q in queue:
            for s in rev.get(q, ()):
                if s not in dist:
                    dist[s] = dist[q] + 1
                    nxt_q.append(s)
        queue = nxt_q
    misses = tuple(
        to_field(IntPoly(t), m)
        for t in sorted(set(targets))
        if dist.get(t, L + 1) > L
    )
    return CoverageReport(
        alphabet_size=len(alphabet),
        word_len=L,
        region_desc=f"{len(targets)} elements",
        covered=not misses,
        misses=misses,
    )


def number_system_check(F, a: AlgebraicNumber, region, L: int) -> NumberSystemReport:
    """Desk-scale number-system evidence: 0 in F, Card(F) = |M_alpha(0)|,
    canonical shape, and finite-region coverage.  Evidence, not proof."""
    m = a.minpoly
    alphabet = normalize_alphabet(F, m)
    values = {to_field(e, m) for e in alphabet}
    zero = field_from_int(0, m)
    card_ok = zero in values and len(values) == abs(m.a0)
    canonical = values == {field_from_int(k, m) for k in range(abs(m.a0))}
    cov = coverage(F, a, region, L)
    return NumberSystemReport(
        is_candidate=card_ok and cov.covered,
        card_ok=card_ok,
        canonical=canonical,
        coverage=cov,
    )


# ---------------------------------------------------------------------------
# trace audit


def audit_trace(trace, F: DigitSet, a: AlgebraicNumber,
                tolerance: Fraction = DEFAULT_TOLERANCE) -> AuditReport:
    """Re-derive every step's inequalities with independent evaluations.

    Checks, per archimedean place: the height decrease
    after < max(before, c) + tol; the same-sign contract at real places;
    and the angular-gap contract cos(arg difference) >= certified sine
    gap at non-real places.
    """
    tol = Fraction(tolerance)
    c = F.c
    report = AuditReport(passed=True, tolerance=tol, steps_checked=0)
    steps = trace.steps
    for k in range(len(steps) - 1):
        st = steps[k]
        if st.digit_id is None:
            continue
        digit = F.digits[st.digit_id]
        ep_b = embed(st.beta, a, 64)
        ep_n = embed(steps[k + 1].beta, a, 64)
        ep_e = embed(digit.rep, a, 64)
        report.steps_checked += 1
        for p in range(a.r + a.s):
            if p < a.r:
                before = ep_b.reals[p].abs()
                after = ep_n.reals[p].abs()
            else:
                before = ep_b.complexes[p - a.r].abs2()
                after = ep_n.complexes[p - a.r].abs2()
            bound = max(before.lo, c)
            ok = after.hi < bound + tol
            entry = {
                "step": k,
                "place": p,
                "before": format_decimal_up(before.hi, 20),
                "after": format_decimal_up(after.hi, 20),
                "bound": format_decimal_up(bound, 20),
                "ok": ok,
            }
            report.entries.append(entry)
            if not ok:
                report.violations.append(entry)
        for i in range(a.r):
            prod = ep_b.reals[i] * ep_e.reals[i]
            if not prod.hi >= -tol:
                report.violations.append(
                    {"step": k, "place": i, "check": "real-sign",
                     "value": format_decimal_up(prod.hi, 20), "ok": False}
                )
        for j in range(a.s):
            b, e = ep_b.complexes[j], ep_e.complexes[j]
            lhs = b.re * e.re + b.im * e.im
            rhs = digit.sin_gaps[j] * sqrt_lower(
                max(Fraction(0), b.abs2().lo * e.abs2().lo)
            )
            if not lhs.hi >= rhs - tol:
                report.violations.append(
                    {"step": k, "place": a.r + j, "check": "angular-gap",
                     "value": format_decimal_up(lhs.hi, 20),
                     "required": format_decimal_up(rhs, 20), "ok": False}
                )
    report.passed = not report.violations
    return report


# ---------------------------------------------------------------------------
# region helpers


def coeff_box(m: MinPoly, radius: int) -> list[IntPoly]:
    """All canonical elements with coefficients in [-radius, radius]."""
    import itertools

    n = m.degree
    seen = set()
    out = []
    for tup in itertools.product(range(-radius, radius + 1), repeat=n):
        p = IntPoly(tup)
        if p.coeffs not in seen:
            seen.add(p.coeffs)
            out.append(p)
    return out


def integer_range(lo: int, hi: int) -> list[IntPoly]:
    return [IntPoly.from_int(k) for k in range(lo, hi + 1)]
