"""Digit sets: one representative per (coset class, open orthant) pair.

A digit for coset r and orthant U is an element r + alpha*h(alpha) whose
archimedean image lies certified strictly inside U.  Existence follows
from alpha*Z[alpha] embedding onto a rank-n lattice, so a breadth-first
search over coefficient boxes for h always terminates on valid input.
The per-digit constants make the height decrease at every place checkable
with an explicit bound.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .corering import IntPoly, MinPoly, alpha_multiple_witness, to_field
from .errors import InputError, SearchExhausted
from .intervals import Iv
from .places import AlgebraicNumber, Kind, classify, embed
from .rationals import (
    format_decimal_up,
    format_rational,
    parse_rational,
    sqrt_upper,
)

_F0 = Fraction(0)

#: signs (Re, Im) characterizing each open quadrant
QUADRANT_SIGNS = {1: (1, 1), 2: (-1, 1), 3: (-1, -1), 4: (1, -1)}

#: deterministic boundary rule: +Re axis -> Q1, +Im -> Q1, -Re -> Q2, -Im -> Q3
AXIS_QUADRANT = {(1, 0): 1, (0, 1): 1, (-1, 0): 2, (0, -1): 3}


@dataclass(frozen=True)
class Orthant:
    """Open orthant of R^r x C^s: a sign per real place, a quadrant per
    complex place.  There are 2^r * 4^s = 2^n of them."""

    real_signs: tuple[int, ...]
    quadrants: tuple[int, ...]

    def label(self) -> str:
        signs = "".join("+" if s > 0 else "-" for s in self.real_signs)
        quads = "".join(f"q{q}" for q in self.quadrants)
        return f"{signs}|{quads}"

    @staticmethod
    def from_label(label: str, r: int, s: int) -> Orthant:
        try:
            signs_part, quads_part = label.split("|")
            signs = tuple(1 if ch == "+" else -1 for ch in signs_part)
            quads = tuple(int(q) for q in quads_part.split("q") if q)
            if len(signs) != r or len(quads) != s:
                raise ValueError
            return Orthant(signs, quads)
        except ValueError as exc:
            raise InputError(f"bad orthant label {label!r}") from exc

    def matches_strict(self, real_signs, cplx_signs) -> bool:
        """Strict interior membership given certified nonzero signs."""
        if any(s != t for s, t in zip(real_signs, self.real_signs)):
            return False
        for (re_s, im_s), q in zip(cplx_signs, self.quadrants):
            if (re_s, im_s) != QUADRANT_SIGNS[q]:
                return False
        return True


def all_orthants(r: int, s: int) -> list[Orthant]:
    out = []
    for signs in itertools.product((1, -1), repeat=r):
        for quads in itertools.product((1, 2, 3, 4), repeat=s):
            out.append(Orthant(signs, quads))
    return out


def resolve_orthant(real_signs, cplx_signs) -> Orthant:
    """Closed-orthant assignment for certified signs with exact zeros.

    Zero coordinates sit on a boundary shared by several orthant closures;
    the deterministic rule picks sign + for a zero real coordinate and the
    lowest-numbered adjacent quadrant for an on-axis complex coordinate.
    """
    signs = tuple(1 if s >= 0 else -1 for s in real_signs)
    quads = []
    for re_s, im_s in cplx_signs:
        if re_s != 0 and im_s != 0:
            q = next(k for k, v in QUADRANT_SIGNS.items() if v == (re_s, im_s))
        else:
            if re_s == 0 and im_s == 0:
                raise InputError("zero element has no orthant")
            q = AXIS_QUADRANT[(re_s, im_s)]
        quads.append(q)
    return Orthant(signs, tuple(quads))


@dataclass(frozen=True)
class Digit:
    """One digit epsilon(r, U) = r + alpha*h(alpha) with its certificates.

    margin: certified distance from the orthant boundary; at complex
    places this is a lower bound on the sine of the angular gap.
    c_per_place: explicit constants making the per-place decrease law
    checkable (real places carry 2|eps|, complex places the squared
    geometric bound derived from the angular gap).
    """

    rep: IntPoly
    h: IntPoly
    coset: int
    orthant: Orthant
    margin: Fraction
    c_per_place: tuple[Fraction, ...]
    sin_gaps: tuple[Fraction, ...]

    def value(self, m: MinPoly):
        return to_field(self.rep, m)


@dataclass(frozen=True)
class DigitSet:
    minpoly: MinPoly
    digits: tuple[Digit, ...]
    c: Fraction

    def __len__(self) -> int:
        return len(self.digits)

    def lookup(self) -> dict[tuple[int, Orthant], int]:
        return {(d.coset, d.orthant): i for i, d in enumerate(self.digits)}

    def to_json(self) -> dict:
        return {
            "alpha": self.minpoly.to_json(),
            "digits": [
                {
                    "rep": list(d.rep.coeffs),
                    "coset": d.coset,
                    "orthant": d.orthant.label(),
                    "margin": format_rational(d.margin),
                }
                for d in self.digits
            ],
            "c": format_decimal_up(self.c, 30),
        }

    @staticmethod
    def from_json(obj: dict, a: AlgebraicNumber | None = None) -> DigitSet:
        """Rebuild from JSON, re-deriving every certificate from scratch.

        The stored reps are re-certified against their declared coset and
        orthant, so a tampered or stale file fails loudly.
        """
        m = MinPoly.from_json(obj["alpha"])
        if a is None:
            a = AlgebraicNumber(m)
        if a.minpoly != m:
            raise InputError("digit file does not match the given minimal polynomial")
        digits = []
        for entry in obj["digits"]:
            rep = IntPoly(tuple(int(c) for c in entry["rep"]))
            orth = Orthant.from_label(entry["orthant"], a.r, a.s)
            coset = int(entry["coset"])
            h = _recover_h(rep, coset, m)
            digit = _certify_digit(rep, h, coset, orth, a)
            if digit is None:
                raise InputError(f"digit {entry} failed re-certification")
            claimed = parse_rational(entry["margin"])
            if claimed > digit.margin * 2 + Fraction(1, 1 << 32):
                raise InputError(f"margin claim {entry['margin']} is inconsistent")
            digits.append(digit)
        dset = DigitSet(m, tuple(digits), _global_c(digits))
        return dset


def _recover_h(rep: IntPoly, coset: int, m: MinPoly) -> IntPoly:
    if rep.constant != coset:
        # rep - coset must be divisible by alpha; recover a witness
        w = alpha_multiple_witness(rep - IntPoly.from_int(coset), m)
        if w is None:
            raise InputError("digit rep is not in coset + alpha*Z[alpha]")
        return w
    return IntPoly(rep.coeffs[1:])


def coset_representatives(m: MinPoly, minimize: bool = False) -> list[int]:
    """Complete set of representatives of Z[alpha]/alpha*Z[alpha].

    {0, ..., |a_0|-1} always works: a_0 lies in alpha*Z[alpha] and the
    integers surject onto the quotient.  With minimize=True redundant
    entries are dropped by testing pairwise differences for membership in
    alpha*Z[alpha] through the independent witness search.
    """
    reps = list(range(abs(m.a0)))
    if not minimize:
        return reps
    kept: list[int] = []
    for r in reps:
        dup = any(
            alpha_multiple_witness(IntPoly.from_int(r - k), m) is not None
            for k in kept
        )
        if not dup:
            kept.append(r)
    return kept


# ---------------------------------------------------------------------------
# digit search


_CERT_BITS = 96
_CAND_BITS = 192


def _quick_signs(p: IntPoly, a: AlgebraicNumber, bits: int = _CAND_BITS):
    """Certified strict signs up to a fixed refinement budget, else None.

    Candidates whose coordinates stay undecided are on (or absurdly close
    to) an orthant boundary; they cannot be certified interior, so the
    search simply skips them.
    """
    step = 64
    while step <= bits:
        ep = embed(p, a, step)
        reals = tuple(iv.sign() for iv in ep.reals)
        cplx = tuple((c.re.sign(), c.im.sign()) for c in ep.complexes)
        if all(reals) and all(s1 and s2 for s1, s2 in cplx):
            return reals, cplx
        step *= 2
    return None


def _certify_digit(
    rep: IntPoly, h: IntPoly, coset: int, orthant: Orthant, a: AlgebraicNumber
) -> Digit | None:
    """Certificates for one candidate: interior margins and the per-place
    decrease constants.  None when strict interiority cannot be certified."""
    ep = embed(rep, a, _CERT_BITS)
    margins: list[Fraction] = []
    c_per_place: list[Fraction] = []
    sin_gaps: list[Fraction] = []
    for iv, want in zip(ep.reals, orthant.real_signs):
        lo = iv.lo if want > 0 else -iv.hi
        if lo <= 0:
            return None
        margins.append(lo)
        # proof of the real-place decrease uses c = 2|eps|
        c_per_place.append(2 * iv.abs().hi)
    for cx, quad in zip(ep.complexes, orthant.quadrants):
        sre, sim = QUADRANT_SIGNS[quad]
        re_lo = cx.re.lo if sre > 0 else -cx.re.hi
        im_lo = cx.im.lo if sim > 0 else -cx.im.hi
        if re_lo <= 0 or im_lo <= 0:
            return None
        abs_up = sqrt_upper(cx.abs2().hi)
        # sin of the angular gap to the nearest quadrant boundary
        gap = min(re_lo, im_lo) / abs_up
        margins.append(gap)
        sin_gaps.append(gap)
        # |b - e| <= |e| (1 + 1/sin(gap)) whenever |b| < |e|/sin(gap),
        # squared to match the non-real place convention
        c_per_place.append((abs_up + abs_up * abs_up / min(re_lo, im_lo)) ** 2)
    return Digit(
        rep=rep,
        h=h,
        coset=coset,
        orthant=orthant,
        margin=min(margins),
        c_per_place=tuple(c_per_place),
        sin_gaps=tuple(sin_gaps),
    )


def _max_place_value(rep: IntPoly, a: AlgebraicNumber) -> Iv:
    """Interval for the largest place absolute value (paper conventions)."""
    ep = embed(rep, a, _CAND_BITS)
    los, his = [], []
    for iv in ep.reals:
        av = iv.abs()
        los.append(av.lo)
        his.append(av.hi)
    for cx in ep.complexes:
        a2 = cx.abs2()
        los.append(a2.lo)
        his.append(a2.hi)
    return Iv(max(los), max(his))


def _box_tuples(n: int, radius: int, skip_inside: int):
    """Integer coefficient vectors with sup-norm in (skip_inside, radius]."""
    for tup in itertools.product(range(-radius, radius + 1), repeat=n):
        if max(abs(t) for t in tup) > skip_inside:
            yield tup


def find_digit(
    r: int, U: Orthant, a: AlgebraicNumber, budget: int = 32
) -> Digit:
    """Search r + alpha*h(alpha) with image certified strictly inside U.

    Coefficient boxes for h grow as B = 1, 2, 4, ... <= budget.  Once a
    box yields hits, one further doubling is scanned and the winner among
    all hits is the one of minimal max-place absolute value, choosing the
    lexicographically smallest h on (near-)ties.  Fully deterministic.
    """
    n = a.degree
    m = a.minpoly
    hits: list[tuple[tuple[int, ...], Digit, Iv]] = []
    prev = -1  # the first shell must include h = 0 (rep may be r itself)
    radius = 1
    first_hit_radius = None
    tie_eps = Fraction(1, 1 << 128)
    while radius <= budget:
        for tup in _box_tuples(n, radius, prev):
            h = IntPoly(tup)
            rep = IntPoly((r,)) + h.shift_up()
            if rep.is_zero:
                continue
            signs = _quick_signs(rep, a)
            if signs is None:
                continue
            if not U.matches_strict(*signs):
                continue
            digit = _certify_digit(rep, h, r, U, a)
            if digit is not None:
                key = tuple(tup[i] if i < len(tup) else 0 for i in range(n))
                hits.append((key, digit, _max_place_value(rep, a)))
        if hits and first_hit_radius is None:
            first_hit_radius = radius
        if first_hit_radius is not None and radius >= 2 * first_hit_radius:
            break
        prev = radius
        radius *= 2
    if not hits:
        raise SearchExhausted(
            f"no digit found for coset {r}, orthant {U.label()} within "
            f"box radius {budget}",
            attempted_radius=min(radius, budget),
        )

    def better(x, y):
        kx, _, vx = x
        ky, _, vy = y
        if vx.hi < vy.lo - tie_eps:
            return True
        if vy.hi < vx.lo - tie_eps:
            return False
        return kx < ky

    best = hits[0]
    for cand in hits[1:]:
        if better(cand, best):
            best = cand
    return best[1]


def _thread_count() -> int:
    raw = os.environ.get("HRP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _global_c(digits) -> Fraction:
    return max(c for d in digits for c in d.c_per_place)


def build_digit_set(a: AlgebraicNumber, budget: int = 32) -> DigitSet:
    """Digits for every (coset representative, orthant) pair.

    Requires alpha to have no conjugate strictly inside the unit circle.
    The global constant c is the maximum of the per-digit, per-place
    decrease constants.  Searches for distinct pairs are independent;
    HRP_THREADS > 1 runs them on a thread pool with deterministic
    reassembly in grid order.
    """
    if classify(a).kind == Kind.SOME_INSIDE:
        raise InputError(
            "alpha has a conjugate inside the unit circle; no finite digit "
            "set exists for it"
        )
    m = a.minpoly
    grid = [
        (rr, U)
        for rr in coset_representatives(m)
        for U in all_orthants(a.r, a.s)
    ]
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            digits = list(pool.map(lambda ru: find_digit(ru[0], ru[1], a, budget), grid))
    else:
        digits = [find_digit(rr, U, a, budget) for rr, U in grid]
    return DigitSet(m, tuple(digits), _global_c(digits))
