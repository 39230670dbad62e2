"""Certified conjugates, archimedean places, and classification.

Real roots are isolated and refined by exact Sturm/bisection arithmetic.
Complex roots start from floating hints (mpmath) and are then *certified*
purely in rational arithmetic: a disc of radius n*|M(z)/M'(z)| around any
point z contains a root, so n pairwise disjoint such discs pin down all
roots.  Floating point never decides anything; it only proposes centers.

Place conventions: real places carry |x|, non-real places carry |x|^2.
The complex representative of each conjugate pair is the one in the
closed upper half-plane; places are ordered reals-ascending first, then
complex representatives by (real part, imaginary part).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

import mpmath

from .corering import (
    FieldElem,
    IntPoly,
    MinPoly,
    _qpoly_divmod,
    field_mul,
    field_trace,
    to_field,
)
from .errors import BoundaryUndecidable, PrecisionExhausted
from .intervals import Cx, Iv
from .rationals import dyadic_ceil, dyadic_round, format_rational, sqrt_lower, sqrt_upper

DEFAULT_PREC = 128
MAX_PREC = 4096

_F0 = Fraction(0)
_F1 = Fraction(1)


class Kind(str, Enum):
    ALL_UNIT_MODULUS = "AllUnitModulus"
    ALL_EXPANDING = "AllExpanding"
    SOME_INSIDE = "SomeInside"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    is_root_of_unity: bool

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "is_root_of_unity": self.is_root_of_unity}


@dataclass(frozen=True)
class EmbeddingPoint:
    """Certified archimedean images of one element: r intervals, s boxes."""

    reals: tuple[Iv, ...]
    complexes: tuple[Cx, ...]

    def to_json(self) -> list[dict]:
        out = []
        for iv in self.reals:
            out.append({"center": [format_rational(iv.mid), "0/1"],
                        "radius": format_rational(iv.rad)})
        for c in self.complexes:
            rad = sqrt_upper(c.re.rad ** 2 + c.im.rad ** 2)
            out.append({"center": [format_rational(c.re.mid), format_rational(c.im.mid)],
                        "radius": format_rational(rad)})
        return out


# ---------------------------------------------------------------------------
# Sturm machinery (exact)


def _sturm_chain(coeffs: list[Fraction]) -> list[list[Fraction]]:
    f = list(coeffs)
    df = [i * c for i, c in enumerate(coeffs)][1:]
    chain = [f, df]
    while chain[-1]:
        _, r = _qpoly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _eval_qpoly(p: list[Fraction], x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval_qpoly(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def root_bound(m: MinPoly) -> Fraction:
    """Cauchy bound: every root has modulus strictly below this."""
    return 1 + max(Fraction(abs(c), m.an) for c in m.coeffs[:-1])


def _isolate_real_roots(m: MinPoly) -> list[tuple[Fraction, Fraction]]:
    if m.degree == 1:
        x = Fraction(-m.a0, m.an)
        return [(x, x)]
    chain = _sturm_chain([Fraction(c) for c in m.coeffs])
    bound = root_bound(m)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _count_roots(chain, -bound, bound))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        left = _count_roots(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    out.sort()
    return out


def _refine_real(m: MinPoly, lo: Fraction, hi: Fraction, eps: Fraction):
    """Shrink an isolating interval of a simple root below width eps.

    Simple roots of the squarefree minimal polynomial change sign, and no
    rational point is ever a root (rational roots are rejected up front),
    so plain sign bisection refines exactly.
    """
    if lo == hi:
        return lo, hi
    f_lo = m.eval_at(lo)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        f_mid = m.eval_at(mid)
        if (f_lo > 0) == (f_mid > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# complex enclosures


@dataclass
class _Disc:
    re: Fraction
    im: Fraction
    rad: Fraction


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return _F0
    v = Fraction(man) * (Fraction(2) ** exp)
    return -v if sign else v


def _root_hints(m: MinPoly, dps: int) -> list[tuple[Fraction, Fraction]]:
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(m.coeffs)],
                maxsteps=200,
                extraprec=dps,
            )
        except mpmath.libmp.NoConvergence:
            return []
        out = []
        for z in roots:
            z = mpmath.mpc(z)
            out.append((_mpf_to_fraction(z.real), _mpf_to_fraction(z.imag)))
        return out


def _eval_int_poly_cx(coeffs, re: Fraction, im: Fraction):
    """Exact value of an integer polynomial at a rational complex point."""
    ar, ai = _F0, _F0
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def _cert_radius(m: MinPoly, re: Fraction, im: Fraction, bits: int) -> Fraction | None:
    """Radius of a disc around (re, im) certain to contain a root of m.

    Some root always lies within n*|M(z)/M'(z)| of z: otherwise
    |M'(z)/M(z)| = |sum 1/(z - root_i)| < n / (n*|M(z)/M'(z)|) would
    contradict itself.  Exact rational, square root rounded upward.
    """
    n = m.degree
    pr, pi = _eval_int_poly_cx(m.coeffs, re, im)
    if pr == 0 and pi == 0:
        return _F0
    dcoeffs = [i * c for i, c in enumerate(m.coeffs)][1:]
    dr, di = _eval_int_poly_cx(dcoeffs, re, im)
    den = dr * dr + di * di
    if den == 0:
        return None
    rad = sqrt_upper(Fraction(n * n) * (pr * pr + pi * pi) / den, bits=bits)
    return dyadic_ceil(rad, bits)


def _newton_step(m: MinPoly, re: Fraction, im: Fraction, bits: int):
    pr, pi = _eval_int_poly_cx(m.coeffs, re, im)
    dcoeffs = [i * c for i, c in enumerate(m.coeffs)][1:]
    dr, di = _eval_int_poly_cx(dcoeffs, re, im)
    den = dr * dr + di * di
    if den == 0:
        return None
    qr = (pr * dr + pi * di) / den
    qi = (pi * dr - pr * di) / den
    return dyadic_round(re - qr, bits), dyadic_round(im - qi, bits)


class AlgebraicNumber:
    """Minimal polynomial plus certified, refinable root enclosures.

    Value-immutable: refinement only ever shrinks enclosures (monotone
    internal cache behind a lock), so concurrent readers always see a
    valid certificate for the same ordered roots.
    """

    def __init__(self, minpoly: MinPoly, precision: int = DEFAULT_PREC):
        self.minpoly = minpoly
        self._lock = threading.RLock()
        self._reals: list[tuple[Fraction, Fraction]] = []
        self._discs: list[_Disc] = []
        self._bits = 0
        self._build(precision)

    def _build(self, precision: int) -> None:
        m = self.minpoly
        n = m.degree
        eps = Fraction(1, 1 << precision)
        self._reals = [
            _refine_real(m, lo, hi, eps) for lo, hi in _isolate_real_roots(m)
        ]
        r = len(self._reals)
        if (n - r) % 2:
            raise PrecisionExhausted("real root count has wrong parity")
        s = (n - r) // 2
        if s:
            self._discs = self._certify_complex(s, precision)
            self._discs.sort(key=lambda d: (d.re, d.im))
        self._bits = precision

    def _certify_complex(self, s: int, precision: int) -> list[_Disc]:
        m = self.minpoly
        eps = Fraction(1, 1 << precision)
        dps = max(40, int(precision * 0.302) + 25)
        for _ in range(8):
            hints = [(re, im) for re, im in _root_hints(m, dps) if im > 0]
            if len(hints) == s:
                bits = precision + 16
                discs = []
                for re, im in hints:
                    re, im = dyadic_round(re, bits), dyadic_round(im, bits)
                    rad = _cert_radius(m, re, im, bits)
                    if rad is None:
                        break
                    discs.append(_Disc(re, im, rad))
                if len(discs) == s and _discs_certified(discs, eps):
                    return discs
            dps *= 2
            if dps > 50000:
                break
        raise PrecisionExhausted(
            f"could not certify {s} complex conjugate pairs for {m.coeffs}"
        )

    def refine_to(self, bits: int, cap: int = MAX_PREC) -> None:
        """Shrink every enclosure radius below 2^-bits (monotone)."""
        if bits <= self._bits:
            return
        if bits > cap:
            raise PrecisionExhausted(f"precision budget exceeded ({bits} bits)")
        with self._lock:
            if bits <= self._bits:
                return
            m = self.minpoly
            eps = Fraction(1, 1 << bits)
            self._reals = [_refine_real(m, lo, hi, eps) for lo, hi in self._reals]
            self._discs = [self._refine_disc(d, eps, bits) for d in self._discs]
            self._bits = bits

    def _refine_disc(self, d: _Disc, eps: Fraction, bits: int) -> _Disc:
        m = self.minpoly
        cur = d
        for _ in range(200):
            if cur.rad <= eps:
                return cur
            step = _newton_step(m, cur.re, cur.im, bits + 16)
            if step is None:
                break
            re, im = step
            rad = _cert_radius(m, re, im, bits + 16)
            if rad is None:
                break
            dx, dy = re - cur.re, im - cur.im
            # nesting check keeps the certificate tied to the same root
            if rad < cur.rad and dx * dx + dy * dy <= (cur.rad - rad) ** 2:
                cur = _Disc(re, im, rad)
            else:
                break
        if cur.rad <= eps:
            return cur
        raise PrecisionExhausted(f"complex enclosure refinement stalled for {m.coeffs}")

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def r(self) -> int:
        return len(self._reals)

    @property
    def s(self) -> int:
        return len(self._discs)

    @property
    def n_places(self) -> int:
        return self.r + self.s

    def real_enclosure(self, i: int) -> Iv:
        lo, hi = self._reals[i]
        return Iv(lo, hi)

    def complex_enclosure(self, j: int) -> Cx:
        d = self._discs[j]
        return Cx(Iv(d.re - d.rad, d.re + d.rad), Iv(d.im - d.rad, d.im + d.rad))

    def __repr__(self):
        return f"AlgebraicNumber({list(self.minpoly.coeffs)}, r={self.r}, s={self.s})"


def _discs_certified(discs: list[_Disc], eps: Fraction) -> bool:
    for d in discs:
        if not (d.im > d.rad and d.rad <= eps):
            return False
    full = [(d.re, d.im, d.rad) for d in discs] + [(d.re, -d.im, d.rad) for d in discs]
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            dx = full[i][0] - full[j][0]
            dy = full[i][1] - full[j][1]
            rr = full[i][2] + full[j][2]
            if dx * dx + dy * dy <= rr * rr:
                return False
    return True


def analyze(m: MinPoly, precision: int = DEFAULT_PREC) -> AlgebraicNumber:
    """Isolate and certify all conjugates of alpha."""
    return AlgebraicNumber(m, precision)


# ---------------------------------------------------------------------------
# classification


def _is_palindromic(m: MinPoly) -> bool:
    cs = m.coeffs
    return all(cs[j] == cs[len(cs) - 1 - j] for j in range(len(cs)))


def _pair_sum_transform(m: MinPoly) -> list[Fraction]:
    """For palindromic m of degree 2k, the degree-k polynomial whose roots
    are the values root + 1/root (unit-circle roots land in [-2, 2])."""
    k = m.degree // 2
    # v_j(y) stands for x^j + x^-j on y = x + 1/x:
    # v_0 = 2, v_1 = y, v_{j+1} = y*v_j - v_{j-1}
    v_prev: list[Fraction] = [Fraction(2)]
    v_cur: list[Fraction] = [_F0, _F1]
    q = [Fraction(m.coeffs[k])]
    for j in range(1, k + 1):
        c = m.coeffs[k + j]
        if c:
            while len(q) < len(v_cur):
                q.append(_F0)
            for i, vc in enumerate(v_cur):
                q[i] += c * vc
        nxt = [_F0] + v_cur
        for i, vc in enumerate(v_prev):
            nxt[i] -= vc
        v_prev, v_cur = v_cur, nxt
    return q


@lru_cache(maxsize=None)
def _euler_phi(k: int) -> int:
    out, n = k, k
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def _divides_x_pow_minus_1(m: MinPoly, big_m: int) -> bool:
    mq = [Fraction(c) for c in m.coeffs]
    rem: list[Fraction] = [_F1]
    for _ in range(big_m):
        rem = [_F0] + rem
        if len(rem) > m.degree:
            _, rem = _qpoly_divmod(rem, mq)
    return rem == [_F1]


def _root_of_unity(m: MinPoly) -> bool:
    # phi(M) >= sqrt(M/2), so phi(M) <= n bounds M by 2 n^2
    n = m.degree
    return any(
        _euler_phi(big_m) <= n and _divides_x_pow_minus_1(m, big_m)
        for big_m in range(1, 2 * n * n + 2)
    )


def classify(a: AlgebraicNumber) -> Classification:
    """Exact trichotomy: all conjugates on the unit circle, all strictly
    outside, or some strictly inside.

    The unit-circle case is decided algebraically, never numerically: a
    modulus-one root forces the minimal polynomial to be palindromic up
    to sign, and the substitution y = x + 1/x turns "all roots on the
    circle" into an exact Sturm count in [-2, 2].  A non-palindromic
    polynomial has no modulus-one root at all, so interval refinement of
    the remaining two-way decision terminates.
    """
    m = a.minpoly
    n = m.degree
    if n == 1:
        num, den = abs(m.a0), abs(m.an)
        if num == den:
            return Classification(Kind.ALL_UNIT_MODULUS, _root_of_unity(m))
        if num > den:
            return Classification(Kind.ALL_EXPANDING, False)
        return Classification(Kind.SOME_INSIDE, False)

    if _is_palindromic(m):
        # irreducible + palindromic forces even degree (odd degree would
        # put -1 among the roots); roots come in reciprocal pairs
        q = _pair_sum_transform(m)
        on_circle = _count_roots(_sturm_chain(q), Fraction(-2), Fraction(2))
        if on_circle == n // 2:
            return Classification(Kind.ALL_UNIT_MODULUS, _root_of_unity(m))
        return Classification(Kind.SOME_INSIDE, False)

    bits = max(a._bits, 64)
    while True:
        a.refine_to(bits)
        all_out = True
        for i in range(a.r):
            ms = a.real_enclosure(i).square()
            if ms.hi < 1:
                return Classification(Kind.SOME_INSIDE, False)
            if not ms.lo > 1:
                all_out = False
        for d in a._discs:
            c_abs2 = d.re * d.re + d.im * d.im
            lo = max(_F0, sqrt_lower(c_abs2) - d.rad)
            hi = sqrt_upper(c_abs2) + d.rad
            if hi * hi < 1:
                return Classification(Kind.SOME_INSIDE, False)
            if not lo * lo > 1:
                all_out = False
        if all_out:
            return Classification(Kind.ALL_EXPANDING, False)
        bits *= 2
        if bits > MAX_PREC:
            raise PrecisionExhausted("classification refinement budget exceeded")


# ---------------------------------------------------------------------------
# embeddings and place absolute values


def _horner_iv(coeffs, x: Iv) -> Iv:
    acc = Iv.point(0)
    for c in reversed(coeffs):
        acc = (acc * x).shift(Fraction(c))
    return acc


def _horner_cx(coeffs, z: Cx) -> Cx:
    acc = Cx.point(0)
    for c in reversed(coeffs):
        acc = (acc * z).shift(Fraction(c))
    return acc


def embed(
    p: IntPoly,
    a: AlgebraicNumber,
    precision: int = DEFAULT_PREC,
    cap: int = MAX_PREC,
) -> EmbeddingPoint:
    """Certified archimedean images of p(alpha), radius <= 2^-precision."""
    eps = Fraction(1, 1 << precision)
    bits = max(a._bits, 64)
    while True:
        a.refine_to(min(bits, cap), cap=cap)
        reals = tuple(_horner_iv(p.coeffs, a.real_enclosure(i)) for i in range(a.r))
        cplx = tuple(_horner_cx(p.coeffs, a.complex_enclosure(j)) for j in range(a.s))
        if all(iv.rad <= eps for iv in reals) and all(
            c.re.rad <= eps and c.im.rad <= eps for c in cplx
        ):
            return EmbeddingPoint(reals, cplx)
        if bits > cap:
            raise PrecisionExhausted("embedding refinement budget exceeded")
        bits *= 2


def place_abs(
    p: IntPoly, a: AlgebraicNumber, place_index: int, precision: int = DEFAULT_PREC
) -> Iv:
    """|p(alpha)| at a real place, |p(alpha)|^2 at a non-real place."""
    if not 0 <= place_index < a.n_places:
        raise IndexError(f"place index {place_index} out of range")
    eps = Fraction(1, 1 << precision)
    bits = precision
    while True:
        ep = embed(p, a, bits)
        if place_index < a.r:
            val = ep.reals[place_index].abs()
        else:
            val = ep.complexes[place_index - a.r].abs2()
        if val.width <= eps * (1 + val.hi):
            return val
        if bits > MAX_PREC:
            raise PrecisionExhausted("place_abs refinement budget exceeded")
        bits *= 2


# ---------------------------------------------------------------------------
# exact coordinate signs (the boundary machinery behind digit selection)


@lru_cache(maxsize=None)
def _pair_poly_gap(m: MinPoly, ncoeffs: tuple[int, ...], which: str) -> Fraction | None:
    """Positive lower bound separating zero from the nonzero values among
    {N(z_i) +/- N(z_k)}; None when every pair value is zero.

    The monic polynomial with those n^2 pair values as roots has rational
    coefficients obtained via Newton's identities from the power sums
    sum over pairs of (N(z_i) +/- N(z_k))^t, which expand through
    binomials into exact traces of powers of N(alpha).  A Cauchy bound on
    the nonzero factor of that polynomial yields the gap.
    """
    n = m.degree
    d = n * n
    gamma = to_field(IntPoly(ncoeffs), m)
    traces = [Fraction(n)]
    power = FieldElem((_F1,) + (_F0,) * (n - 1))
    for _ in range(d):
        power = field_mul(power, gamma, m)
        traces.append(field_trace(power, m))
    negate_odd = which == "diff"
    psums = []
    for t in range(1, d + 1):
        acc = _F0
        for i in range(t + 1):
            term = Fraction(comb(t, i)) * traces[i] * traces[t - i]
            if negate_odd and (t - i) % 2 == 1:
                acc -= term
            else:
                acc += term
        psums.append(acc)
    es = [_F1]
    for k in range(1, d + 1):
        acc = _F0
        for i in range(1, k + 1):
            term = es[k - i] * psums[i - 1]
            acc += term if i % 2 == 1 else -term
        es.append(acc / k)
    # monic polynomial with the pair values as roots, constant term first
    coeffs = [es[d - i] if (d - i) % 2 == 0 else -es[d - i] for i in range(d + 1)]
    first_nz = next(i for i, c in enumerate(coeffs) if c != 0)
    if first_nz == d:
        return None
    h = coeffs[first_nz:]
    h0 = abs(h[0])
    hmax = max(abs(c) for c in h[1:])
    return h0 / (h0 + hmax)


def _needed_bits(delta: Fraction) -> int:
    inv = Fraction(16) / delta
    return max(64, (inv.numerator // inv.denominator).bit_length() + 4)


def _axis_sign_general(num: IntPoly, a: AlgebraicNumber, j: int, part: str) -> int:
    """Exact sign of Re/Im of the j-th complex image of num (0 = zero)."""
    delta = _pair_poly_gap(a.minpoly, num.coeffs, "sum" if part == "re" else "diff")
    if delta is None:
        return 0
    hard = max(MAX_PREC, _needed_bits(delta) + 64)
    bits = 64
    while True:
        ep = embed(num, a, min(bits, hard), cap=hard)
        iv = ep.complexes[j].re if part == "re" else ep.complexes[j].im
        sgn = iv.sign()
        if sgn:
            return sgn
        if 2 * iv.abs().hi < delta:
            return 0
        if bits > hard:
            raise BoundaryUndecidable(
                f"cannot separate {part} coordinate from zero at place {j}"
            )
        bits *= 2


class SignOracle:
    """Exact signs of embedding coordinates of elements of Z[alpha].

    Real-place values of a nonzero element are never exactly zero (the
    canonical numerator has degree below n while the minimal polynomial
    is irreducible), so interval refinement settles them.  On complex
    places a real or imaginary part can vanish exactly; rational fast
    paths decide the common cases (rational elements, quadratic fields,
    rational squares) and the pair-polynomial gap decides the rest.
    """

    def __init__(self, a: AlgebraicNumber):
        self.a = a
        self.m = a.minpoly
        self._cache: dict[tuple, tuple] = {}

    def signs(self, p: IntPoly) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
        """Per real place: sign of the value.  Per complex place: the pair
        (sign of Re, sign of Im).  0 means certified exactly zero."""
        fe = to_field(p, self.m)
        key = fe.coords
        hit = self._cache.get(key)
        if hit is None:
            hit = self._compute(fe)
            self._cache[key] = hit
        return hit

    def _compute(self, fe: FieldElem):
        a, m = self.a, self.m
        if fe.is_zero:
            return ((0,) * a.r, ((0, 0),) * a.s)
        if fe.is_rational:
            s = 1 if fe.coords[0] > 0 else -1
            return ((s,) * a.r, ((s, 0),) * a.s)
        den = 1
        for c in fe.coords:
            den = den * c.denominator // gcd(den, c.denominator)
        num = IntPoly(tuple(int(c * den) for c in fe.coords))

        real_signs = [0] * a.r
        pending = set(range(a.r))
        bits = 64
        while pending:
            ep = embed(num, a, min(bits, MAX_PREC))
            for i in list(pending):
                s = ep.reals[i].sign()
                if s:
                    real_signs[i] = s
                    pending.discard(i)
            if pending:
                if bits > MAX_PREC:
                    raise BoundaryUndecidable("real place sign did not resolve")
                bits *= 2

        sq = field_mul(fe, fe, m)
        cplx_signs = [
            (
                self._part_sign(num, fe, sq, j, "re"),
                self._part_sign(num, fe, sq, j, "im"),
            )
            for j in range(a.s)
        ]
        return (tuple(real_signs), tuple(cplx_signs))

    def _part_sign(self, num: IntPoly, fe: FieldElem, sq: FieldElem, j: int, part: str) -> int:
        a, m = self.a, self.m
        if m.degree == 2:
            if part == "im":
                c1 = fe.coords[1]
                return 0 if c1 == 0 else (1 if c1 > 0 else -1)
            val = fe.coords[0] - fe.coords[1] * Fraction(m.coeffs[1], 2 * m.coeffs[2])
            return 0 if val == 0 else (1 if val > 0 else -1)
        if sq.is_rational:
            q = sq.coords[0]
            if q < 0 and part == "re":
                return 0  # image is purely imaginary
            if q > 0 and part == "im":
                return 0  # image is a nonzero real number
        bits = 64
        while bits <= 512:
            ep = embed(num, a, bits)
            iv = ep.complexes[j].re if part == "re" else ep.complexes[j].im
            s = iv.sign()
            if s:
                return s
            bits *= 2
        return _axis_sign_general(num, a, j, part)


def quick_part_signs(
    p: IntPoly, a: AlgebraicNumber, bits: int = 192
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]] | None:
    """Cheap certified signs for digit-search candidates.

    Refines up to `bits` only; returns None when any coordinate is still
    undecided (the candidate is on or too close to an orthant boundary to
    be worth keeping).  Accepted answers are certificates.
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
