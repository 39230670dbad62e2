"""Exact arithmetic in Q(alpha) and Z[alpha].

Elements of Z[alpha] are carried as integer-coefficient polynomial
witnesses (IntPoly) evaluated at alpha; equality lives in Q(alpha) via
canonical rational coordinates (FieldElem) in the basis 1, alpha, ...,
alpha^(n-1).  The constant-coefficient congruence drives membership in
alpha*Z[alpha] and the explicit division by alpha that the expansion
iterates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisibilityError, InputError
from .rationals import format_rational, parse_rational

_F0 = Fraction(0)
_F1 = Fraction(1)


def _trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs)


# ---------------------------------------------------------------------------
# rational polynomial helpers (dense, ascending coefficients)


def _qpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [_F0] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    return q, _qpoly_trim(a)


def _qpoly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _qpoly_trim(list(a)), _qpoly_trim(list(b))
    while b:
        _, r = _qpoly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinPoly:
    """Primitive integer minimal polynomial, coefficients ascending.

    Validation is deliberately loud: positive leading coefficient,
    content one, nonzero constant term, and the detectable reducibility
    symptoms (rational roots, repeated factors) are rejected outright.
    Full factorization is out of scope; certified root isolation later
    flags anything that slips through as PrecisionExhausted.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if len(cs) < 2:
            raise InputError("minimal polynomial must have degree >= 1")
        if cs[-1] < 1:
            raise InputError("leading coefficient must be positive")
        if cs[0] == 0:
            raise InputError("alpha = 0 is not allowed (constant term zero)")
        g = 0
        for c in cs:
            g = gcd(g, abs(c))
        if g != 1:
            raise InputError(f"coefficients must be primitive (content {g})")
        if self.degree >= 2 and self._has_rational_root():
            raise InputError("polynomial has a rational root, hence is reducible")
        if not self._is_squarefree():
            raise InputError("polynomial has a repeated factor, hence is reducible")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a0(self) -> int:
        return self.coeffs[0]

    @property
    def an(self) -> int:
        return self.coeffs[-1]

    def _has_rational_root(self) -> bool:
        def divisors(k: int):
            k = abs(k)
            out = []
            d = 1
            while d * d <= k:
                if k % d == 0:
                    out.append(d)
                    out.append(k // d)
                d += 1
            return set(out)

        for p in divisors(self.a0):
            for q in divisors(self.an):
                for num in (p, -p):
                    x = Fraction(num, q)
                    if self.eval_at(x) == 0:
                        return True
        return False

    def _is_squarefree(self) -> bool:
        f = [Fraction(c) for c in self.coeffs]
        df = [Fraction(i * c) for i, c in enumerate(self.coeffs)][1:]
        return len(_qpoly_gcd(f, df)) == 1

    def eval_at(self, x: Fraction) -> Fraction:
        acc = _F0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> MinPoly:
        try:
            return MinPoly(tuple(int(c) for c in obj["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad MinPoly JSON: {obj!r}") from exc


@dataclass(frozen=True)
class IntPoly:
    """Element of Z[alpha] as an integer polynomial witness (ascending).

    Trailing zeros are trimmed; the zero element is the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @staticmethod
    def from_int(k: int) -> IntPoly:
        return IntPoly((k,))

    @property
    def degree(self) -> int:
        """Degree of the witness; -1 for the zero element."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def shift_up(self, k: int = 1) -> IntPoly:
        """Multiply by x^k (i.e. by alpha^k on values)."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def scale(self, k: int) -> IntPoly:
        return IntPoly(tuple(k * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> IntPoly:
        try:
            return IntPoly(tuple(int(c) for c in obj["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad IntPoly JSON: {obj!r}") from exc


@dataclass(frozen=True)
class FieldElem:
    """Element of Q(alpha): rational coordinates in 1, alpha, ..., alpha^(n-1).

    Coordinate-wise equality is the ground-truth equality in Q(alpha).
    """

    coords: tuple[Fraction, ...]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    @staticmethod
    def from_json(obj) -> FieldElem:
        return FieldElem(tuple(parse_rational(s) for s in obj))


# ---------------------------------------------------------------------------
# field arithmetic


@lru_cache(maxsize=None)
def _alpha_power(m: MinPoly, k: int) -> tuple[Fraction, ...]:
    """Coordinates of alpha^k, reducing with alpha^n = -(a_0 + ... )/a_n."""
    n = m.degree
    if k < n:
        return tuple(_F1 if i == k else _F0 for i in range(n))
    prev = _alpha_power(m, k - 1)
    shifted = (_F0,) + prev[:-1]
    top = prev[-1]
    if top == 0:
        return shifted
    an = Fraction(m.an)
    return tuple(s - top * Fraction(m.coeffs[i]) / an for i, s in enumerate(shifted))


def field_from_int(k: int, m: MinPoly) -> FieldElem:
    return FieldElem((Fraction(k),) + (_F0,) * (m.degree - 1))


def to_field(p: IntPoly, m: MinPoly) -> FieldElem:
    """Canonical coordinates of p(alpha), via the power table."""
    n = m.degree
    acc = [_F0] * n
    for j, c in enumerate(p.coeffs):
        if c:
            pw = _alpha_power(m, j)
            for i in range(n):
                acc[i] += c * pw[i]
    return FieldElem(tuple(acc))


def _to_field_horner(p: IntPoly, m: MinPoly) -> FieldElem:
    """Horner-scheme evaluation; independent route used for cross-checks."""
    acc = field_from_int(0, m)
    alpha = FieldElem(_alpha_power(m, 1))
    for c in reversed(p.coeffs):
        acc = field_add(field_mul(acc, alpha, m), field_from_int(c, m))
    return acc


def field_add(x: FieldElem, y: FieldElem) -> FieldElem:
    return FieldElem(tuple(a + b for a, b in zip(x.coords, y.coords)))


def field_sub(x: FieldElem, y: FieldElem) -> FieldElem:
    return FieldElem(tuple(a - b for a, b in zip(x.coords, y.coords)))


def field_scale(x: FieldElem, k: Fraction) -> FieldElem:
    return FieldElem(tuple(a * k for a in x.coords))


def field_mul(x: FieldElem, y: FieldElem, m: MinPoly) -> FieldElem:
    n = m.degree
    conv = [_F0] * (2 * n - 1)
    for i, a in enumerate(x.coords):
        if a:
            for j, b in enumerate(y.coords):
                if b:
                    conv[i + j] += a * b
    acc = list(conv[:n])
    for k in range(n, 2 * n - 1):
        if conv[k]:
            pw = _alpha_power(m, k)
            for i in range(n):
                acc[i] += conv[k] * pw[i]
    return FieldElem(tuple(acc))


# ---------------------------------------------------------------------------
# power sums and traces (used by the exact sign machinery in places)


@lru_cache(maxsize=None)
def power_sum(m: MinPoly, k: int) -> Fraction:
    """Sum of the k-th powers of all roots of m (Newton's identities)."""
    n = m.degree
    if k == 0:
        return Fraction(n)
    a = m.coeffs
    an = Fraction(a[-1])
    acc = _F0
    for i in range(1, min(k, n) + 1):
        if i == k:
            acc += k * Fraction(a[n - k])
        else:
            acc += Fraction(a[n - i]) * power_sum(m, k - i)
    return -acc / an


def field_trace(x: FieldElem, m: MinPoly) -> Fraction:
    """Trace of x from Q(alpha) down to Q."""
    return sum((c * power_sum(m, j) for j, c in enumerate(x.coords)), _F0)


# ---------------------------------------------------------------------------
# division by alpha and coset membership


def div_by_alpha(g: IntPoly, m: MinPoly) -> IntPoly:
    """Exact g(alpha)/alpha inside Z[alpha].

    Uses a_0 = -alpha*(a_1 + a_2*alpha + ... + a_n*alpha^(n-1)), so the
    quotient is shift-down(g - g_0) - (g_0/a_0)*(a_1, ..., a_n).
    Requires a_0 | g_0; anything else is a digit-selection bug upstream.
    """
    g0 = g.constant
    if g0 % m.a0 != 0:
        raise DivisibilityError(
            f"constant term {g0} not divisible by {m.a0}; not in alpha*Z[alpha]"
        )
    t = g0 // m.a0
    out = list(g.coeffs[1:])
    tail = m.coeffs[1:]
    if len(out) < len(tail):
        out.extend([0] * (len(tail) - len(out)))
    if t:
        for i, a in enumerate(tail):
            out[i] -= t * a
    return IntPoly(tuple(out))


def in_alpha_zalpha(p: IntPoly, m: MinPoly) -> bool:
    """Whether p(alpha) lies in alpha*Z[alpha].

    The witness-level criterion a_0 | p_0 decides this: Z[alpha] is
    Z[x]/(M) (M primitive, Gauss), and the ideal (x, M) meets Z exactly
    in M(0)*Z, so the residue of the constant term mod a_0 is well
    defined on values.  alpha_multiple_witness provides the independent
    search-based cross-check for the same question.
    """
    return p.constant % m.a0 == 0


def alpha_multiple_witness(p: IntPoly, m: MinPoly, slack: int = 2) -> IntPoly | None:
    """Bounded exact search for q with alpha*q(alpha) = p(alpha).

    Solves the integer-linear system on canonical coordinates for q of
    degree <= max(deg p, n-1) + slack.  Returns a witness or None.
    """
    if p.is_zero:
        return IntPoly()
    n = m.degree
    d = max(p.degree, n - 1) + slack
    cols = [_alpha_power(m, j + 1) for j in range(d + 1)]
    target = to_field(p, m).coords
    den = 1
    for col in cols:
        for c in col:
            den = den * c.denominator // gcd(den, c.denominator)
    for c in target:
        den = den * c.denominator // gcd(den, c.denominator)
    rows = [[int(cols[j][i] * den) for j in range(d + 1)] for i in range(n)]
    rhs = [int(target[i] * den) for i in range(n)]
    sol = solve_integer(rows, rhs)
    return IntPoly(tuple(sol)) if sol is not None else None


def module_depth(x: FieldElem, m: MinPoly, k_max: int | None = None) -> int | None:
    """Smallest k with x in Z*1 + Z*alpha + ... + Z*alpha^k, or None.

    Decided by exact integer linear algebra on coordinates.  The default
    budget n-1+64 is generous for desk scale; None is a reported
    outcome, not an error.
    """
    n = m.degree
    if k_max is None:
        k_max = n - 1 + 64
    if k_max < n - 1:
        raise InputError(f"k_max={k_max} below n-1={n - 1}")
    for k in range(k_max + 1):
        cols = [_alpha_power(m, j) for j in range(k + 1)]
        den = 1
        for col in cols:
            for c in col:
                den = den * c.denominator // gcd(den, c.denominator)
        for c in x.coords:
            den = den * c.denominator // gcd(den, c.denominator)
        rows = [[int(cols[j][i] * den) for j in range(k + 1)] for i in range(n)]
        rhs = [int(x.coords[i] * den) for i in range(n)]
        if solve_integer(rows, rhs) is not None:
            return k
    return None


# ---------------------------------------------------------------------------
# integer linear solver (column Hermite-style elimination)


def solve_integer(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One integer solution y of A y = rhs, or None if none exists."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return [] if all(v == 0 for v in rhs) else None
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    unim = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]

    pivot_col_of_row: dict[int, int] = {}
    p = 0
    for r in range(nrows):
        if p >= ncols:
            break
        while True:
            nz = [j for j in range(p, ncols) if cols[j][r] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: (abs(cols[j][r]), j))
            if jmin != p:
                cols[p], cols[jmin] = cols[jmin], cols[p]
                unim[p], unim[jmin] = unim[jmin], unim[p]
            others = [j for j in range(p + 1, ncols) if cols[j][r] != 0]
            if not others:
                break
            piv = cols[p][r]
            for j in others:
                q = cols[j][r] // piv
                if q:
                    cj, cp = cols[j], cols[p]
                    for i in range(nrows):
                        cj[i] -= q * cp[i]
                    uj, up = unim[j], unim[p]
                    for i in range(ncols):
                        uj[i] -= q * up[i]
        if p < ncols and cols[p][r] != 0:
            if cols[p][r] < 0:
                cols[p] = [-v for v in cols[p]]
                unim[p] = [-v for v in unim[p]]
            pivot_col_of_row[r] = p
            p += 1

    x = [0] * ncols
    for r in range(nrows):
        acc = rhs[r]
        for j in range(ncols):
            if x[j]:
                acc -= cols[j][r] * x[j]
        if r in pivot_col_of_row:
            j = pivot_col_of_row[r]
            piv = cols[j][r]
            if acc % piv != 0:
                return None
            x[j] = acc // piv
        elif acc != 0:
            return None
    return [sum(unim[j][i] * x[j] for j in range(ncols)) for i in range(ncols)]
