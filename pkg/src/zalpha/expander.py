"""Height-reducing expansion: iterate beta -> (beta - digit)/alpha.

Each step picks the digit matching beta's coset whose orthant closure
contains the embedding of beta, so the subtraction is exactly divisible
and every archimedean place value drops below max(previous, c).  Degrees
contract to n-1 and stay there; since bounded canonical states form a
finite set, every expansion ends in the zero state, a cycle, or a step
budget.  The recomposition identity

    beta_0 = sum_j digit_j * alpha^j + alpha^k * tail

holds exactly for every trace, whatever the terminal status.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .corering import (
    IntPoly,
    div_by_alpha,
    field_add,
    field_from_int,
    field_mul,
    to_field,
)
from .digitset import Digit, DigitSet, resolve_orthant
from .errors import BudgetExhausted, InputError
from .intervals import Iv
from .places import AlgebraicNumber, SignOracle, embed
from .rationals import format_decimal_up

_AUDIT_BITS = 64


class Status(str, Enum):
    ZERO = "zero"
    CYCLE = "cycle"
    BUDGET = "budget"


@dataclass(frozen=True)
class TraceStep:
    beta: IntPoly
    digit_id: int | None
    abs_values: tuple[Iv, ...] | None


@dataclass(frozen=True)
class ExpansionTrace:
    beta0: IntPoly
    steps: tuple[TraceStep, ...]
    status: Status
    digits_out: tuple[int, ...]
    tail: IntPoly
    cycle_entry: int | None
    cycle_period: int | None


@dataclass(frozen=True)
class Attractor:
    """Cycle states of the reduction map reached from a seed box.

    The zero state is terminal by convention (expanding it emits nothing),
    so closure under the step map treats 0 as a fixed point.
    """

    states: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[tuple[int, ...], ...], ...]
    budget_seeds: tuple[tuple[int, ...], ...]

    def contains(self, p: IntPoly) -> bool:
        return p.coeffs in set(self.states)

    def to_json(self) -> dict:
        return {
            "states": [list(s) for s in self.states],
            "cycles": [[list(s) for s in orbit] for orbit in self.cycles],
            "budget_seeds": [list(s) for s in self.budget_seeds],
        }


@dataclass(frozen=True)
class Representation:
    """Finite word over F plus a terminal tail drawn from the attractor."""

    digit_ids: tuple[int, ...]
    tail: IntPoly


class Expander:
    """Digit selection and expansion with a shared per-state memo.

    Pure given (digit set, alpha): memoization only caches deterministic
    results, so traces are identical no matter how work is scheduled.
    """

    def __init__(self, digitset: DigitSet, a: AlgebraicNumber):
        if digitset.minpoly != a.minpoly:
            raise InputError("digit set and algebraic number disagree on alpha")
        self.F = digitset
        self.a = a
        self.m = a.minpoly
        self._oracle = SignOracle(a)
        self._lookup = digitset.lookup()
        self._canon_deg = self.m.degree - 1
        self._step_cache: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}

    # -- single steps ----------------------------------------------------

    def select_digit(self, beta: IntPoly) -> int:
        """Digit id whose coset matches beta and whose orthant closure
        contains the embedding of beta (exact boundary rule)."""
        if beta.is_zero:
            raise InputError("the zero element takes no digit")
        coset = beta.constant % abs(self.m.a0)
        real_s, cplx_s = self._oracle.signs(beta)
        orthant = resolve_orthant(real_s, cplx_s)
        return self._lookup[(coset, orthant)]

    def step(self, beta: IntPoly) -> tuple[int, IntPoly]:
        """One reduction step: the chosen digit id and (beta - digit)/alpha."""
        if beta.degree <= self._canon_deg:
            key = beta.coeffs
            hit = self._step_cache.get(key)
            if hit is not None:
                return hit[0], IntPoly(hit[1])
            digit_id = self.select_digit(beta)
            nxt = div_by_alpha(beta - self.F.digits[digit_id].rep, self.m)
            self._step_cache[key] = (digit_id, nxt.coeffs)
            return digit_id, nxt
        digit_id = self.select_digit(beta)
        nxt = div_by_alpha(beta - self.F.digits[digit_id].rep, self.m)
        return digit_id, nxt

    def _abs_values(self, beta: IntPoly) -> tuple[Iv, ...]:
        ep = embed(beta, self.a, _AUDIT_BITS)
        vals = [iv.abs() for iv in ep.reals]
        vals.extend(c.abs2() for c in ep.complexes)
        return tuple(vals)

    # -- expansion ---------------------------------------------------------

    def expand(
        self, beta0: IntPoly, max_steps: int = 10_000, audit: bool = True
    ) -> ExpansionTrace:
        if max_steps < 1:
            raise InputError("max_steps must be >= 1")
        steps: list[TraceStep] = []
        digits: list[int] = []
        seen: dict[tuple[int, ...], int] = {}
        beta = beta0
        k = 0
        while True:
            vals = self._abs_values(beta) if audit else None
            if beta.is_zero:
                steps.append(TraceStep(beta, None, vals))
                return ExpansionTrace(
                    beta0, tuple(steps), Status.ZERO, tuple(digits), IntPoly(), None, None
                )
            if beta.degree <= self._canon_deg:
                key = beta.coeffs
                if key in seen:
                    entry = seen[key]
                    steps.append(TraceStep(beta, None, vals))
                    return ExpansionTrace(
                        beta0,
                        tuple(steps),
                        Status.CYCLE,
                        tuple(digits[:entry]),
                        IntPoly(key),
                        entry,
                        k - entry,
                    )
                seen[key] = k
            if k >= max_steps:
                steps.append(TraceStep(beta, None, vals))
                return ExpansionTrace(
                    beta0, tuple(steps), Status.BUDGET, tuple(digits), beta, None, None
                )
            digit_id, nxt = self.step(beta)
            steps.append(TraceStep(beta, digit_id, vals))
            digits.append(digit_id)
            beta = nxt
            k += 1

    def recomposition_holds(self, trace: ExpansionTrace) -> bool:
        """Exact check of beta0 = sum digit_j alpha^j + alpha^k tail."""
        m = self.m
        alpha = to_field(IntPoly((0, 1)), m)
        acc = to_field(trace.tail, m)
        for digit_id in reversed(trace.digits_out):
            eps = to_field(self.F.digits[digit_id].rep, m)
            acc = field_add(field_mul(acc, alpha, m), eps)
        return acc == to_field(trace.beta0, m)

    # -- attractor ---------------------------------------------------------

    def attractor(self, seed_box: int = 20, max_steps: int = 10_000) -> Attractor:
        """All cycles reached by expanding every canonical seed with
        coefficients in [-seed_box, seed_box]."""
        n = self.m.degree
        if seed_box < 0:
            return Attractor((), (), ())
        seeds = sorted(
            {IntPoly(t).coeffs for t in
             itertools.product(range(-seed_box, seed_box + 1), repeat=n)}
        )
        # resolution: state -> (kind, steps_to_terminal, cycle_id)
        resolution: dict[tuple[int, ...], tuple[str, int, int]] = {
            (): ("zero", 0, -1)
        }
        cycles: list[tuple[tuple[int, ...], ...]] = []
        overruns: list[tuple[int, ...]] = []
        for seed in seeds:
            if seed in resolution:
                continue
            path: list[tuple[int, ...]] = []
            index: dict[tuple[int, ...], int] = {}
            cur = seed
            overrun = False
            while True:
                known = resolution.get(cur)
                if known is not None:
                    kind, lead, cid = known
                    for i, st in enumerate(path):
                        resolution[st] = (kind, lead + len(path) - i, cid)
                    break
                if cur in index:
                    entry = index[cur]
                    orbit = tuple(path[entry:])
                    cid = len(cycles)
                    cycles.append(orbit)
                    for i in range(entry, len(path)):
                        resolution[path[i]] = ("cycle", 0, cid)
                    for i in range(entry):
                        resolution[path[i]] = ("cycle", entry - i, cid)
                    break
                index[cur] = len(path)
                path.append(cur)
                if len(path) > max_steps + 1:
                    overruns.append(seed)
                    overrun = True
                    break
                _, nxt = self.step(IntPoly(cur))
                cur = nxt.coeffs
            if overrun:
                continue
        budget = list(overruns)
        for seed in seeds:
            res = resolution.get(seed)
            if res is None:
                continue
            kind, lead, cid = res
            total = lead + (len(cycles[cid]) if kind == "cycle" else 0)
            if total > max_steps:
                budget.append(seed)
        state_set = {()} if seeds else set()
        for orbit in cycles:
            state_set.update(orbit)
        norm_cycles = sorted(_normalize_orbit(o) for o in cycles)
        return Attractor(
            tuple(sorted(state_set)),
            tuple(norm_cycles),
            tuple(sorted(set(budget))),
        )

    # -- full representations ----------------------------------------------

    def represent(
        self, beta0: IntPoly, attractor: Attractor, max_steps: int = 10_000
    ) -> Representation:
        """Digit word over F with the tail emitted as the final letter.

        The tail must land in the attractor (or be zero); otherwise the
        attractor was built from too small a seed box for this input.
        """
        trace = self.expand(beta0, max_steps, audit=False)
        if trace.status is Status.BUDGET:
            raise BudgetExhausted(
                f"expansion of {list(beta0.coeffs)} did not resolve in {max_steps} steps"
            )
        tail = trace.tail
        if not tail.is_zero and not attractor.contains(tail):
            raise BudgetExhausted(
                f"tail {list(tail.coeffs)} is outside the supplied attractor"
            )
        return Representation(trace.digits_out, tail)


def _normalize_orbit(orbit: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    k = orbit.index(min(orbit))
    return orbit[k:] + orbit[:k]


# ---------------------------------------------------------------------------
# functional API mirroring the operation signatures


def select_digit(beta: IntPoly, F: DigitSet, a: AlgebraicNumber) -> Digit:
    ex = Expander(F, a)
    return F.digits[ex.select_digit(beta)]


def step(beta: IntPoly, F: DigitSet, a: AlgebraicNumber) -> tuple[Digit, IntPoly]:
    ex = Expander(F, a)
    digit_id, nxt = ex.step(beta)
    return F.digits[digit_id], nxt


def expand(
    beta0: IntPoly,
    F: DigitSet,
    a: AlgebraicNumber,
    max_steps: int = 10_000,
    audit: bool = True,
) -> ExpansionTrace:
    return Expander(F, a).expand(beta0, max_steps, audit)


def attractor(
    F: DigitSet, a: AlgebraicNumber, seed_box: int = 20, max_steps: int = 10_000
) -> Attractor:
    return Expander(F, a).attractor(seed_box, max_steps)


def represent(
    beta0: IntPoly,
    F: DigitSet,
    A: Attractor,
    a: AlgebraicNumber,
    max_steps: int = 10_000,
) -> Representation:
    return Expander(F, a).represent(beta0, A, max_steps)


def search_integer_digits(
    a: AlgebraicNumber,
    bound_m: int,
    region: list[IntPoly],
    word_len: int,
) -> int | None:
    """HEURISTIC brute-force hunt for a plain-integer digit set.

    Returns the smallest m <= bound_m such that every region element is a
    word of length <= word_len over {0, +-1, ..., +-m}, or None.  Failure
    proves nothing; this is a desk-scale probe, not a construction.
    """
    from .verify import coverage

    region = list(region)
    if not region:
        return 0
    for m in range(bound_m + 1):
        alphabet: list[IntPoly] = [IntPoly.from_int(0)]
        for d in range(1, m + 1):
            alphabet.append(IntPoly.from_int(d))
            alphabet.append(IntPoly.from_int(-d))
        report = coverage(alphabet, a, region, word_len)
        if report.covered:
            return m
    return None


# ---------------------------------------------------------------------------
# JSON


def trace_to_json(
    trace: ExpansionTrace,
    F: DigitSet,
    recomposition_exact: bool | None = None,
    audit_entries: list[dict] | None = None,
    audit_pass: bool | None = None,
) -> dict:
    out: dict = {
        "alpha": F.minpoly.to_json(),
        "beta0": list(trace.beta0.coeffs),
        "digits": list(trace.digits_out),
        "tail": list(trace.tail.coeffs),
        "status": trace.status.value,
    }
    if trace.cycle_entry is not None:
        out["cycle_entry"] = trace.cycle_entry
        out["cycle_period"] = trace.cycle_period
    if recomposition_exact is not None:
        out["recomposition_exact"] = recomposition_exact
    if audit_entries is not None:
        out["audit"] = audit_entries
        out["audit_pass"] = audit_pass
    return out


def format_value(iv: Iv) -> str:
    return format_decimal_up(iv.mid, 20)
