"""Measures, dimensions, digit expansions, limit-set membership, staircase map.

Measures are exact Fractions computed from the per-family length recurrences.
Dimension values are floats (53-bit doubles) derived from exact interval
counts and lengths; logarithms of huge integers are taken term-by-term so
deep stages do not lose precision to overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import (
    DigitSet,
    FamilySpec,
    LambdaFamily,
    Power,
    Proportional,
    level_stats,
)

CANTOR_TERNARY = DigitSet(3, (0, 2))


def _log(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


# --- digit expansions -------------------------------------------------------

@dataclass(frozen=True)
class ExpansionRecord:
    """Eventually periodic base-n expansion: 0.(preperiod)(period)(period)...

    An empty period means the expansion terminates (implicit all-zero tail).
    Both parts are minimal: the preperiod stops at the first repeated
    long-division remainder and the period holds distinct remainders only.
    """

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    @property
    def terminating(self) -> bool:
        return not self.period

    def digits_used(self) -> set[int]:
        return set(self.preperiod) | set(self.period)

    def to_rational(self) -> Fraction:
        """Exact value of the represented expansion."""
        b, m = self.base, len(self.preperiod)
        head = 0
        for d in self.preperiod:
            head = head * b + d
        value = Fraction(head, b**m)
        if self.period:
            tail = 0
            for d in self.period:
                tail = tail * b + d
            value += Fraction(tail, b**m * (b ** len(self.period) - 1))
        return value

    def alternate_tail_form(self) -> Optional["ExpansionRecord"]:
        """The second representation of a terminating expansion, if any.

        k/n^m also equals (k-1)/n^m followed by an all-(n-1) tail; nonzero
        terminating values therefore have exactly two base-n expansions.
        """
        if not self.terminating or not self.preperiod:
            return None
        lowered = self.preperiod[:-1] + (self.preperiod[-1] - 1,)
        return ExpansionRecord(self.base, lowered, (self.base - 1,))

    def to_json(self) -> dict:
        return {"base": self.base, "preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def from_json(cls, obj: dict) -> "ExpansionRecord":
        return cls(int(obj["base"]), tuple(obj["preperiod"]), tuple(obj["period"]))


def base_expansion(x: Fraction, base: int) -> ExpansionRecord:
    """Canonical base-n expansion of a rational in [0,1] by exact long division.

    x = 1 is reported in its infinite form 0.(n-1)(n-1)... since no digit
    string below the radix point can terminate at 1.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if not 0 <= x <= 1:
        raise ValueError(f"expansion input must lie in [0,1], got {x}")
    if x == 1:
        return ExpansionRecord(base, (), (base - 1,))
    p, q = x.numerator, x.denominator
    digits: list[int] = []
    seen: dict[int, int] = {}
    rem = p
    while rem and rem not in seen:
        seen[rem] = len(digits)
        rem *= base
        digits.append(rem // q)
        rem %= q
    if rem == 0:
        return ExpansionRecord(base, tuple(digits), ())
    cut = seen[rem]
    return ExpansionRecord(base, tuple(digits[:cut]), tuple(digits[cut:]))


# --- measures ----------------------------------------------------------------

def measure_at_depth(f: FamilySpec, k: int) -> Fraction:
    """Exact total length of the stage-k set, in O(k) from the recurrence."""
    stats = level_stats(f, k)
    return stats.count * stats.min_length


def limit_measure(f: FamilySpec) -> Fraction:
    """Lebesgue measure of the limit set, in closed form."""
    if isinstance(f, (Proportional, DigitSet)):
        return Fraction(0)
    if isinstance(f, Power):
        if f.n == 2:
            return Fraction(0)  # collapses to finitely many points
        return Fraction(f.n - 3, f.n - 2)
    if isinstance(f, LambdaFamily):
        return 1 - f.lam
    raise TypeError(f"unknown family spec: {f!r}")


# --- dimensions ---------------------------------------------------------------

EXACT_SIMILARITY = "exact_similarity"
ESTIMATE_SEQUENCE = "estimate_sequence"


@dataclass(frozen=True)
class DimensionReport:
    value: float
    kind: str
    sequence: tuple[tuple[int, float], ...] | None = None
    count_base: int | None = None     # children per interval (exact reports)
    scale: Fraction | None = None     # per-step dilation factor (exact reports)

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind, "value": self.value}
        if self.kind == EXACT_SIMILARITY:
            obj["numerator_count"] = self.count_base
            obj["scale"] = f"{self.scale.numerator}/{self.scale.denominator}"
        else:
            obj["sequence"] = [[k, d] for k, d in (self.sequence or ())]
        return obj


def similarity_dimension(f: FamilySpec) -> DimensionReport:
    """Dimension from the one-step dilation argument.

    Proportional and DigitSet families are self-similar, so the value is the
    exact similarity dimension. Power (n >= 3) and Lambda families are not
    proportional across steps; for them the step-1 dilation value is reported
    as an estimate only (see dimension_estimates for the full sequence).
    """
    if isinstance(f, Proportional):
        scale = 2 / (1 - f.alpha)
        return DimensionReport(
            value=math.log(2) / _log(scale),
            kind=EXACT_SIMILARITY, count_base=2, scale=scale,
        )
    if isinstance(f, DigitSet):
        return DimensionReport(
            value=math.log(len(f.digits)) / math.log(f.n),
            kind=EXACT_SIMILARITY, count_base=len(f.digits), scale=Fraction(f.n),
        )
    if isinstance(f, Power):
        if f.n == 2:
            raise ValueError("power n=2 collapses to finitely many points; no dimension")
        d1 = _estimate_sequence(f, 1)
        return DimensionReport(value=d1[0][1], kind=ESTIMATE_SEQUENCE, sequence=d1)
    if isinstance(f, LambdaFamily):
        value = math.log(2) / (math.log(6) - _log(3 - f.lam))
        return DimensionReport(value=value, kind=ESTIMATE_SEQUENCE, sequence=((1, value),))
    raise TypeError(f"unknown family spec: {f!r}")


def _estimate_sequence(f: FamilySpec, kmax: int) -> tuple[tuple[int, float], ...]:
    out = []
    for k in range(1, kmax + 1):
        stats = level_stats(f, k)
        if stats.max_length == 0:
            raise ValueError(f"stage {k} is a finite point set; dilation estimate undefined")
        out.append((k, math.log(stats.count) / _log(1 / stats.max_length)))
    return tuple(out)


def dimension_estimates(f: FamilySpec, kmax: int) -> DimensionReport:
    """Dilation estimates d_k = ln(count_k) / ln(1/length_k) for k = 1..kmax."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    seq = _estimate_sequence(f, kmax)
    return DimensionReport(value=seq[-1][1], kind=ESTIMATE_SEQUENCE, sequence=seq)


# --- membership ----------------------------------------------------------------

def member_limit(x: Fraction, f: DigitSet) -> bool:
    """Exact limit-set membership for digit families.

    True iff some base-n expansion of x (canonical, or the alternate tail
    form when x is n-adic) uses only the kept digits. Digits are streamed
    straight out of the long division so a disallowed digit rejects
    immediately, without materializing a possibly huge period.
    """
    if not isinstance(f, DigitSet):
        raise TypeError("member_limit requires a DigitSet family")
    if not 0 <= x <= 1:
        return False
    base, allowed = f.n, set(f.digits)
    if x == 1:
        return True  # 0.(n-1)(n-1)... and n-1 is always kept
    p, q = x.numerator, x.denominator
    seen: set[int] = set()
    rem = p
    while rem and rem not in seen:
        seen.add(rem)
        rem *= base
        digit, rem = divmod(rem, q)
        if digit not in allowed:
            # the alternate tail form digit-1 followed by (n-1)(n-1)...
            # exists only when this is the final digit of a terminating
            # expansion; n-1 is always kept
            return rem == 0 and (digit - 1) in allowed
    return True  # terminated or entered a cycle with every digit kept


def membership_witness(x: Fraction, f: DigitSet) -> ExpansionRecord | None:
    """The expansion proving membership, or None if x is not in the limit set."""
    allowed = set(f.digits)
    rec = base_expansion(x, f.n)
    if rec.digits_used() <= allowed:
        return rec
    alt = rec.alternate_tail_form()
    if alt is not None and alt.digits_used() <= allowed:
        return alt
    return None


def member_at_depth(x: Fraction, f: FamilySpec, k: int) -> bool:
    """Whether x lies in the stage-k set, by descending the refinement tree.

    O(k) per query: at each step only the child interval containing x is
    refined, never the whole stage.
    """
    if not 0 <= x <= 1:
        raise ValueError(f"membership query needs x in [0,1], got {x}")
    if k < 0:
        raise ValueError(f"stage index must be nonnegative, got {k}")
    a, b = Fraction(0), Fraction(1)
    for j in range(1, k + 1):
        if isinstance(f, Proportional):
            h = (b - a) * (1 - f.alpha) / 2
        elif isinstance(f, Power):
            if a == b:
                return True  # point survived its collapse; fixpoint from here
            removal = Fraction(1, f.n**j)
            if removal > b - a:
                raise ValueError(f"power removal 1/{f.n}^{j} exceeds interval length")
            h = (b - a - removal) / 2
        elif isinstance(f, LambdaFamily):
            h = (b - a - f.lam / 3**j) / 2
        elif isinstance(f, DigitSet):
            h = (b - a) / f.n
            for d in f.digits:
                lo = a + d * h
                if lo <= x <= lo + h:
                    a, b = lo, lo + h
                    break
            else:
                return False
            continue
        else:
            raise TypeError(f"unknown family spec: {f!r}")
        if a <= x <= a + h:
            b = a + h
        elif b - h <= x <= b:
            a = b - h
        else:
            return False
    return True


# --- the staircase map -----------------------------------------------------------

def cantor_function(x: Fraction) -> Fraction:
    """The devil's-staircase value of a rational point of the ternary set.

    Takes the {0,2}-witness ternary expansion of x, halves every digit and
    reads the result in base 2; the eventually periodic sum is returned in
    closed form, exactly.
    """
    witness = membership_witness(x, CANTOR_TERNARY) if 0 <= x <= 1 else None
    if witness is None:
        raise ValueError(f"{x} is not in the ternary Cantor set")
    halved = ExpansionRecord(
        2,
        tuple(d // 2 for d in witness.preperiod),
        tuple(d // 2 for d in witness.period),
    )
    return halved.to_rational()
