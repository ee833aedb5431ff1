"""Finite-stage generators for the four Cantor-like construction families.

Families:
  * Proportional(alpha)  -- remove the middle proportion alpha at every step
  * Power(n)             -- remove a centered open interval of length 1/n^k
                            at step k (Smith-Volterra-Cantor style)
  * DigitSet(n, digits)  -- keep the base-n digit blocks listed in ``digits``
  * LambdaFamily(lam)    -- remove a centered open interval of length lam/3^k

Stages are produced by an integer refinement engine: every stage is held as
integer endpoint pairs over one common denominator, so deep stages (2^20
intervals) stay cheap; Fractions are materialized only on output.
"""

from __future__ import annotations

import gc
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple, Union

from .exact import ClosedInterval, IntervalSet

DEFAULT_DEPTH_CAP = 24


class ConstructionError(ValueError):
    """The requested refinement step is geometrically impossible."""


class DepthCapError(ValueError):
    """Requested stage exceeds the configured enumeration cap."""


@dataclass(frozen=True)
class Proportional:
    alpha: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1:
            raise ValueError(f"proportional removal must satisfy 0 < alpha < 1, got {self.alpha}")


@dataclass(frozen=True)
class Power:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"power construction needs n >= 2, got {self.n}")


@dataclass(frozen=True)
class DigitSet:
    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(sorted(self.digits)))
        d = self.digits
        if self.n < 3:
            raise ValueError(f"digit construction needs base n >= 3, got {self.n}")
        if len(set(d)) != len(d) or not all(0 <= x < self.n for x in d):
            raise ValueError(f"digits must be distinct values in 0..{self.n - 1}")
        if not (2 <= len(d) < self.n):
            raise ValueError("must keep at least 2 and fewer than n digits")
        if d[0] != 0 or d[-1] != self.n - 1:
            raise ValueError("digits must include 0 and n-1 (first and last blocks kept)")


@dataclass(frozen=True)
class LambdaFamily:
    lam: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.lam <= 1:
            raise ValueError(f"lambda family needs 0 < lambda <= 1, got {self.lam}")


FamilySpec = Union[Proportional, Power, DigitSet, LambdaFamily]


@dataclass(frozen=True)
class OpenInterval:
    """An open interval (a, b), a < b; a removed gap."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.a >= self.b:
            raise ValueError(f"open interval needs a < b, got ({self.a}, {self.b})")

    @property
    def length(self) -> Fraction:
        return self.b - self.a


@dataclass(frozen=True)
class IfsMaps:
    """Affine contraction system: a list of x -> scale*x + shift maps."""

    maps: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        images = []
        for scale, shift in self.maps:
            if not 0 < scale < 1:
                raise ValueError(f"IFS scale must lie in (0,1), got {scale}")
            images.append((shift, scale + shift))
        images.sort()
        for (a0, b0), (a1, b1) in zip(images, images[1:]):
            if a1 < b0:
                raise ValueError("IFS images of [0,1] overlap")


# --- integer stage engine -------------------------------------------------
#
# A stage is (denom, pairs) with pairs a list of (a, b) integers, meaning
# the closed intervals [a/denom, b/denom] in construction-tree order.
# _refine returns the next stage plus the integer gaps removed at that step,
# all over the *new* denominator.


def _refine(f: FamilySpec, k: int, denom: int, pairs: list) -> tuple[int, list, list]:
    children: list = []
    gaps: list = []
    if isinstance(f, Proportional):
        p, q = f.alpha.numerator, f.alpha.denominator
        s = 2 * q
        for a, b in pairs:
            h = (b - a) * (q - p)
            a2, b2 = a * s, b * s
            children.append((a2, a2 + h))
            children.append((b2 - h, b2))
            gaps.append((a2 + h, b2 - h))
        return denom * s, children, gaps

    if isinstance(f, Power):
        n = f.n
        s = 2 * n
        if all(a == b for a, b in pairs):
            return denom, list(pairs), []  # all points already: fixpoint
        removal = 2**k  # (1/n^k) scaled by the new denominator (2n)^k
        for a, b in pairs:
            a2, b2 = a * s, b * s
            if a == b:
                children.append((a2, a2))
                continue
            width = b2 - a2
            if width < removal:
                raise ConstructionError(
                    f"power removal 1/{n}^{k} exceeds remaining interval length"
                )
            h = (width - removal) // 2
            children.append((a2, a2 + h))
            children.append((b2 - h, b2))
            gaps.append((a2 + h, b2 - h))
        return denom * s, children, gaps

    if isinstance(f, DigitSet):
        n, digits = f.n, f.digits
        for a, b in pairs:
            h = b - a
            a2 = a * n
            for d in digits:
                children.append((a2 + d * h, a2 + (d + 1) * h))
            for d0, d1 in zip(digits, digits[1:]):
                if d1 > d0 + 1:
                    gaps.append((a2 + (d0 + 1) * h, a2 + d1 * h))
        return denom * n, children, gaps

    if isinstance(f, LambdaFamily):
        p, q = f.lam.numerator, f.lam.denominator
        s = 6 * q
        removal = 2**k * q ** (k - 1) * p  # (lam/3^k) scaled by (6q)^k
        for a, b in pairs:
            a2, b2 = a * s, b * s
            width = b2 - a2
            if width < removal:
                raise ConstructionError(f"lambda removal {f.lam}/3^{k} exceeds interval length")
            h = (width - removal) // 2
            children.append((a2, a2 + h))
            children.append((b2 - h, b2))
            gaps.append((a2 + h, b2 - h))
        return denom * s, children, gaps

    raise TypeError(f"unknown family spec: {f!r}")


def _stages(f: FamilySpec) -> Iterator[tuple[int, list, list]]:
    """Yield (denom, pairs, gaps) for k = 0, 1, 2, ...; gaps are stage-k removals."""
    denom, pairs = 1, [(0, 1)]
    k = 0
    yield denom, pairs, []
    while True:
        k += 1
        denom, pairs, gaps = _refine(f, k, denom, pairs)
        yield denom, pairs, gaps


def _check_depth(k: int, depth_cap: int) -> None:
    if k < 0:
        raise ValueError(f"stage index must be nonnegative, got {k}")
    if k > depth_cap:
        raise DepthCapError(f"stage {k} exceeds depth cap {depth_cap}")


def _fraction(n: int, d: int) -> Fraction:
    # Bypasses Fraction.__new__'s type dispatch; n, d already integers, d > 0.
    g = gcd(n, d)
    f = object.__new__(Fraction)
    f._numerator = n // g
    f._denominator = d // g
    return f


def _materialize(denom: int, pairs: list) -> IntervalSet:
    # Children come out of _refine already sorted left-to-right; merging the
    # rare touching pairs (adjacent kept digits) in the integer domain keeps
    # deep stages clear of O(n log n) Fraction comparisons. Intervals are
    # built through the validation-free path: a <= b holds by construction.
    merged: list = []
    for a, b in pairs:
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1][1] = b
        else:
            merged.append([a, b])
    new_interval = ClosedInterval.__new__
    setattr_ = object.__setattr__
    out = []
    for a, b in merged:
        iv = new_interval(ClosedInterval)
        setattr_(iv, "a", _fraction(a, denom))
        setattr_(iv, "b", _fraction(b, denom))
        out.append(iv)
    return IntervalSet._from_disjoint_sorted(out)


def iterate(f: FamilySpec, k: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> IntervalSet:
    """The stage-k set of the construction, as an exact IntervalSet."""
    _check_depth(k, depth_cap)
    # Deep stages allocate millions of small immutable objects; generational
    # GC passes over the growing heap dominate the runtime unless paused.
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        gen = _stages(f)
        for _ in range(k):
            next(gen)
        denom, pairs, _ = next(gen)
        return _materialize(denom, pairs)
    finally:
        if gc_was_enabled:
            gc.enable()


def removed_by_generation(
    f: FamilySpec, k: int, depth_cap: int = DEFAULT_DEPTH_CAP
) -> list[list[OpenInterval]]:
    """Removed open gaps, one list per generation 1..k, left-to-right within each."""
    _check_depth(k, depth_cap)
    gen = _stages(f)
    next(gen)  # stage 0 removes nothing
    out = []
    for _ in range(k):
        denom, _, gaps = next(gen)
        out.append([OpenInterval(Fraction(a, denom), Fraction(b, denom)) for a, b in gaps])
    return out


def removed_intervals(
    f: FamilySpec, k: int, depth_cap: int = DEFAULT_DEPTH_CAP
) -> list[OpenInterval]:
    """All removals through stage k, generation-major then left-to-right."""
    return [g for gen in removed_by_generation(f, k, depth_cap) for g in gen]


class LevelStats(NamedTuple):
    count: int
    min_length: Fraction
    max_length: Fraction


def level_stats(f: FamilySpec, k: int) -> LevelStats:
    """Interval count and extreme lengths at stage k, via the length recurrence.

    All four families split every interval into equal-length children, so the
    stats follow from an O(k) recurrence; no stage enumeration happens here.
    Counts refer to the construction tree (adjacent digit blocks that merge
    into one closed interval are still counted separately).
    """
    if k < 0:
        raise ValueError(f"stage index must be nonnegative, got {k}")
    one = Fraction(1)
    if isinstance(f, Proportional):
        ratio = (1 - f.alpha) / 2
        return LevelStats(2**k, ratio**k, ratio**k)
    if isinstance(f, DigitSet):
        length = Fraction(1, f.n**k)
        return LevelStats(len(f.digits) ** k, length, length)
    if isinstance(f, Power):
        length, count = one, 1
        for j in range(1, k + 1):
            if length == 0:
                break  # all intervals already degenerate: fixpoint
            removal = Fraction(1, f.n**j)
            if removal > length:
                raise ConstructionError(f"power removal 1/{f.n}^{j} exceeds interval length")
            length = (length - removal) / 2
            count *= 2
        return LevelStats(count, length, length)
    if isinstance(f, LambdaFamily):
        length = one
        for j in range(1, k + 1):
            length = (length - f.lam / Fraction(3**j)) / 2
        return LevelStats(2**k, length, length)
    raise TypeError(f"unknown family spec: {f!r}")


def ifs_step(s: IntervalSet, maps: IfsMaps) -> IntervalSet:
    """One application of the IFS: the union of the affine images of s."""
    images = [s.affine_image(scale, shift) for scale, shift in maps.maps]
    pieces = [i for img in images for i in img]
    result = IntervalSet(pieces)
    if result.total_length != sum((img.total_length for img in images), Fraction(0)):
        raise ConstructionError("IFS images overlap; union is not disjoint")
    return result


def ifs_maps(f: FamilySpec) -> IfsMaps:
    """The self-similar contraction system realizing a Proportional or DigitSet family."""
    if isinstance(f, Proportional):
        scale = (1 - f.alpha) / 2
        return IfsMaps(((scale, Fraction(0)), (scale, 1 - scale)))
    if isinstance(f, DigitSet):
        scale = Fraction(1, f.n)
        return IfsMaps(tuple((scale, Fraction(d, f.n)) for d in f.digits))
    raise ValueError(f"{type(f).__name__} families are not self-similar; no IFS form")


def digit_equivalent(alpha: Fraction) -> DigitSet | None:
    """The two-digit family matching Proportional(alpha), when one exists.

    Removing the middle proportion alpha keeps two blocks of width (1-alpha)/2;
    that matches keeping digits {0, m-1} in base m exactly when m = 2/(1-alpha)
    is an integer >= 3.
    """
    if not 0 < alpha < 1:
        raise ValueError(f"need 0 < alpha < 1, got {alpha}")
    m = 2 / (1 - alpha)
    if m.denominator != 1 or m < 3:
        return None
    return DigitSet(int(m), (0, int(m) - 1))


# --- JSON wire format -----------------------------------------------------

def family_to_json(f: FamilySpec) -> dict:
    if isinstance(f, Proportional):
        return {"family": "proportional", "alpha": f"{f.alpha.numerator}/{f.alpha.denominator}"}
    if isinstance(f, Power):
        return {"family": "power", "n": f.n}
    if isinstance(f, DigitSet):
        return {"family": "digit", "n": f.n, "digits": list(f.digits)}
    if isinstance(f, LambdaFamily):
        return {"family": "lambda", "lambda": f"{f.lam.numerator}/{f.lam.denominator}"}
    raise TypeError(f"unknown family spec: {f!r}")


def family_from_json(obj: dict) -> FamilySpec:
    kind = obj.get("family")
    if kind == "proportional":
        return Proportional(Fraction(obj["alpha"]))
    if kind == "power":
        return Power(int(obj["n"]))
    if kind == "digit":
        return DigitSet(int(obj["n"]), tuple(int(d) for d in obj["digits"]))
    if kind == "lambda":
        return LambdaFamily(Fraction(obj["lambda"]))
    raise ValueError(f"unknown family kind: {kind!r}")
