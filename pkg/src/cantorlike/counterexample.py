"""The fat-Cantor Riemann-integrability counterexample.

Enumerates the complement of a fat construction (headline case: the Volterra
set, power n=4) as an ordered sequence of removed open intervals E_1, E_2, ...
and computes the exact L1 tails sum_{i>n} |E_i|. The indicator of the full
complement is discontinuous exactly on the limit set, so it is Riemann
integrable iff that set has measure zero; with a fat family it does not.

All tail values are exact Fractions obtained symbolically (total removed
measure minus a finite prefix sum); no quadrature is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rational, rational_decimal
from .families import FamilySpec, OpenInterval, removed_by_generation
from .analysis import limit_measure


@dataclass(frozen=True)
class RemovedSequence:
    """The removed intervals E_i through some generation, in listing order."""

    source: FamilySpec
    entries: tuple[OpenInterval, ...]
    generation_sizes: tuple[int, ...]

    def generation_end_indices(self) -> list[int]:
        """Cumulative counts n at the end of each generation (1, 3, 7, ... for binary splits)."""
        out, total = [], 0
        for size in self.generation_sizes:
            total += size
            out.append(total)
        return out


def removed_sequence(f: FamilySpec, generations: int) -> RemovedSequence:
    """All removed intervals through the given generation, generation-major order."""
    if generations < 1:
        raise ValueError(f"need at least one generation, got {generations}")
    by_gen = removed_by_generation(f, generations, depth_cap=max(generations, 1))
    entries = tuple(g for gen in by_gen for g in gen)
    return RemovedSequence(source=f, entries=entries, generation_sizes=tuple(len(g) for g in by_gen))


def total_removed_measure(f: FamilySpec) -> Fraction:
    """Measure of the full complement [0,1] minus the limit set."""
    return 1 - limit_measure(f)


def _first_n_removed(f: FamilySpec, n: int) -> list[OpenInterval]:
    entries: list[OpenInterval] = []
    g = 0
    while len(entries) < n:
        g += 1
        gen = removed_by_generation(f, g, depth_cap=g)[g - 1]
        if not gen:
            break  # construction reached a fixpoint; no further removals exist
        entries.extend(gen)
    return entries[:n]


def tail_measure(f: FamilySpec, n: int) -> Fraction:
    """Exact value of sum_{i > n} |E_i|, the L1 distance between the
    indicator of the first n removed intervals and the indicator of the
    whole complement."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    prefix = sum((e.length for e in _first_n_removed(f, n)), Fraction(0))
    return total_removed_measure(f) - prefix


def partial_indicator_discontinuity_count(n: int) -> int:
    """Discontinuity count of the indicator of n disjoint open intervals.

    Each removed interval contributes its two endpoints, hence 2n points;
    this is why every partial indicator is Riemann integrable."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return 2 * n


@dataclass(frozen=True)
class DiscontinuityReport:
    measure: Fraction
    riemann_integrable: bool


def discontinuity_report(f: FamilySpec) -> DiscontinuityReport:
    """Integrability verdict for the indicator of the limit set's complement.

    Its discontinuity set is the limit set itself, so by the Lebesgue
    criterion the indicator is Riemann integrable iff the limit measure is 0.
    """
    measure = limit_measure(f)
    return DiscontinuityReport(measure=measure, riemann_integrable=measure == 0)


def tail_table(f: FamilySpec, n_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """Rows (n, sum_removed, tail) for n = 0..n_max, all exact."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    total = total_removed_measure(f)
    entries = _first_n_removed(f, n_max)
    rows = []
    acc = Fraction(0)
    for n in range(n_max + 1):
        if n > 0:
            # past the last existing removal the sums simply stay put
            if n <= len(entries):
                acc += entries[n - 1].length
        rows.append((n, acc, total - acc))
    return rows


def tail_table_csv(f: FamilySpec, n_max: int) -> str:
    lines = ["n,sum_removed,tail,tail_decimal"]
    for n, acc, tail in tail_table(f, n_max):
        lines.append(f"{n},{format_rational(acc)},{format_rational(tail)},{rational_decimal(tail)}")
    return "\n".join(lines) + "\n"
