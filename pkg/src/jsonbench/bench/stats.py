"""Descriptive statistics and size-reduction metrics for benchmark tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, float, Fraction]


def round_half_away(x: Number, places: int = 1) -> float:
    """Round on the exact value, halves away from zero (35.75 -> 35.8)."""
    q = Fraction(x) * 10**places
    n = math.floor(abs(q) + Fraction(1, 2))
    return math.copysign(n, q) / 10**places if n else 0.0


def truncate(x: Number, places: int = 1) -> float:
    """Cut toward zero (77.77 -> 77.7)."""
    q = Fraction(x) * 10**places
    n = math.floor(abs(q))
    return math.copysign(n, q) / 10**places if n else 0.0


def fmt1(x: float) -> str:
    """Render a 1-decimal value the way the tables do: 50.0 -> '50'."""
    if x == int(x):
        return str(int(x))
    return f"{x:.1f}"


def median(values: Sequence[Number]) -> Fraction:
    ordered = sorted(Fraction(v) for v in values)
    n = len(ordered)
    mid = n // 2
    if n % 2:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2


@dataclass(frozen=True)
class GroupStats:
    """Average, median, range and population standard deviation of sizes.

    The full-precision values are kept alongside their 1-decimal rendering;
    the rounded copies are computed from exact rationals, not floats.
    """

    count: int
    average: float
    median: float
    range: float
    stddev: float
    rounded: tuple  # (average, median, range, stddev), 1 decimal

    def cells(self) -> list:
        return [fmt1(v) for v in self.rounded]


def group_stats(sizes: Sequence[int]) -> GroupStats:
    if not sizes:
        raise ValueError("group_stats needs at least one size")
    n = len(sizes)
    mean = Fraction(sum(sizes), n)
    mid = median(sizes)
    spread = max(sizes) - min(sizes)
    variance = sum((Fraction(s) - mean) ** 2 for s in sizes) / n
    stddev = math.sqrt(variance)
    return GroupStats(
        count=n,
        average=float(mean),
        median=float(mid),
        range=float(spread),
        stddev=stddev,
        rounded=tuple(round_half_away(v) for v in (mean, mid, spread, stddev)),
    )


def size_reduction_exact(json_size: int, binary_size: int) -> Fraction:
    if json_size <= 0:
        raise ValueError("JSON baseline size must be positive")
    return Fraction((json_size - binary_size) * 100, json_size)


def size_reduction_pct(json_size: int, binary_size: int) -> float:
    """(1 - binary/json) * 100; negative when the binary form is larger."""
    return float(size_reduction_exact(json_size, binary_size))


def size_reduction_ratio(json_size: int, binary_size: int) -> str:
    """json/binary cut to one decimal, e.g. (34, 9) -> '3.7x', (67, 1) -> '67x'."""
    if binary_size <= 0:
        raise ZeroDivisionError("binary size must be positive")
    tenths = json_size * 10 // binary_size
    whole, frac = divmod(tenths, 10)
    return f"{whole}x" if frac == 0 else f"{whole}.{frac}x"


@dataclass(frozen=True)
class ReductionSummary:
    codec: str
    schema_driven: bool
    documents: int
    maximum: float
    minimum: float
    range: float
    median: float
    average: float
    negative_cases: int
    exact: tuple = field(default=(), repr=False, compare=False)

    @property
    def negative_fraction(self) -> float:
        return self.negative_cases / self.documents

    def cells(self) -> list:
        values = self.exact or (self.maximum, self.minimum, self.range,
                                self.median, self.average)
        hi, lo, spread, mid, avg = (fmt1(round_half_away(v)) for v in values)
        pct = truncate(Fraction(self.negative_cases * 100, self.documents))
        return [f"{hi}%", f"{lo}%", spread, f"{mid}%", f"{avg}%",
                f"{self.negative_cases} / {self.documents} ({fmt1(pct)}%)"]


def reduction_summary(codec: str, schema_driven: bool, pairs) -> ReductionSummary:
    """Summarize (json_size, binary_size) pairs, one per document."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("reduction_summary needs at least one document")
    values = [size_reduction_exact(j, b) for j, b in pairs]
    hi, lo = max(values), min(values)
    mid, avg = median(values), sum(values) / len(values)
    return ReductionSummary(
        codec=codec,
        schema_driven=schema_driven,
        documents=len(values),
        maximum=float(hi),
        minimum=float(lo),
        range=float(hi - lo),
        median=float(mid),
        average=float(avg),
        negative_cases=sum(1 for j, b in pairs if b > j),
        exact=(hi, lo, hi - lo, mid, avg),
    )
