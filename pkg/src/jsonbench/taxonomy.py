"""Document taxonomy: size tier, content type, redundancy and structure.

Every threshold decision (weight ties, the 25% redundancy cut, the nesting
cut of 10) is taken on exact rationals so that borderline documents are
classified the same way on every platform. Floats only appear in the
report fields meant for display.
"""

from __future__ import annotations

import enum
import io
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .model import (BOOLEAN, NUMERIC, STRUCTURAL, TEXTUAL, JsonValue,
                    PathedNode, enumerate_nodes)

QUALIFIERS = (TEXTUAL, NUMERIC, BOOLEAN)
_LETTER = {TEXTUAL: "T", NUMERIC: "N", BOOLEAN: "B"}

REDUNDANCY_THRESHOLD = 25
NESTING_THRESHOLD = 10

SIZE_BIN_WIDTH = 100
REDUNDANCY_BIN_WIDTH = Fraction(5, 2)
NESTING_BIN_WIDTH = 5


class Tier(enum.IntEnum):
    TIER1 = 1
    TIER2 = 2
    TIER3 = 3

    @property
    def label(self) -> str:
        return {
            1: "Tier 1 Minified < 100 bytes",
            2: "Tier 2 Minified ≥ 100 < 1000 bytes",
            3: "Tier 3 Minified ≥ 1000 bytes",
        }[self.value]


def _all_acronyms() -> tuple:
    names = []
    for tier in Tier:
        for content in "NTB":
            for redundancy in "RN":
                for structure in "FN":
                    names.append(f"Tier {tier.value} {content}{redundancy}{structure}")
    return tuple(names)


# The 36 categories, in the order the taxonomy table lists them.
TAXONOMY_ACRONYMS = _all_acronyms()


def size_tier(byte_size: int) -> Tier:
    if byte_size < 0:
        raise ValueError("byte size must be non-negative")
    if byte_size < 100:
        return Tier.TIER1
    if byte_size < 1000:
        return Tier.TIER2
    return Tier.TIER3


def truncate2(x) -> float:
    """Cut a non-negative quantity to 2 decimals (15.999 -> 15.99)."""
    return math.floor(Fraction(x) * 100) / 100


@dataclass(frozen=True)
class ContentWeights:
    total_count: int   # C: every value, structural ones included
    total_bytes: int   # S: minified size of the document
    counts: Mapping[str, int] = field(default_factory=dict)   # K per class
    sizes: Mapping[str, int] = field(default_factory=dict)    # B per class

    def exact(self, qualifier: str) -> Fraction:
        k = self.counts.get(qualifier, 0)
        b = self.sizes.get(qualifier, 0)
        # ((K*100/C) * (B*100/S)) / 100
        return Fraction(k * 100, self.total_count) * Fraction(b * 100, self.total_bytes) / 100

    @property
    def textual_weight(self) -> float:
        return float(self.exact(TEXTUAL))

    @property
    def numeric_weight(self) -> float:
        return float(self.exact(NUMERIC))

    @property
    def boolean_weight(self) -> float:
        return float(self.exact(BOOLEAN))

    def display(self) -> dict:
        return {q: truncate2(self.exact(q)) for q in QUALIFIERS}


def weights_from_nodes(nodes: Sequence[PathedNode]) -> ContentWeights:
    counts: Counter = Counter()
    sizes: Counter = Counter()
    for node in nodes:
        if node.kind != STRUCTURAL:
            counts[node.kind] += 1
            sizes[node.kind] += node.byte_size
    return ContentWeights(
        total_count=len(nodes),
        total_bytes=nodes[0].byte_size,
        counts={q: counts[q] for q in QUALIFIERS},
        sizes={q: sizes[q] for q in QUALIFIERS},
    )


def content_weights(value: JsonValue) -> ContentWeights:
    return weights_from_nodes(enumerate_nodes(value))


def content_qualifiers(weights: ContentWeights) -> tuple:
    """Every class whose weight ties for the maximum, in T/N/B order."""
    exact = {q: weights.exact(q) for q in QUALIFIERS}
    top = max(exact.values())
    return tuple(q for q in QUALIFIERS if exact[q] == top)


def redundancy_from_nodes(nodes: Sequence[PathedNode]) -> Fraction:
    total = len(nodes)
    unique = sum(1 for n in nodes if n.duplicate_of is None)
    return Fraction((total - unique) * 100, total)


def redundancy(value: JsonValue) -> float:
    """Percentage of values that repeat an earlier deep-equal value."""
    return float(redundancy_from_nodes(enumerate_nodes(value)))


@dataclass(frozen=True)
class Structure:
    height: int
    level_sizes: Mapping[int, int]
    largest_level: Optional[int]
    nesting_weight: int


def structure_from_nodes(nodes: Sequence[PathedNode]) -> Structure:
    height = max(n.level for n in nodes) - 1
    level_sizes: dict = defaultdict(int)
    for node in nodes:
        if node.kind != STRUCTURAL:
            level_sizes[node.level] += node.byte_size
    level_sizes = dict(sorted(level_sizes.items()))
    candidates = [(size, -level) for level, size in level_sizes.items() if level >= 2]
    if not candidates:
        return Structure(height, level_sizes, None, 0)
    # Largest size wins; ties go to the shallowest level.
    largest = -max(candidates)[1]
    return Structure(height, level_sizes, largest, height * (largest - 1))


def nesting_weight(value: JsonValue) -> Structure:
    return structure_from_nodes(enumerate_nodes(value))


@dataclass(frozen=True)
class TaxonomyReport:
    byte_size: int
    tier: Tier
    weights: ContentWeights
    qualifiers: tuple
    node_count: int
    unique_count: int
    redundancy_pct: float
    redundant: bool
    height: int
    level_sizes: Mapping[int, int]
    largest_level: Optional[int]
    nesting_weight: int
    nested: bool
    acronyms: tuple

    @property
    def description(self) -> str:
        content = " and ".join(self.qualifiers)
        return ", ".join([
            self.tier.label,
            content,
            "redundant" if self.redundant else "non-redundant",
            "nested" if self.nested else "flat",
        ])

    @property
    def redundancy_exact(self) -> Fraction:
        return Fraction((self.node_count - self.unique_count) * 100, self.node_count)

    def to_dict(self) -> dict:
        shown = self.weights.display()
        return {
            "taxonomy": {
                "description": self.description,
                "acronyms": list(self.acronyms),
            },
            "summary": {
                "byte_size": self.byte_size,
                "tier": self.tier.value,
                "qualifiers": list(self.qualifiers),
                "weights": {q: shown[q] for q in QUALIFIERS},
                "redundancy_pct": truncate2(self.redundancy_exact),
                "redundant": self.redundant,
                "height": self.height,
                "largest_level": self.largest_level,
                "nesting_weight": self.nesting_weight,
                "nested": self.nested,
            },
            "analysis": {
                "value_count": self.weights.total_count,
                "unique_value_count": self.unique_count,
                "counts": dict(self.weights.counts),
                "byte_sizes": dict(self.weights.sizes),
                "level_sizes": {str(k): v for k, v in self.level_sizes.items()},
            },
        }


def report_from_nodes(nodes: Sequence[PathedNode]) -> TaxonomyReport:
    weights = weights_from_nodes(nodes)
    qualifiers = content_qualifiers(weights)
    unique = sum(1 for n in nodes if n.duplicate_of is None)
    dup_pct = redundancy_from_nodes(nodes)
    redundant = dup_pct >= REDUNDANCY_THRESHOLD
    shape = structure_from_nodes(nodes)
    nested = shape.nesting_weight >= NESTING_THRESHOLD
    tier = size_tier(weights.total_bytes)
    suffix = ("R" if redundant else "N") + ("N" if nested else "F")
    return TaxonomyReport(
        byte_size=weights.total_bytes,
        tier=tier,
        weights=weights,
        qualifiers=qualifiers,
        node_count=len(nodes),
        unique_count=unique,
        redundancy_pct=float(dup_pct),
        redundant=redundant,
        height=shape.height,
        level_sizes=shape.level_sizes,
        largest_level=shape.largest_level,
        nesting_weight=shape.nesting_weight,
        nested=nested,
        acronyms=tuple(f"Tier {tier.value} {_LETTER[q]}{suffix}" for q in qualifiers),
    )


def classify(value: JsonValue) -> TaxonomyReport:
    return report_from_nodes(enumerate_nodes(value))


# -- text rendering ---------------------------------------------------------------

def render_text(report: TaxonomyReport, nodes: Optional[Sequence[PathedNode]] = None) -> str:
    """Plain-text report with Taxonomy, Summary and Full Analysis sections."""
    shown = report.weights.display()
    out = io.StringIO()
    out.write("Taxonomy\n")
    out.write(f"  {report.description}\n")
    out.write(f"  {', '.join(report.acronyms)}\n\n")

    summary = [
        ("Byte size", f"{report.byte_size} bytes"),
        ("Tier", report.tier.label),
        ("Textual weight", f"{shown[TEXTUAL]:.2f}"),
        ("Numeric weight", f"{shown[NUMERIC]:.2f}"),
        ("Boolean weight", f"{shown[BOOLEAN]:.2f}"),
        ("Content type", " and ".join(report.qualifiers)),
        ("Redundancy", f"{truncate2(report.redundancy_exact):.2f}%"),
        ("Height", str(report.height)),
        ("Largest level", "-" if report.largest_level is None else str(report.largest_level)),
        ("Nesting weight", str(report.nesting_weight)),
    ]
    out.write("Summary\n")
    width = max(len(k) for k, _ in summary)
    for key, value in summary:
        out.write(f"  {key.ljust(width)}  {value}\n")

    w = report.weights
    sizes = ", ".join(f"{lvl}: {b}" for lvl, b in report.level_sizes.items()) or "-"
    analysis = [("Values (C)", str(w.total_count)), ("Unique values", str(report.unique_count))]
    analysis += [(f"{q.capitalize()} count/bytes", f"{w.counts[q]} / {w.sizes[q]}")
                 for q in QUALIFIERS]
    analysis.append(("Level sizes", sizes))
    out.write("\nFull Analysis\n")
    width = max(len(k) for k, _ in analysis)
    for key, value in analysis:
        out.write(f"  {key.ljust(width)}  {value}\n")
    if nodes is not None:
        out.write("\n")
        out.write(_node_table(nodes))
    return out.getvalue()


def _node_table(nodes: Sequence[PathedNode]) -> str:
    header = ("JSON Pointer", "Type", "Level", "Byte-size", "Same As")
    rows = [(n.pointer, n.kind.capitalize(), str(n.level), str(n.byte_size),
             n.duplicate_of or "") for n in nodes]
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  " + "  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip()
             for r in [header, *rows]]
    lines.insert(1, "  " + "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# -- corpus histograms ------------------------------------------------------------

@dataclass(frozen=True)
class CorpusHistogram:
    metric: str
    bin_width: Optional[float]
    bins: tuple  # (lower bound or label, count) pairs

    @property
    def total(self) -> int:
        return sum(count for _, count in self.bins)

    def to_csv(self) -> str:
        head = "lower_bound,count" if self.bin_width is not None else "label,count"
        lines = [head]
        for bound, count in self.bins:
            lines.append(f"{bound},{count}")
        return "\n".join(lines) + "\n"


def _contiguous(metric: str, width, indices: Iterable[int], scale) -> CorpusHistogram:
    tally = Counter(indices)
    top = max(tally, default=-1)
    bins = tuple((scale(i), tally.get(i, 0)) for i in range(top + 1))
    return CorpusHistogram(metric, width, bins)


def _categorical(metric: str, labels: Iterable[str], rank) -> CorpusHistogram:
    tally = Counter(labels)
    return CorpusHistogram(metric, None, tuple(sorted(tally.items(), key=lambda kv: rank(kv[0]))))


def corpus_histograms(reports: Sequence[TaxonomyReport]) -> dict:
    """Binned distributions of a corpus, keyed by metric name.

    Byte sizes fall into 100-byte bins, redundancy into 2.5-point bins and
    nesting weights into bins of 5; bins run contiguously from zero to the
    highest occupied one. Documents carrying several content qualifiers are
    counted once, under the combined label, so every histogram partitions
    the corpus.
    """
    q_rank = {q: i for i, q in enumerate(QUALIFIERS)}
    a_rank = {a: i for i, a in enumerate(TAXONOMY_ACRONYMS)}
    return {
        "byte_size": _contiguous(
            "byte_size", SIZE_BIN_WIDTH,
            (r.byte_size // SIZE_BIN_WIDTH for r in reports),
            lambda i: i * SIZE_BIN_WIDTH),
        "redundancy": _contiguous(
            "redundancy", float(REDUNDANCY_BIN_WIDTH),
            (math.floor(r.redundancy_exact / REDUNDANCY_BIN_WIDTH) for r in reports),
            lambda i: float(i * REDUNDANCY_BIN_WIDTH)),
        "nesting_weight": _contiguous(
            "nesting_weight", NESTING_BIN_WIDTH,
            (r.nesting_weight // NESTING_BIN_WIDTH for r in reports),
            lambda i: i * NESTING_BIN_WIDTH),
        "content_type": _categorical(
            "content_type", ("+".join(r.qualifiers) for r in reports),
            lambda label: [q_rank[q] for q in label.split("+")]),
        "category": _categorical(
            "category", ("+".join(r.acronyms) for r in reports),
            lambda label: [a_rank[a] for a in label.split("+")]),
    }
