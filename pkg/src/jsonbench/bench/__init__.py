from .matrix import (FAILED, JSON_BASELINE, OK, SKIPPED, BenchmarkCell,
                     BenchmarkMatrix, CodecInfo, CompressorInfo, run_matrix)
from .report import emit_report
from .stats import (GroupStats, ReductionSummary, group_stats, reduction_summary,
                    round_half_away, size_reduction_pct, size_reduction_ratio)

__all__ = [
    "FAILED", "JSON_BASELINE", "OK", "SKIPPED", "BenchmarkCell", "BenchmarkMatrix",
    "CodecInfo", "CompressorInfo", "GroupStats", "ReductionSummary", "emit_report",
    "group_stats", "reduction_summary", "round_half_away", "run_matrix",
    "size_reduction_pct", "size_reduction_ratio",
]
