"""JSON document taxonomy and binary-serialization size benchmarking."""

__version__ = "0.1.0"

from .model import (JsonParseError, PathedNode, deep_equal, enumerate_nodes,
                    format_number, minified_byte_size, minify, parse,
                    resolve_pointer)
from .taxonomy import (TAXONOMY_ACRONYMS, TaxonomyReport, Tier, classify,
                       content_weights, corpus_histograms, nesting_weight,
                       redundancy, size_tier)

__all__ = [
    "JsonParseError", "PathedNode", "TAXONOMY_ACRONYMS", "TaxonomyReport", "Tier",
    "classify", "content_weights", "corpus_histograms", "deep_equal",
    "enumerate_nodes", "format_number", "minified_byte_size", "minify",
    "nesting_weight", "parse", "redundancy", "resolve_pointer", "size_tier",
]
