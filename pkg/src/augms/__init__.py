"""Matching statistics over a run-length BWT index with augmented thresholds."""
from .estimator import MatchingStatisticsIndex
from .index import VARIANTS, AugmentedIndex, IndexBuilder, build_index
from .index_io import load, save
from .matcher import Matcher, MatchingStatistics, QueryStats, compute_ms, extract_mems
from .suffix import Text, build_suffix_bundle

__all__ = [
    "AugmentedIndex",
    "IndexBuilder",
    "Matcher",
    "MatchingStatistics",
    "MatchingStatisticsIndex",
    "QueryStats",
    "Text",
    "VARIANTS",
    "build_index",
    "build_suffix_bundle",
    "compute_ms",
    "extract_mems",
    "load",
    "save",
]
