"""Symbol-pair and Hamming metrics for repeated-root cyclic codes."""

from .castagnoli import CastagnoliDecomposition, CastagnoliTerm, castagnoli_dH, simple_root_distance
from .oracle import oracle_pair_distance
from .pair import RunProfile, hamming_weight, pair_distance, pair_read, pair_weight, run_profile
from .search import DistanceReport, SearchStats, low_weight_codewords, min_pair_distance

__all__ = [
    "CastagnoliDecomposition",
    "CastagnoliTerm",
    "DistanceReport",
    "RunProfile",
    "SearchStats",
    "castagnoli_dH",
    "hamming_weight",
    "low_weight_codewords",
    "min_pair_distance",
    "oracle_pair_distance",
    "pair_distance",
    "pair_read",
    "pair_weight",
    "run_profile",
    "simple_root_distance",
]
