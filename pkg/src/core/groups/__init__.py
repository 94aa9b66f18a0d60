"""
Group extraction: criterion, local search, Erdos-Renyi null model,
sequential extraction and result storage.
"""

from src.core.groups.criterion import GroupPair, GroupType, criterion_w, link_count, mu, tau, w_from_counts
from src.core.groups.extraction import ExtractedGroup, ExtractionResult, extract_all
from src.core.groups.null_model import NullEstimate, estimate_null, gen_er_gnm, p_value
from src.core.groups.options import ExtractionConfig
from src.core.groups.search import hill_climb, search_best_group
from src.core.groups.storage import load_result, save_result

__all__ = [
    "ExtractedGroup",
    "ExtractionConfig",
    "ExtractionResult",
    "GroupPair",
    "GroupType",
    "NullEstimate",
    "criterion_w",
    "estimate_null",
    "extract_all",
    "gen_er_gnm",
    "hill_climb",
    "link_count",
    "load_result",
    "mu",
    "p_value",
    "save_result",
    "search_best_group",
    "tau",
    "w_from_counts",
]
