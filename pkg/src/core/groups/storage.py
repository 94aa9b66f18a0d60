"""
Groups File Storage
===================

Serializes an ExtractionResult to a JSON document and restores it.

Layout:
-------
    {
      "format": "netgroups.groups/1",
      "provenance": {fingerprint, nodes, links, isolated_stripped, config},
      "background": {"file": "<stem>.background.edges", "nodes": n, "links": m},
      "groups": [
        {"S": [...], "T": [...], "W": ..., "tau": ..., "type": "community",
         "p_value": ..., "links_st": ..., "links_stc": ...,
         "working_nodes": ..., "working_links": ...,
         "removed_links": [[u, v], ...], "null": {...}},
        ...
      ]
    }

Labels are sorted and keys are written in sorted order, so identical
results produce byte-identical files. The background graph is written as an
edge list next to the JSON file.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src.core.config import GROUPS_FILE_FORMAT
from src.core.errors import EdgeListParseError, ResultFormatError
from src.core.graph import read_edge_list, write_edge_list
from src.core.groups.criterion import GroupPair
from src.core.groups.extraction import ExtractedGroup, ExtractionResult
from src.core.groups.null_model import NullEstimate

logger = logging.getLogger(__name__)

BACKGROUND_SUFFIX = ".background.edges"


def background_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(path.stem + BACKGROUND_SUFFIX)


def group_to_dict(group: ExtractedGroup, include_null: bool = True) -> Dict[str, Any]:
    pair = group.pair
    data = {
        "S": sorted(pair.S),
        "T": sorted(pair.T),
        "W": pair.w,
        "tau": pair.tau,
        "type": group.group_type.value,
        "p_value": group.p_value,
        "links_st": pair.links_st,
        "links_stc": pair.links_stc,
        "working_nodes": group.working_nodes,
        "working_links": group.working_links,
        "removed_links": [list(link) for link in sorted(group.removed_links)],
    }
    if include_null and group.null is not None:
        data["null"] = group.null.to_dict()
    return data


def group_from_dict(data: Dict[str, Any]) -> ExtractedGroup:
    try:
        pair = GroupPair(
            S=frozenset(int(x) for x in data["S"]),
            T=frozenset(int(x) for x in data["T"]),
            links_st=int(data["links_st"]),
            links_stc=int(data["links_stc"]),
            w=float(data["W"]),
            tau=float(data["tau"]),
        )
        null = NullEstimate.from_dict(data["null"]) if data.get("null") else None
        return ExtractedGroup(
            pair=pair,
            removed_links=frozenset((int(u), int(v)) for u, v in data["removed_links"]),
            p_value=float(data["p_value"]),
            null=null,
            working_nodes=int(data.get("working_nodes", 0)),
            working_links=int(data.get("working_links", 0)),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ResultFormatError(f"malformed group entry: {e}") from e


def result_to_dict(result: ExtractionResult, background_file: Optional[str] = None) -> Dict[str, Any]:
    return {
        "format": GROUPS_FILE_FORMAT,
        "provenance": result.provenance,
        "background": {
            "file": background_file,
            "nodes": result.background.node_count,
            "links": result.background.link_count,
        },
        "groups": [group_to_dict(g) for g in result.groups],
    }


def save_result(result: ExtractionResult, path: Union[str, Path]) -> Path:
    """
    Write the groups file and its background edge list.

    Returns:
        Path of the JSON file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    bg_path = background_path(path)

    write_edge_list(result.background, bg_path, metadata={"role": "background", "groups_file": path.name})
    tmp_path = path.with_name(path.name + ".tmp")
    try:
        with open(tmp_path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(result_to_dict(result, bg_path.name), f, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(tmp_path, path)
    finally:
        if tmp_path.exists():
            tmp_path.unlink()
    logger.info(f"[STORE] wrote {result.group_count} groups to {path}")
    return path


def load_result(path: Union[str, Path]) -> ExtractionResult:
    """
    Restore a result written by `save_result`.

    Raises:
        OSError: If a file cannot be read.
        ResultFormatError: If the document is malformed or has an unknown format.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ResultFormatError(f"{path} is not valid JSON: {e}") from e

    if not isinstance(data, dict) or data.get("format") != GROUPS_FILE_FORMAT:
        raise ResultFormatError(f"{path} is not a {GROUPS_FILE_FORMAT} document")

    groups = [group_from_dict(entry) for entry in data.get("groups", [])]

    bg_name = (data.get("background") or {}).get("file")
    bg_path = path.with_name(bg_name) if bg_name else background_path(path)
    try:
        background, _ = read_edge_list(bg_path, allow_empty=True)
    except EdgeListParseError as e:
        raise ResultFormatError(f"background of {path} is malformed: {e}") from e

    logger.info(f"[STORE] loaded {len(groups)} groups from {path}")
    return ExtractionResult(groups=groups, background=background, provenance=dict(data.get("provenance", {})))
