"""`extract`: extract significant groups and write the groups file."""

import argparse
import logging

from src.cli.app import add_flag
from src.cli.commands.common import add_extraction_flags, add_seed_flag, extraction_config
from src.core.config import EXIT_OK
from src.core.graph import read_edge_list
from src.core.groups import GroupType, extract_all, save_result
from src.utils.logger import log_config

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("extract", help="Extract statistically significant groups")
    parser.add_argument("input", help="Edge list")
    add_flag(parser, "--output", None, short="-o", required=True, help="Groups file (JSON) to write")
    add_extraction_flags(parser)
    add_seed_flag(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = extraction_config(args)
    log_config("extract", {"input": args.input, "output": args.output, **cfg.to_dict()}, logger)

    graph, _ = read_edge_list(args.input)
    result = extract_all(graph, cfg)
    result.provenance["input"] = args.input
    path = save_result(result, args.output)

    counts = result.type_counts()
    print(
        f"groups: {result.group_count} (communities {counts[GroupType.COMMUNITY]}, "
        f"mixtures {counts[GroupType.MIXTURE]}, modules {counts[GroupType.MODULE]}); "
        f"background n={result.background.node_count}, m={result.background.link_count} -> {path}"
    )
    return EXIT_OK
