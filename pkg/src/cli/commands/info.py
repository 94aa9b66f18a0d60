"""`info`: load a network and describe it."""

import argparse
import logging
from pathlib import Path

from src.cli.app import add_flag
from src.core.analysis import graph_profile
from src.core.config import EXIT_OK, KNOWN_NETWORKS, check_against_catalog
from src.core.graph import read_edge_list

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("info", help="Describe a network and check it against the catalog")
    parser.add_argument("input", help="Edge list")
    add_flag(parser, "--network", None, help="Catalog name to check against (default: input file stem)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, report = read_edge_list(args.input)
    profile = graph_profile(graph)

    for key, value in report.to_dict().items():
        print(f"{key}: {value}")
    for key, value in profile.to_dict().items():
        print(f"{key}: {value:.4f}" if isinstance(value, float) else f"{key}: {value}")

    name = args.network or Path(args.input).stem
    if name in KNOWN_NETWORKS:
        problems = check_against_catalog(name, graph.node_count, graph.link_count)
        print(f"catalog '{name}': " + ("matches" if not problems else "; ".join(problems)))
    elif args.network:
        logger.warning(f"'{name}' is not a catalogued network; known: {', '.join(sorted(KNOWN_NETWORKS))}")
    return EXIT_OK
