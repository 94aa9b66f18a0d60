"""`sample`: write a sampled network as an edge list."""

import argparse
import logging

from src.cli.app import add_flag, fraction_value
from src.cli.commands.common import add_seed_flag
from src.core.config import DEFAULT_SAMPLE_FRACTION, EXIT_OK, SAMPLING_METHODS, SAMPLING_RD
from src.core.graph import read_edge_list, write_edge_list
from src.core.sampling import SamplerConfig, sample
from src.utils.logger import log_config

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("sample", help="Draw a sampled network (RD or BF)")
    parser.add_argument("input", help="Edge list of the original network")
    add_flag(parser, "--output", None, short="-o", required=True, help="Edge list to write")
    add_flag(parser, "--method", SAMPLING_RD, choices=SAMPLING_METHODS, help="Sampling method")
    add_flag(parser, "--fraction", DEFAULT_SAMPLE_FRACTION, type=fraction_value, help="Fraction of nodes to keep")
    add_seed_flag(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = SamplerConfig(method=args.method, fraction=args.fraction, seed=args.seed).validate()
    log_config("sample", {"input": args.input, "output": args.output, **cfg.to_dict()}, logger)

    graph, _ = read_edge_list(args.input)
    sampled = sample(graph, cfg)
    write_edge_list(sampled, args.output, metadata={"source": args.input, **sampled.metadata})

    print(f"sampled {sampled.node_count} of {graph.node_count} nodes, "
          f"{sampled.link_count} links -> {args.output}")
    return EXIT_OK
