"""`analyze`: group-structure, coverage and distribution reports for a groups file."""

import argparse
import logging
from pathlib import Path

from src.cli.app import add_flag, positive_float, positive_int
from src.core.analysis import collect_values, coverage, histogram, rescale_w, summarize
from src.core.config import DEFAULT_TAU_BINS, DEFAULT_W_BINS, EXIT_OK
from src.core.graph import read_edge_list
from src.core.groups import load_result
from src.core.reports import (
    coverage_to_dict,
    summary_to_dict,
    write_coverage_table,
    write_histogram,
    write_json,
    write_summary_table,
)
from src.utils.logger import log_config

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("analyze", help="Summarize a groups file against its network")
    parser.add_argument("groups", help="Groups file written by 'extract'")
    parser.add_argument("graph", help="Edge list the groups were extracted from")
    add_flag(parser, "--output", None, short="-o", required=True, help="Directory for the reports")
    add_flag(parser, "--network", None, help="Network label in the tables (default: graph file stem)")
    add_flag(parser, "--rescale-w", None, type=positive_float,
             help="Divide W by this sampling fraction in the W histogram")
    add_flag(parser, "--tau-bins", DEFAULT_TAU_BINS, type=positive_int, help="Bins of the tau histogram")
    add_flag(parser, "--w-bins", DEFAULT_W_BINS, type=positive_int, help="Bins of the W histogram")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    out = Path(args.output)
    network = args.network or Path(args.graph).stem
    settings = {
        "groups": args.groups,
        "graph": args.graph,
        "network": network,
        "rescale_w": args.rescale_w,
        "tau_bins": args.tau_bins,
        "w_bins": args.w_bins,
    }
    log_config("analyze", settings, logger)

    result = load_result(args.groups)
    graph, _ = read_edge_list(args.graph)
    summary = summarize(result)
    cover = coverage(result, graph)

    leading = {"network": network}
    write_summary_table(out / "summary.csv", [(leading, summary)])
    write_coverage_table(out / "coverage.csv", [(leading, cover)])

    w_values = collect_values([result], "W")
    if args.rescale_w is not None:
        w_values = rescale_w(w_values, args.rescale_w)
    write_histogram(out / "hist_tau.csv", histogram(collect_values([result], "tau"), args.tau_bins, (0.0, 1.0)))
    write_histogram(out / "hist_w.csv", histogram(w_values, args.w_bins))

    write_json(out / "report.json", {
        "config": settings,
        "provenance": result.provenance,
        "summary": summary_to_dict(summary),
        "coverage": coverage_to_dict(cover.rounded()),
    })

    print(f"{network}: {summary.group_count} groups, mean tau {summary.mean_tau:.3f}, "
          f"background {cover.background_nodes_pct:.1f}% nodes / {cover.background_links_pct:.1f}% links -> {out}")
    return EXIT_OK
