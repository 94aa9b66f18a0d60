"""Flags and helpers shared by several commands."""

import argparse

from src.cli.app import add_flag, alpha_value, nonnegative_int, positive_int, seed_value
from src.core.config import DEFAULT_ALPHA, DEFAULT_NULL_SAMPLES, DEFAULT_RESTARTS, DEFAULT_SEED
from src.core.groups import ExtractionConfig


def add_extraction_flags(parser: argparse.ArgumentParser):
    add_flag(parser, "--restarts", DEFAULT_RESTARTS, type=positive_int, help="Hill-climbing restarts per search")
    add_flag(parser, "--null-samples", DEFAULT_NULL_SAMPLES, type=positive_int,
             help="Erdos-Renyi replicas per null estimate")
    add_flag(parser, "--alpha", DEFAULT_ALPHA, type=alpha_value, help="Significance level")
    add_flag(parser, "--max-groups", None, type=nonnegative_int, help="Stop after this many groups")


def add_seed_flag(parser: argparse.ArgumentParser):
    add_flag(parser, "--seed", DEFAULT_SEED, type=seed_value, help="Master seed")


def extraction_config(args: argparse.Namespace) -> ExtractionConfig:
    return ExtractionConfig(
        restarts=args.restarts,
        null_samples=args.null_samples,
        alpha=args.alpha,
        seed=args.seed,
        max_groups=args.max_groups,
        workers=args.workers,
    ).validate()
