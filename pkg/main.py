"""
netgroups - Group Structure of Sampled Networks
===============================================

Main entry point for the netgroups command-line tool. netgroups samples
networks (degree-weighted random node selection or breadth-first sampling)
and extracts statistically significant node groups (communities, mixtures
and modules) from original and sampled networks.

Usage:
------
    python main.py info network.edges
    python main.py sample --method bf --fraction 0.15 --seed 7 network.edges -o sample.edges
    python main.py extract network.edges -o groups.json
    python main.py analyze groups.json network.edges -o reports/
    python main.py pipeline network.edges -o out/ --runs 100 --with-original
"""

import os
import sys

# ============================================================================
# PATH SETUP
# ============================================================================
# Ensure the project root is on Python's module search path so that
# 'from src.core import ...' works regardless of the working directory.
current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.insert(0, current_dir)

from src.cli.app import main  # noqa: E402

# ============================================================================
# APPLICATION ENTRY POINT
# ============================================================================
if __name__ == "__main__":
    sys.exit(main())
