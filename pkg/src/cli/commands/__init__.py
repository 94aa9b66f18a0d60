"""
netgroups Commands
==================

Each module registers one sub-command on the shared parser and implements
`run(args) -> exit code`.

Commands:
---------
- sample: write a sampled network (RD or BF).
- extract: extract significant groups and write the groups file.
- analyze: group-structure, coverage and distribution reports for a groups file.
- pipeline: repeated sampling and extraction with aggregated tables.
- info: load a network and describe it.
"""

from . import analyze, extract, info, pipeline, sample

COMMANDS = (sample, extract, analyze, pipeline, info)
