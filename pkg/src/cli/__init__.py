"""
Command-line front end: argument parsing, environment overrides, logging
setup and the mapping of failures onto exit codes.
"""
