"""
netgroups Test Suite
====================

Automated tests for netgroups components.
"""
