"""
Core Network Analysis Engine
============================

This package contains the foundational logic of netgroups: the compact graph
representation and edge-list I/O, network sampling, group extraction with its
Erdos-Renyi null model, statistics over extracted groups, report writers, and
the multi-run pipeline that ties them together.
"""
