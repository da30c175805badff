"""Stieltjes Toolkit: Unit Testing.

This module contains a set of unit tests. Each representation is checked against the
limit-relation oracle, against mpmath as an independent third reference, and against the
exact identities it must satisfy.
"""
