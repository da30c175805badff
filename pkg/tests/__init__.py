"""Stieltjes Toolkit Test Framework."""
