"""Exact decision procedures for expansiveness of algebraic actions."""

__version__ = "0.1.0"
