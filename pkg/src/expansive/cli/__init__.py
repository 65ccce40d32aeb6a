"""Command-line interface: problem files in, JSON reports out."""

from .main import main

__all__ = ["main"]
