"""Command-line interface for logfree."""

from .logfree import main as main

__all__ = ["main"]
