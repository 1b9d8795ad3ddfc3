"""Command-line surface: file formats, fixtures, rendering and corpus checks"""

from .main import build_parser, configure_logging, main

__all__ = ["build_parser", "configure_logging", "main"]
