"""
CLI Package
"""

from .main import CliConfig, build_parser, main

__all__ = [
    "CliConfig",
    "build_parser",
    "main",
]
