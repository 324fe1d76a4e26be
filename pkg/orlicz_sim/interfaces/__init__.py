"""
Interfaces Package
------------------
Command-line interface for instance generation and verification.
"""

from .cli import main

__all__ = ['main']
