"""Command-line front end: edge-list files in, reports out."""

from .cli import main

__all__ = ['main']
