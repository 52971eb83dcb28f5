#!/usr/bin/env python3
"""
molr - mutually orthogonal Latin rectangles
Main entry point for the CLI.
"""

from molr.cli import cli

if __name__ == "__main__":
    cli()
