#!/usr/bin/env python3
"""
Freeness Analyzer - Command-Line Entry Point

Decides whether the ring of integers of a degree p extension with
dihedral or cyclic normal closure is free over its associated order.
"""

from src.cli import cli


def main():
    """Main application entry point."""
    cli(prog_name="freeness")


if __name__ == "__main__":
    main()
