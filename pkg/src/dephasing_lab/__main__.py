#!/usr/bin/env python3
"""
Entry point for running the dephasing-lab command line as a module
"""

from dephasing_lab.cli.main import cli

if __name__ == "__main__":
    cli()
