#!/usr/bin/env python3
"""Lattices and constellations from binary linear codes.

Usage: python -m latcc <command> [options] [code file]
"""
import sys

from .cli import main

sys.exit(main())
