#!/usr/bin/env python3
"""Lattices and constellations from binary linear codes.

Constructions A, C, D and the inter-level coded Construction C⋆, with exact
latticeness checks, packing densities and a Leech lattice build.

Usage: latcc <command> [options] [code file]
"""
