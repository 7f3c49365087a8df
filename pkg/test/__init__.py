"""latcc tests.

Needs to be a package so test modules can share helpers from conftest.
"""
