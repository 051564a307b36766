"""Computational services: exact algebra, combinatorics and the wreath solvers."""
