"""Benchmark grid, synthetic-model checks and table rendering."""
