"""Test suite for pga-kit."""
