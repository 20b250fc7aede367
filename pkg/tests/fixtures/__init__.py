"""Test fixtures and factories for pga-kit tests."""
