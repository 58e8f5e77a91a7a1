"""
Unit Tests

Tests of individual modules in isolation: integer linear algebra, groups,
lattices, cohomology, characters, models, parsers and the report cache.
"""
