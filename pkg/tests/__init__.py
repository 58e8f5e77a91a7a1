"""
hnp-lattice Test Suite

Test Categories:
- unit/: Unit tests of single modules on small hand-checked inputs
- integration/: End-to-end analyses, theorem sweeps, property suites, CLI and scanner runs
- fixtures/: Reference groups and brute-force helper oracles
"""
