"""
Test Fixtures and Utilities

Reference groups from the worked examples and brute-force helper functions used
across both unit and integration tests.
"""
