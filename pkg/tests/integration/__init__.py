"""
Integration Tests

End-to-end analyses of the worked examples, theorem sweeps over the group
catalog, property suites and runs of the command-line interface and scanner.

Slow tests (direct cohomology of order-24 groups, long sweeps) are skipped
unless pytest is invoked with --slow.
"""
