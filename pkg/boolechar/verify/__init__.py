"""Named verification suites, their registry and report writers."""
