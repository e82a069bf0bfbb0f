"""Command line interface for curvop."""
