"""Command-line interface for mathbook."""
