"""Command-line surface over the counting library."""
