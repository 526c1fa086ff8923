"""Command-line interface for radialfall."""
