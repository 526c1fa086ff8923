"""Configuration package for radialfall."""
