"""Radial free fall, collapse times and orbital periods under inverse-square gravity."""
