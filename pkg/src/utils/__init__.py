"""Utility helpers used across the project."""

from .validators import DomainError

__all__ = ["DomainError"]
