"""Exact generating functions for tilings and q-series identity checks."""

from ._qtile import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
