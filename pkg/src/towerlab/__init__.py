"""Exact arithmetic for two-step towers of weighted blowups and their reversal."""

__version__ = "0.1.0"
