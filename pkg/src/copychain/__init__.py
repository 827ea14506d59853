"""Credible media copyright detection on a simulated escrow ledger."""

__version__ = "0.1.0"
