"""Recomputation of the published K_3 values."""

from .paper import PaperVerifier, verify_paper, results_table, render_table, summarize, exit_code_for

__all__ = ["PaperVerifier", "verify_paper", "results_table", "render_table", "summarize", "exit_code_for"]
