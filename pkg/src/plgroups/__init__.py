"""Exact computation in the piecewise-linear groups F_n, Gamma_n and Q_n."""

from __future__ import annotations

from .exact import Q, Rational, format_rational, parse_rational, slope_factor
from .plmap import CompactPL, IntervalPL, PeriodicPL, compose, evaluate, invert, support

__all__ = [
    "Q",
    "Rational",
    "format_rational",
    "parse_rational",
    "slope_factor",
    "CompactPL",
    "IntervalPL",
    "PeriodicPL",
    "compose",
    "evaluate",
    "invert",
    "support",
]
