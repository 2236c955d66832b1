"""Generalized Stirling numbers, functions and asymptotics.

Thin wrapper over the C++ extension module. Exact rationals cross the
boundary as strings; this layer converts them to fractions.Fraction, and
accepts Fraction, int or "p/q" strings as parameter inputs.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ConvergenceError,
    PoleError,
    PreconditionError,
    RegimeError,
    k_gamma,
    presets,
)

__all__ = [
    "ConvergenceError",
    "PoleError",
    "PreconditionError",
    "RegimeError",
    "a_sequence",
    "asym_study",
    "k_gamma",
    "preset_triple",
    "presets",
    "stirling_function",
    "triangle",
    "verify",
]

__version__ = "0.1.0"


def _arg(value):
    """Serialize a rational-valued parameter for the core module."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def triangle(alpha, beta, r, n_max, algo="recurrence"):
    """Triangle S(n,k) as nested lists of Fraction, rows n = 0..n_max."""
    rows = _core.triangle(_arg(alpha), _arg(beta), _arg(r), n_max, algo)
    return [[Fraction(v) for v in row] for row in rows]


def a_sequence(alpha, beta, r, terms):
    """Riordan A-sequence as a list of Fraction."""
    return [Fraction(v) for v in _core.a_sequence(_arg(alpha), _arg(beta), _arg(r), terms)]


def stirling_function(gamma, eta, alpha, beta, r, eps=0.0, tol=1e-12):
    """S(gamma, eta; eps) for complex orders; returns dict with value and terms."""
    return _core.stirling_function(
        complex(gamma), complex(eta), _arg(alpha), _arg(beta), _arg(r), eps, tol
    )


def verify(suite, alpha, beta, r, n=8):
    """Run one verification suite; returns dict with pass flag and counterexample."""
    return _core.verify(suite, _arg(alpha), _arg(beta), _arg(r), n)


def asym_study(n, mu, alpha, beta, r, eps=0.0, m=2, central=False):
    """Asymptotic estimate vs the exact oracle; exact fields become Fraction."""
    study = _core.asym_study(n, list(mu), _arg(alpha), _arg(beta), _arg(r), eps, m, central)
    for row in study["rows"]:
        row["exact"] = Fraction(row["exact"])
        row["estimate"] = Fraction(row["estimate"])
    return study


def preset_triple(name, params=None):
    """Resolve a preset; triple entries become Fraction."""
    raw = _core.preset_triple(name, {k: _arg(v) for k, v in (params or {}).items()})
    out = {k: Fraction(v) for k, v in raw.items() if k != "dual"}
    out["dual"] = (
        {k: Fraction(v) for k, v in raw["dual"].items()} if raw["dual"] else None
    )
    return out
