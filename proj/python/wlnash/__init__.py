"""Exact Nash equilibria of win-lose bimatrix games.

Profiles are dictionaries {"p": [...], "q": [...]} of fractions.Fraction;
strategy indices are zero-based.
"""

from fractions import Fraction

from . import _wlnash
from ._wlnash import Game, classify_regime, find_stable_cycle, generate, pne_search

__all__ = [
    "Game",
    "bench",
    "bounds",
    "classify_regime",
    "find_stable_cycle",
    "generate",
    "oracle_sweep",
    "pne_search",
    "solve",
    "solve_lh",
    "verify",
]


def _profile(raw):
    return {side: [Fraction(x) for x in raw[side]] for side in ("p", "q")}


def _encode(profile):
    return {side: [str(Fraction(x)) for x in profile[side]] for side in ("p", "q")}


def solve(game, p=None, force_ell=None, label=1, exhaustive_supports=False):
    """Three-step solver. Returns {"profile", "plan", "record"}."""
    out = _wlnash.solve(game, p, force_ell, label, exhaustive_supports)
    out["profile"] = _profile(out["profile"])
    return out


def solve_lh(game, label=1):
    """Lemke-Howson with dropped label 1..2n. Returns {"profile", "pivots", "path"}."""
    out = _wlnash.solve_lh(game, label)
    out["profile"] = _profile(out["profile"])
    return out


def verify(game, profile):
    """Exact equilibrium check. Payoffs and gains come back as Fraction."""
    out = _wlnash.verify(game, _encode(profile))
    out["row_payoff"] = Fraction(out["row_payoff"])
    out["col_payoff"] = Fraction(out["col_payoff"])
    if out["best_deviation"] is not None:
        out["best_deviation"]["gain"] = Fraction(out["best_deviation"]["gain"])
    return out


def bounds(n, p, ell=2):
    return _wlnash.bounds(n, p, ell)


def bench(n, p, trials=1, seed=0, threads=1, deterministic=False):
    return _wlnash.bench(n, p, trials, seed, threads, deterministic)


def oracle_sweep(n_max):
    return _wlnash.oracle_sweep(n_max)
