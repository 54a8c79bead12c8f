"""Binomial error bars for the statistical assertions."""

from __future__ import annotations

import math

SIGMAS = 4.0


def binomial_sigma(p: float, trials: int) -> float:
    """Standard deviation of an empirical rate over ``trials`` Bernoulli(p) draws."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p = min(max(p, 0.0), 1.0)
    return math.sqrt(p * (1.0 - p) / trials)


def within_sigmas(observed: float, expected: float, trials: int, k: float = SIGMAS) -> bool:
    """|observed - expected| <= k sigma, with sigma taken at the expected rate.

    A degenerate expectation (0 or 1) demands an exact match.
    """
    return abs(observed - expected) <= k * binomial_sigma(expected, trials) + 1e-12


def at_least(observed: float, floor: float, trials: int, k: float = SIGMAS) -> bool:
    """observed >= floor - k sigma, sigma taken at the floor."""
    return observed >= floor - k * binomial_sigma(floor, trials) - 1e-12


def amplified(p: float, f: int) -> float:
    """Probability that at least one of ``f`` independent Bernoulli(p) trials succeeds."""
    return 1.0 - (1.0 - p) ** f


def amplified_sigma(p: float, f: int, calib_trials: int, trials: int) -> float:
    """Error of comparing an f-fold rate with ``amplified(p_hat, f)``.

    Combines the binomial noise of the f-fold rate with the delta-method noise
    carried over from estimating ``p`` on ``calib_trials`` trials.
    """
    q = amplified(p, f)
    slope = f * (1.0 - p) ** (f - 1)
    return math.sqrt(binomial_sigma(q, trials) ** 2 + (slope * binomial_sigma(p, calib_trials)) ** 2)
