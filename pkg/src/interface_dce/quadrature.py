"""Gauss-Legendre rules and tensor-product integration over a square."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError, DomainError

MAX_ORDER = 256
_NEWTON_TOL = 1e-15


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1]."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def mapped(self, lower: float, upper: float):
        """Nodes and weights for the interval [lower, upper]."""
        half = 0.5 * (upper - lower)
        return lower + half * (self.nodes + 1.0), half * self.weights


def _legendre_with_derivative(n, x):
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> QuadratureRule:
    """
    Gauss-Legendre rule of the given `order` (number of nodes).

    Roots of P_n are found by Newton iteration from the Tricomi initial
    guess; the rule is exact for polynomials of degree <= 2*order - 1.
    """
    if isinstance(order, bool) or not isinstance(order, (int, np.integer)):
        raise ConfigurationError(f"quadrature order must be an integer, got {order!r}")
    order = int(order)
    if not 1 <= order <= MAX_ORDER:
        raise ConfigurationError(f"quadrature order must be in [1, {MAX_ORDER}], got {order}")
    if order == 1:
        return QuadratureRule(1, np.array([0.0]), np.array([2.0]))

    # only the non-negative half; the rule is symmetric
    m = (order + 1) // 2
    i = np.arange(1, m + 1)
    theta = math.pi * (i - 0.25) / (order + 0.5)
    x = np.cos(theta) * (1.0 - (order - 1) / (8.0 * order**3))
    for _ in range(100):
        p, dp = _legendre_with_derivative(order, x)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) < _NEWTON_TOL:
            break
    _, dp = _legendre_with_derivative(order, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    if order % 2:
        x[-1] = 0.0
        nodes = np.concatenate([-x, x[-2::-1]])
        weights = np.concatenate([w, w[-2::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        weights = np.concatenate([w, w[::-1]])
    return QuadratureRule(order, nodes, weights)


def integrate_2d(f, L: float, rule: QuadratureRule) -> complex:
    """
    Tensor-product approximation of the double integral of f over [0, L]^2.

    Parameters
    ----------
    f : callable
        vectorized ``f(a, a_prime)``; called once with two broadcastable
        2D arrays (first index runs over `a`, second over `a_prime`)
    L : float
        side of the integration square, must be > 0
    rule : QuadratureRule

    Returns
    -------
    complex
    """
    if not L > 0:
        raise DomainError(f"integration length must be positive, got L={L}")
    a, w = rule.mapped(0.0, L)
    values = np.asarray(f(a[:, None], a[None, :]))
    return complex(np.sum(values * (w[:, None] * w[None, :])))
