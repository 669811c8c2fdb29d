"""Holomorphic (theta-only) realization of the single-mode Fock space.

A Fock vector with components psi_n becomes the polynomial
sum_n psi_n theta^n / sqrt([n]!).  Under this unitary identification the
lowering matrix acts as the deformed derivative and the raising matrix as
multiplication by theta; both are nilpotent of order kprime, and they
satisfy the same q-deformed commutation relations as the matrices.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import ParaPoly
from .qnum import Deformation, qfactorial, qnumber

__all__ = [
    "to_bargmann",
    "from_bargmann",
    "derivative",
    "multiply_theta",
]


def _check_theta_only(p: ParaPoly, what: str) -> None:
    if p.d != 1:
        raise ValueError(f"{what} supports a single mode only (got d={p.d})")
    for (_, bar) in p.terms:
        if bar != (0,):
            raise ValueError(f"{what} expects a polynomial in theta only (found a barred factor)")


def to_bargmann(psi, dfm: Deformation) -> ParaPoly:
    """Represent a Fock vector as sum_n psi_n theta^n / sqrt([n]!)."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (dfm.kprime,):
        raise ValueError(f"vector length {psi.shape} does not match k'={dfm.kprime}")
    terms = {}
    for n, c in enumerate(psi):
        if c != 0:
            terms[((n,), (0,))] = c / math.sqrt(qfactorial(n, dfm))
    return ParaPoly(dfm, 1, terms)


def from_bargmann(p: ParaPoly) -> np.ndarray:
    """Recover the Fock components from a theta-only polynomial."""
    _check_theta_only(p, "from_bargmann")
    dfm = p.dfm
    out = np.zeros(dfm.kprime, dtype=complex)
    for (theta, _), c in p.terms.items():
        n = theta[0]
        out[n] = c * math.sqrt(qfactorial(n, dfm))
    return out


def derivative(p: ParaPoly) -> ParaPoly:
    """Deformed derivative: theta^n -> [n] theta^(n-1).

    Transports the lowering matrix to the polynomial realization, and
    together with ``multiply_theta`` satisfies
    d(m(f)) - q m(d(f)) = q^(-n) f on monomials of degree n.
    Nilpotent of order kprime.
    """
    _check_theta_only(p, "derivative")
    dfm = p.dfm
    terms = {}
    for (theta, _), c in p.terms.items():
        n = theta[0]
        if n > 0:
            key = ((n - 1,), (0,))
            terms[key] = terms.get(key, 0.0) + qnumber(n, dfm) * c
    return ParaPoly(dfm, 1, terms)


def multiply_theta(p: ParaPoly) -> ParaPoly:
    """Multiplication by theta with nilpotent truncation:
    theta^(kprime-1) is sent to zero.  Transports the raising matrix."""
    _check_theta_only(p, "multiply_theta")
    dfm = p.dfm
    terms = {}
    for (theta, _), c in p.terms.items():
        n = theta[0]
        if n + 1 < dfm.kprime:
            terms[((n + 1,), (0,))] = c
    return ParaPoly(dfm, 1, terms)
