"""Symbol maps between matrices and polynomials, and the induced star product.

The lower symbol pairs a matrix with the coherent-state family; the upper
symbol inverts antinormal quantization, diagonal by diagonal, through a
triangular linear system.  Since quantization is a linear bijection onto
the full matrix algebra, transporting the operator product back to symbols
defines an associative star product on single-mode polynomials.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .algebra import ParaPoly, multiply, random_poly
from .qnum import Deformation, deformation, qfactorial
from .quantization import (
    FockOperator,
    VerificationReport,
    coherent_bra,
    coherent_ket,
    quantize,
)

__all__ = [
    "lower_symbol",
    "lower_symbol_by_pairing",
    "coherent_overlap",
    "upper_symbol",
    "moyal_star",
    "round_trip_residuals",
    "quaternion_demo",
]


def _require_single_mode(op_d: int, what: str) -> None:
    if op_d != 1:
        raise ValueError(f"{what} supports a single mode only (got d={op_d})")


def lower_symbol(op: FockOperator) -> ParaPoly:
    """Coherent-state expectation of ``op`` as a polynomial (unnormalized).

    The entry in row nb and column n contributes
    conj(q_k)^(n*nb) * A[nb, n] / sqrt([nb]! [n]!) * theta^n bartheta^nb,
    the phase coming from reordering bartheta^nb theta^n into canonical
    form.  No division by the coherent-state overlap is attempted: the
    overlap has no inverse in a nilpotent algebra.
    """
    _require_single_mode(op.d, "lower_symbol")
    dfm = op.dfm
    kp = dfm.kprime
    terms: dict = {}
    for nb in range(kp):
        for n in range(kp):
            a = op.mat[nb, n]
            if a == 0:
                continue
            phase = cmath.exp(-4j * math.pi * n * nb / dfm.k)
            coeff = phase * a / math.sqrt(qfactorial(nb, dfm) * qfactorial(n, dfm))
            terms[((n,), (nb,))] = terms.get(((n,), (nb,)), 0.0) + coeff
    return ParaPoly(dfm, 1, terms)


def lower_symbol_by_pairing(op: FockOperator) -> ParaPoly:
    """Same expectation computed the long way: multiply bra component nb by
    ket component n in the algebra (picking up the q-phases) and weight by
    the matrix entry.  Used as an independent cross-check of
    ``lower_symbol``."""
    _require_single_mode(op.d, "lower_symbol_by_pairing")
    dfm = op.dfm
    ket = coherent_ket(dfm, 1)
    bra = coherent_bra(dfm, 1)
    out = ParaPoly.zero(dfm, 1)
    for nb in range(dfm.kprime):
        for n in range(dfm.kprime):
            a = op.mat[nb, n]
            if a == 0:
                continue
            out = out + a * multiply(bra.components[nb], ket.components[n])
    return out


def coherent_overlap(dfm: Deformation) -> ParaPoly:
    """Overlap of the coherent family with itself: sum over n of
    bartheta^n theta^n / [n]! in canonical form."""
    return lower_symbol_by_pairing(FockOperator.identity(dfm, 1))


@lru_cache(maxsize=None)
def _quantized_monomial(dfm: Deformation, s: int, t: int) -> np.ndarray:
    """Antinormal quantization of theta^s bartheta^t, cached."""
    return quantize(ParaPoly.monomial(dfm, 1, (s,), (t,))).mat


def upper_symbol(op: FockOperator) -> ParaPoly:
    """Polynomial whose antinormal quantization reproduces ``op`` exactly.

    Matrix entries on the diagonal row - col = p are sourced only by
    monomials theta^s bartheta^(s+p) (and mirrored for negative p), so the
    coefficient map restricted to one diagonal is a square triangular
    system.  Solving each diagonal from its outermost row inward inverts
    quantization; the system matrix is assembled by quantizing the
    monomial symbols themselves, which keeps the two maps consistent by
    construction.
    """
    _require_single_mode(op.d, "upper_symbol")
    dfm = op.dfm
    kp = dfm.kprime
    coeffs: dict = {}
    for p in range(kp):
        # Diagonal row - col = p: unknowns f_{s, s+p}; equation for row n
        # involves only unknowns with s <= kp - 1 - n.
        size = kp - p
        solved = np.zeros(size, dtype=complex)
        for i in range(size):
            n = kp - 1 - i
            acc = op.mat[n, n - p]
            for j in range(i):
                acc -= _quantized_monomial(dfm, j, j + p)[n, n - p] * solved[j]
            pivot = _quantized_monomial(dfm, i, i + p)[n, n - p]
            solved[i] = acc / pivot
        for s in range(size):
            coeffs[((s,), (s + p,))] = solved[s]
    for p in range(1, kp):
        # Diagonal col - row = p: unknowns f_{t+p, t}.
        size = kp - p
        solved = np.zeros(size, dtype=complex)
        for i in range(size):
            n = kp - 1 - p - i
            acc = op.mat[n, n + p]
            for j in range(i):
                acc -= _quantized_monomial(dfm, j + p, j)[n, n + p] * solved[j]
            pivot = _quantized_monomial(dfm, i + p, i)[n, n + p]
            solved[i] = acc / pivot
        for t in range(size):
            coeffs[((t + p,), (t,))] = solved[t]
    return ParaPoly(dfm, 1, coeffs)


def moyal_star(f: ParaPoly, g: ParaPoly) -> ParaPoly:
    """Star product transported from the operator product:
    upper_symbol(quantize(f) @ quantize(g)).  Associative and
    noncommutative; star powers of a generator vanish at the algebra's
    nilpotency order, so the generators square to zero exactly when
    that order is two."""
    f._check_compatible(g)
    _require_single_mode(f.d, "moyal_star")
    prod = quantize(f) @ quantize(g)
    return upper_symbol(prod)


def round_trip_residuals(dfm: Deformation, trials: int = 100, seed: int = 0) -> tuple[float, float]:
    """Worst residuals of the two symbol round trips on random data:
    upper_symbol(quantize(f)) vs f, and quantize(upper_symbol(A)) vs A."""
    rng = np.random.default_rng(seed)
    kp = dfm.kprime
    worst_poly = 0.0
    worst_mat = 0.0
    for _ in range(trials):
        f = random_poly(dfm, rng, modes=1)
        worst_poly = max(worst_poly, upper_symbol(quantize(f)).distance(f))
        amat = rng.uniform(-1.0, 1.0, (kp, kp)) + 1j * rng.uniform(-1.0, 1.0, (kp, kp))
        a = FockOperator(dfm, 1, amat)
        worst_mat = max(worst_mat, quantize(upper_symbol(a)).residual(a))
    return worst_poly, worst_mat


def _quaternion_coeffs(p: ParaPoly) -> np.ndarray:
    """Invert the symbol map of a 2x2 matrix written in the quaternion basis
    (identity, three anti-hermitian units) at k = 4."""
    c0 = p.coefficient((0,), (0,))
    cth = p.coefficient((1,), (0,))
    cbth = p.coefficient((0,), (1,))
    cmix = p.coefficient((1,), (1,))
    z3 = cmix / 2j
    z0 = c0 + 1j * z3
    z1 = (cth + cbth) / 2j
    z2 = (cbth - cth) / 2.0
    return np.array([z0, z1, z2, z3])


def _quaternion_symbol(dfm: Deformation, z: np.ndarray) -> ParaPoly:
    """Closed-form upper symbol of z0 + z1 i*s1 + z2 (-i*s2) + z3 i*s3."""
    z0, z1, z2, z3 = z
    return ParaPoly(
        dfm,
        1,
        {
            ((0,), (0,)): z0 - 1j * z3,
            ((1,), (0,)): 1j * z1 - z2,
            ((0,), (1,)): 1j * z1 + z2,
            ((1,), (1,)): 2j * z3,
        },
    )


def quaternion_demo(trials: int = 100, seed: int = 0, tolerance: float = 1e-10) -> VerificationReport:
    """Star-product realization of the quaternions at k = 4.

    The three anti-hermitian Pauli combinations i*s1, -i*s2, i*s3 close the
    quaternion algebra under matrix multiplication; their upper symbols
    must therefore close it under the star product.  Checks the defining
    unit relations, the closed-form symbol, and the full product law on
    random complex quaternion pairs.
    """
    dfm = deformation(4)
    rep = VerificationReport(tolerance)
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    s3 = np.array([[1, 0], [0, -1]], dtype=complex)
    units = [np.eye(2, dtype=complex), 1j * s1, -1j * s2, 1j * s3]

    sym_i = upper_symbol(FockOperator(dfm, 1, units[1]))
    sym_j = upper_symbol(FockOperator(dfm, 1, units[2]))
    sym_k = upper_symbol(FockOperator(dfm, 1, units[3]))
    minus_one = ParaPoly.constant(dfm, 1, -1.0)

    rep.add("I*I = -1", moyal_star(sym_i, sym_i).distance(minus_one))
    rep.add("J*J = -1", moyal_star(sym_j, sym_j).distance(minus_one))
    rep.add("K*K = -1", moyal_star(sym_k, sym_k).distance(minus_one))
    rep.add("I*J = K", moyal_star(sym_i, sym_j).distance(sym_k))
    rep.add("J*I = -K", moyal_star(sym_j, sym_i).distance(-sym_k))
    theta = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    zero = ParaPoly.zero(dfm, 1)
    rep.add("theta*theta = 0", moyal_star(theta, theta).distance(zero))
    rep.add("bartheta*bartheta = 0", moyal_star(bth, bth).distance(zero))

    basis_res = 0.0
    for idx in range(4):
        z = np.zeros(4, dtype=complex)
        z[idx] = 1.0
        sym = upper_symbol(FockOperator(dfm, 1, units[idx]))
        basis_res = max(basis_res, sym.distance(_quaternion_symbol(dfm, z)))
    rep.add("symbol closed form (basis units)", basis_res)

    rng = np.random.default_rng(seed)
    res_symbol = 0.0
    res_scalar = 0.0
    res_vector = 0.0
    for _ in range(trials):
        z = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        w = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        zmat = sum(z[i] * units[i] for i in range(4))
        wmat = sum(w[i] * units[i] for i in range(4))
        sym_z = upper_symbol(FockOperator(dfm, 1, zmat))
        sym_w = upper_symbol(FockOperator(dfm, 1, wmat))
        res_symbol = max(res_symbol, sym_z.distance(_quaternion_symbol(dfm, z)))
        got = _quaternion_coeffs(moyal_star(sym_z, sym_w))
        x0 = z[0] * w[0] - (z[1] * w[1] + z[2] * w[2] + z[3] * w[3])
        xv = z[0] * w[1:] + w[0] * z[1:] + np.cross(z[1:], w[1:])
        res_scalar = max(res_scalar, abs(got[0] - x0))
        res_vector = max(res_vector, float(np.max(np.abs(got[1:] - xv))))
    rep.add("symbol closed form (random)", res_symbol)
    rep.add("product law scalar part (random)", res_scalar)
    rep.add("product law vector part (random)", res_vector)
    return rep
