"""Coherent states, exact matrix quantization, and relation checkers.

A polynomial in the nilpotent q-commuting variables is mapped to a dense
complex matrix acting on the finite Fock space spanned by
``|n_1 .. n_d>`` with each occupation in ``0..kprime-1``.  Basis order is
row-major with ``n_1`` most significant, so ``dim = kprime**d``.

Three operator orderings are supported when sandwiching a symbol between
coherent-state projectors:

* antinormal -- the symbol and the weight are merged by the phase-free
  prescription together with the coherent-state components;
* left / right -- the symbol is placed before / after the weight and the
  whole kernel is reduced with genuine q-phases (algebra multiplication).

Everything asserted about the resulting operators is checked numerically
by the ``verify_*``/``check_*`` functions, which return a
``VerificationReport`` of named residuals.
"""

from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import (
    ParaPoly,
    berezin_full_integral,
    berezin_prescription_product,
    multiply,
    multiply_prescription,
    random_poly,
    weight,
)
from .qnum import Deformation, qfactorial, qnumber

__all__ = [
    "Ordering",
    "FockOperator",
    "CoherentKet",
    "RelationCheck",
    "VerificationReport",
    "coherent_ket",
    "coherent_bra",
    "resolution_of_unity",
    "quantize",
    "ladder",
    "ladder_dag",
    "number_operator",
    "q_power_N",
    "rescale_B",
    "verify_relations",
    "quantize_mixed_monomial",
    "check_kfermionic",
    "check_ordering_products",
    "check_mixed_quantization",
    "hermiticity_residual",
    "operator_to_dict",
    "operator_from_dict",
]


class Ordering(enum.Enum):
    """Placement rule for the symbol inside the quantization kernel."""

    ANTINORMAL = "antinormal"
    LEFT = "left"
    RIGHT = "right"


def basis_tuples(dfm: Deformation, modes: int = 1) -> list[tuple[int, ...]]:
    """Occupation tuples in basis order (row-major, first mode most significant)."""
    return list(itertools.product(range(dfm.kprime), repeat=modes))


def basis_index(ns: tuple[int, ...], dfm: Deformation) -> int:
    idx = 0
    for n in ns:
        idx = idx * dfm.kprime + n
    return idx


class FockOperator:
    """Dense complex matrix tagged with its deformation and mode count."""

    __slots__ = ("dfm", "d", "mat")

    def __init__(self, dfm: Deformation, d: int, mat):
        mat = np.asarray(mat, dtype=complex)
        dim = dfm.kprime**d
        if mat.shape != (dim, dim):
            raise ValueError(f"matrix shape {mat.shape} does not match dim {dim} (k'={dfm.kprime}, d={d})")
        self.dfm = dfm
        self.d = d
        self.mat = mat

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @classmethod
    def identity(cls, dfm: Deformation, d: int = 1) -> "FockOperator":
        return cls(dfm, d, np.eye(dfm.kprime**d, dtype=complex))

    @classmethod
    def zero(cls, dfm: Deformation, d: int = 1) -> "FockOperator":
        return cls(dfm, d, np.zeros((dfm.kprime**d, dfm.kprime**d), dtype=complex))

    def _check(self, other: "FockOperator") -> None:
        if self.dfm != other.dfm or self.d != other.d:
            raise ValueError("operator deformation/mode mismatch")

    def dagger(self) -> "FockOperator":
        return FockOperator(self.dfm, self.d, self.mat.conj().T)

    def power(self, n: int) -> "FockOperator":
        return FockOperator(self.dfm, self.d, np.linalg.matrix_power(self.mat, n))

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.dfm, self.d, self.mat @ other.mat)

    def __add__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.dfm, self.d, self.mat + other.mat)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.dfm, self.d, self.mat - other.mat)

    def __neg__(self) -> "FockOperator":
        return FockOperator(self.dfm, self.d, -self.mat)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, complex)):
            return FockOperator(self.dfm, self.d, self.mat * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.mat))) if self.mat.size else 0.0

    def residual(self, other: "FockOperator") -> float:
        """Largest entrywise deviation from ``other``."""
        self._check(other)
        return float(np.max(np.abs(self.mat - other.mat)))

    def __repr__(self) -> str:
        return f"FockOperator(k={self.dfm.k}, d={self.d}, dim={self.dim})"


@dataclass(frozen=True)
class CoherentKet:
    """Coherent-state family: component ``n`` multiplies the Fock vector
    ``|n>`` by a monomial in the generators (unbarred for kets, barred for
    bras), normalized by the square root of the deformed factorials."""

    dfm: Deformation
    d: int
    components: tuple[ParaPoly, ...]


@lru_cache(maxsize=None)
def coherent_ket(dfm: Deformation, modes: int = 1) -> CoherentKet:
    """Ket components: theta_1^n1 .. theta_d^nd / sqrt([n_1]! .. [n_d]!)."""
    comps = []
    zeros = (0,) * modes
    for ns in basis_tuples(dfm, modes):
        norm = 1.0
        for n in ns:
            norm *= qfactorial(n, dfm)
        comps.append(ParaPoly.monomial(dfm, modes, ns, zeros, 1.0 / math.sqrt(norm)))
    return CoherentKet(dfm, modes, tuple(comps))


@lru_cache(maxsize=None)
def coherent_bra(dfm: Deformation, modes: int = 1) -> CoherentKet:
    """Bra components: the barred counterparts, bartheta_1^n1 .. bartheta_d^nd
    over the same normalization, written directly in canonical order."""
    comps = []
    zeros = (0,) * modes
    for ns in basis_tuples(dfm, modes):
        norm = 1.0
        for n in ns:
            norm *= qfactorial(n, dfm)
        comps.append(ParaPoly.monomial(dfm, modes, zeros, ns, 1.0 / math.sqrt(norm)))
    return CoherentKet(dfm, modes, tuple(comps))


def resolution_of_unity(dfm: Deformation, modes: int = 1) -> FockOperator:
    """Integrate ket (x) weight (x) bra under the phase-free prescription.

    Entry (n, m) is the full integral of the prescription-ordered product
    of ket component n, the weight, and bra component m.  The result must
    be the identity matrix; returning it (rather than asserting) lets the
    caller measure the residual.
    """
    ket = coherent_ket(dfm, modes)
    bra = coherent_bra(dfm, modes)
    w = weight(dfm, modes)
    cols = [multiply_prescription(w, comp) for comp in bra.components]
    dim = dfm.kprime**modes
    out = np.zeros((dim, dim), dtype=complex)
    for n, row in enumerate(ket.components):
        for m, col in enumerate(cols):
            out[n, m] = berezin_prescription_product(row, col)
    return FockOperator(dfm, modes, out)


def quantize(f: ParaPoly, ordering: Ordering | str = Ordering.ANTINORMAL) -> FockOperator:
    """Map a polynomial symbol to its matrix by coherent-state sandwiching.

    Entry (n, m) integrates ket_n * f * weight * bra_m.  For the
    antinormal ordering the whole kernel is merged by the phase-free
    prescription.  For ``left``/``right`` the symbol is kept to the left /
    right of the weight and the kernel is reduced with genuine q-phases,
    so the three orderings generally quantize the same symbol differently.
    """
    if isinstance(ordering, str):
        ordering = Ordering(ordering)
    dfm, d = f.dfm, f.d
    ket = coherent_ket(dfm, d)
    bra = coherent_bra(dfm, d)
    w = weight(dfm, d)
    dim = dfm.kprime**d
    out = np.zeros((dim, dim), dtype=complex)
    if ordering is Ordering.ANTINORMAL:
        rows = [multiply_prescription(comp, f) for comp in ket.components]
        cols = [multiply_prescription(w, comp) for comp in bra.components]
        for n, row in enumerate(rows):
            for m, col in enumerate(cols):
                out[n, m] = berezin_prescription_product(row, col)
    else:
        for n, kcomp in enumerate(ket.components):
            if ordering is Ordering.LEFT:
                row = multiply(multiply(kcomp, f), w)
            else:
                row = multiply(multiply(kcomp, w), f)
            for m, bcomp in enumerate(bra.components):
                out[n, m] = berezin_full_integral(multiply(row, bcomp))
    return FockOperator(dfm, d, out)


def ladder(dfm: Deformation, modes: int = 1, mode: int = 1) -> FockOperator:
    """Closed-form quantization of theta_mode: lowers occupation ``mode`` by
    one with amplitude sqrt([n+1]).  Must coincide with
    ``quantize(theta_mode)``; that equality is part of ``verify_relations``.
    """
    if not 1 <= mode <= modes:
        raise ValueError(f"mode {mode} out of range 1..{modes}")
    kp = dfm.kprime
    dim = kp**modes
    out = np.zeros((dim, dim), dtype=complex)
    for ns in basis_tuples(dfm, modes):
        n = ns[mode - 1]
        if n + 1 <= kp - 1:
            up = list(ns)
            up[mode - 1] = n + 1
            out[basis_index(ns, dfm), basis_index(tuple(up), dfm)] = math.sqrt(qnumber(n + 1, dfm))
    return FockOperator(dfm, modes, out)


def ladder_dag(dfm: Deformation, modes: int = 1, mode: int = 1) -> FockOperator:
    """Closed-form quantization of bartheta_mode: raises occupation ``mode``
    with amplitude sqrt([n+1]); the conjugate transpose of ``ladder``."""
    if not 1 <= mode <= modes:
        raise ValueError(f"mode {mode} out of range 1..{modes}")
    kp = dfm.kprime
    dim = kp**modes
    out = np.zeros((dim, dim), dtype=complex)
    for ns in basis_tuples(dfm, modes):
        n = ns[mode - 1]
        if n + 1 <= kp - 1:
            up = list(ns)
            up[mode - 1] = n + 1
            out[basis_index(tuple(up), dfm), basis_index(ns, dfm)] = math.sqrt(qnumber(n + 1, dfm))
    return FockOperator(dfm, modes, out)


def number_operator(dfm: Deformation, modes: int = 1, mode: int = 1) -> FockOperator:
    """Diagonal occupation count of the given mode."""
    if not 1 <= mode <= modes:
        raise ValueError(f"mode {mode} out of range 1..{modes}")
    diag = [ns[mode - 1] for ns in basis_tuples(dfm, modes)]
    return FockOperator(dfm, modes, np.diag(np.asarray(diag, dtype=complex)))


def q_power_N(dfm: Deformation, modes: int = 1, sign: int = 1, mode: int = 1) -> FockOperator:
    """Diagonal matrix q**(sign * n_mode)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if not 1 <= mode <= modes:
        raise ValueError(f"mode {mode} out of range 1..{modes}")
    diag = [
        cmath.exp(2j * math.pi * sign * ns[mode - 1] / dfm.k) for ns in basis_tuples(dfm, modes)
    ]
    return FockOperator(dfm, modes, np.diag(diag))


def _q_half_N(dfm: Deformation) -> np.ndarray:
    # Principal branch: q**(n/2) = exp(i*pi*n/k).
    return np.diag([cmath.exp(1j * math.pi * n / dfm.k) for n in range(dfm.kprime)])


def rescale_B(dfm: Deformation) -> tuple[FockOperator, FockOperator]:
    """Rescaled pair B = q^(N/2) A and B' = A' q^(N/2) (single mode).

    Straightens the two q-commutators into the single relation
    B B' - q^2 B' B = 1.
    """
    half = _q_half_N(dfm)
    low = ladder(dfm, 1, 1)
    high = ladder_dag(dfm, 1, 1)
    b = FockOperator(dfm, 1, half @ low.mat)
    bd = FockOperator(dfm, 1, high.mat @ half)
    return b, bd


@dataclass
class RelationCheck:
    name: str
    residual: float
    passed: bool


class VerificationReport:
    """Named residuals from a family of identity checks at one tolerance.

    A check passes when its residual does not exceed the tolerance.
    """

    def __init__(self, tolerance: float = 1e-10):
        self.tolerance = float(tolerance)
        self.checks: list[RelationCheck] = []

    def add(self, name: str, residual: float) -> "VerificationReport":
        r = float(residual)
        self.checks.append(RelationCheck(name, r, r <= self.tolerance))
        return self

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        if other.tolerance != self.tolerance:
            raise ValueError("cannot merge reports with different tolerances")
        self.checks.extend(other.checks)
        return self

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def residual_of(self, name: str) -> float:
        for c in self.checks:
            if c.name == name:
                return c.residual
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "relations": [
                {"name": c.name, "residual": c.residual, "pass": c.passed} for c in self.checks
            ],
            "tolerance": self.tolerance,
        }

    def pretty_lines(self) -> list[str]:
        lines = [
            f"{c.name}: {'pass' if c.passed else 'FAIL'} (residual {c.residual:.3e})"
            for c in self.checks
        ]
        n_fail = sum(1 for c in self.checks if not c.passed)
        if n_fail:
            lines.append(f"{n_fail} of {len(self.checks)} relations FAILED (tolerance {self.tolerance:g})")
        else:
            lines.append(f"all {len(self.checks)} relations pass (tolerance {self.tolerance:g})")
        return lines

    def __repr__(self) -> str:
        status = "pass" if self.all_pass else "FAIL"
        return f"VerificationReport({len(self.checks)} checks, {status})"


def _theta_power(dfm: Deformation, n: int, barred: bool = False, modes: int = 1, mode: int = 1) -> ParaPoly:
    """theta_mode^n (or bartheta_mode^n) as a polynomial; zero at n >= kprime."""
    if n >= dfm.kprime:
        return ParaPoly.zero(dfm, modes)
    theta = [0] * modes
    bar = [0] * modes
    (bar if barred else theta)[mode - 1] = n
    return ParaPoly.monomial(dfm, modes, tuple(theta), tuple(bar))


def verify_relations(dfm: Deformation, modes: int = 1, tolerance: float = 1e-10) -> VerificationReport:
    """Check the oscillator algebra produced by quantization.

    One mode: the two q-deformed commutators with diagonal right-hand
    sides q^(-N) and q^(+N), the power homomorphism against direct
    quantization, exact nilpotency at order kprime, and hermiticity of the
    lowering/raising pair.  Several modes: the per-mode commutators plus
    vanishing cross-mode commutators and the factorized quantization of
    two-mode monomials.
    """
    rep = VerificationReport(tolerance)
    kp = dfm.kprime
    if modes == 1:
        low = ladder(dfm)
        high = ladder_dag(dfm)
        rep.add(
            "quantize(theta) matches closed-form lowering",
            quantize(ParaPoly.generator(dfm, 1, 1)).residual(low),
        )
        rep.add(
            "quantize(bartheta) matches closed-form raising",
            quantize(ParaPoly.generator(dfm, 1, 1, barred=True)).residual(high),
        )
        rep.add(
            "low@high - q high@low = diag(q^-n)",
            (low @ high - dfm.q * (high @ low)).residual(q_power_N(dfm, 1, -1)),
        )
        rep.add(
            "low@high - conj(q) high@low = diag(q^n)",
            (low @ high - dfm.q.conjugate() * (high @ low)).residual(q_power_N(dfm, 1, 1)),
        )
        res = 0.0
        for n in range(2, kp + 1):
            res = max(res, quantize(_theta_power(dfm, n)).residual(low.power(n)))
            res = max(res, quantize(_theta_power(dfm, n, barred=True)).residual(high.power(n)))
        rep.add(f"quantize(theta^n) = low^n and barred, n = 2..{kp}", res)
        rep.add(f"low^{kp} = 0 exactly", low.power(kp).max_abs())
        rep.add("raising = dagger(lowering)", high.residual(low.dagger()))
        return rep

    lows = [ladder(dfm, modes, i) for i in range(1, modes + 1)]
    highs = [ladder_dag(dfm, modes, i) for i in range(1, modes + 1)]
    for i in range(1, modes + 1):
        a, ad = lows[i - 1], highs[i - 1]
        rep.add(
            f"mode {i}: low@high - q high@low = diag(q^-n_{i})",
            (a @ ad - dfm.q * (ad @ a)).residual(q_power_N(dfm, modes, -1, i)),
        )
        rep.add(
            f"mode {i}: low@high - conj(q) high@low = diag(q^n_{i})",
            (a @ ad - dfm.q.conjugate() * (ad @ a)).residual(q_power_N(dfm, modes, 1, i)),
        )
        rep.add(
            f"mode {i}: quantize(theta_{i}) matches closed form",
            quantize(ParaPoly.generator(dfm, modes, i)).residual(a),
        )
    for i in range(1, modes + 1):
        for j in range(i + 1, modes + 1):
            ai, aj = lows[i - 1], lows[j - 1]
            di, dj = highs[i - 1], highs[j - 1]
            rep.add(f"[low_{i}, low_{j}] = 0", (ai @ aj - aj @ ai).max_abs())
            rep.add(f"[high_{i}, high_{j}] = 0", (di @ dj - dj @ di).max_abs())
            rep.add(f"[low_{i}, high_{j}] = 0", (ai @ dj - dj @ ai).max_abs())
            theta = [0] * modes
            theta[i - 1] = 1
            theta[j - 1] = 1
            mono = ParaPoly.monomial(dfm, modes, tuple(theta), (0,) * modes)
            prod = quantize(mono)
            rep.add(f"quantize(theta_{i} theta_{j}) = low_{i}@low_{j}", prod.residual(ai @ aj))
            rep.add(f"quantize(theta_{i} theta_{j}) = low_{j}@low_{i}", prod.residual(aj @ ai))
    return rep


def quantize_mixed_monomial(n: int, m: int, dfm: Deformation) -> FockOperator:
    """Closed form for the antinormal quantization of theta^n bartheta^m.

    Shift by n - m with factorial amplitudes; terms whose occupations
    leave the basis are dropped.  Coincides with
    ``quantize(theta^n bartheta^m)`` and with the operator product
    ``ladder^n @ ladder_dag^m`` (in that order; the reversed product
    differs in general).
    """
    kp = dfm.kprime
    if not (0 <= n <= kp - 1 and 0 <= m <= kp - 1):
        raise ValueError(f"powers must lie in 0..{kp - 1}, got n={n}, m={m}")
    out = np.zeros((kp, kp), dtype=complex)
    if n >= m:
        for l in range(kp):
            if l + n > kp - 1:
                continue
            col = l + n - m
            out[l, col] = qfactorial(l + n, dfm) / math.sqrt(
                qfactorial(l, dfm) * qfactorial(col, dfm)
            )
    else:
        for l in range(kp):
            if l + m > kp - 1:
                continue
            row = l + m - n
            out[row, l] = qfactorial(l + m, dfm) / math.sqrt(
                qfactorial(row, dfm) * qfactorial(l, dfm)
            )
    return FockOperator(dfm, 1, out)


def check_kfermionic(
    dfm: Deformation, q_param: complex | None = None, tolerance: float = 1e-10
) -> VerificationReport:
    """Check the rescaled pair against the generalized-fermion algebra of
    order kprime.

    With f- = B, f+ = B', f+^+ = dagger(f+), f-^+ = dagger(f-) and N the
    occupation count, the defining relations split into three types:
    (i) the deformed commutator of (f-, f+) with unit right-hand side and
    the N-grading, (ii) the conjugated family, and (iii) the mixed
    relations, which involve a square root of the deformation parameter.
    Both branches of that square root are reported; the principal branch
    ``exp(i*pi/kprime)`` is the one that holds.

    ``q_param`` overrides the algebra's deformation parameter (default
    ``exp(2*pi*i/kprime)``, matching the commutation phase q_k).
    """
    kp = dfm.kprime
    qF = cmath.exp(2j * math.pi / kp) if q_param is None else complex(q_param)
    rep = VerificationReport(tolerance)
    f_minus, f_plus = rescale_B(dfm)
    f_plus_dag = f_plus.dagger()
    f_minus_dag = f_minus.dagger()
    nop = number_operator(dfm)
    one = FockOperator.identity(dfm)

    def comm(x, y):
        return x @ y - y @ x

    rep.add("(i) f- f+ - qF f+ f- = 1", (f_minus @ f_plus - qF * (f_plus @ f_minus)).residual(one))
    rep.add("(i) [N, f-] = -f-", comm(nop, f_minus).residual(-f_minus))
    rep.add("(i) [N, f+] = +f+", comm(nop, f_plus).residual(f_plus))
    rep.add(f"(i) f-^{kp} = 0", f_minus.power(kp).max_abs())
    rep.add(f"(i) f+^{kp} = 0", f_plus.power(kp).max_abs())
    rep.add(
        "(ii) f+^+ f-^+ - conj(qF) f-^+ f+^+ = 1",
        (f_plus_dag @ f_minus_dag - qF.conjugate() * (f_minus_dag @ f_plus_dag)).residual(one),
    )
    rep.add("(ii) [N, f+^+] = -f+^+", comm(nop, f_plus_dag).residual(-f_plus_dag))
    rep.add("(ii) [N, f-^+] = +f-^+", comm(nop, f_minus_dag).residual(f_minus_dag))
    rep.add(f"(ii) (f+^+)^{kp} = 0", f_plus_dag.power(kp).max_abs())
    rep.add(f"(ii) (f-^+)^{kp} = 0", f_minus_dag.power(kp).max_abs())
    principal = cmath.sqrt(qF) if q_param is not None else cmath.exp(1j * math.pi / kp)
    for branch, label in ((principal, "principal"), (-principal, "negated")):
        rep.add(
            f"(iii) f- f+^+ = qF^-1/2 f+^+ f- [{label} branch]",
            (f_minus @ f_plus_dag - (1.0 / branch) * (f_plus_dag @ f_minus)).max_abs(),
        )
        rep.add(
            f"(iii) f+ f-^+ = qF^+1/2 f-^+ f+ [{label} branch]",
            (f_plus @ f_minus_dag - branch * (f_minus_dag @ f_plus)).max_abs(),
        )
    return rep


def check_ordering_products(dfm: Deformation, tolerance: float = 1e-10) -> VerificationReport:
    """Check the left/right-ordered quantizations of the two generators and
    all six of their first-order products against their closed diagonal
    forms (single mode)."""
    kp = dfm.kprime
    q_k = dfm.q_k
    rep = VerificationReport(tolerance)

    theta = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    a_L = quantize(theta, Ordering.LEFT)
    a_R = quantize(theta, Ordering.RIGHT)
    b_L = quantize(bth, Ordering.LEFT)
    b_R = quantize(bth, Ordering.RIGHT)

    def super_diag(values) -> FockOperator:
        out = np.zeros((kp, kp), dtype=complex)
        for n, v in enumerate(values):
            out[n, n + 1] = v
        return FockOperator(dfm, 1, out)

    def sub_diag(values) -> FockOperator:
        out = np.zeros((kp, kp), dtype=complex)
        for n, v in enumerate(values):
            out[n + 1, n] = v
        return FockOperator(dfm, 1, out)

    roots = [math.sqrt(qnumber(n + 1, dfm)) for n in range(kp - 1)]
    rep.add("left-ordered lowering = antinormal lowering", a_L.residual(quantize(theta)))
    rep.add("right-ordered raising = antinormal raising", b_R.residual(quantize(bth)))
    rep.add("left-ordered lowering matches sqrt([n+1]) superdiag", a_L.residual(super_diag(roots)))
    rep.add(
        "right-ordered lowering matches sqrt([n+1]) q_k^(n+2) superdiag",
        a_R.residual(super_diag([roots[n] * q_k ** (n + 2) for n in range(kp - 1)])),
    )
    rep.add("right-ordered raising matches sqrt([n+1]) subdiag", b_R.residual(sub_diag(roots)))
    rep.add(
        "left-ordered raising matches sqrt([n+1]) q_k^(n+2) subdiag",
        b_L.residual(sub_diag([roots[n] * q_k ** (n + 2) for n in range(kp - 1)])),
    )

    def diag(values) -> FockOperator:
        return FockOperator(dfm, 1, np.diag(np.asarray(values, dtype=complex)))

    nums = [qnumber(n, dfm) for n in range(kp + 1)]
    rep.add(
        "L(th)@R(bth) = diag([n+1])",
        (a_L @ b_R).residual(diag([nums[n + 1] for n in range(kp)])),
    )
    rep.add(
        "L(th)@L(bth) = diag([n+1] q_k^(n+2))",
        (a_L @ b_L).residual(diag([nums[n + 1] * q_k ** (n + 2) for n in range(kp)])),
    )
    rep.add(
        "R(th)@R(bth) = diag([n+1] q_k^(n+2))",
        (a_R @ b_R).residual(diag([nums[n + 1] * q_k ** (n + 2) for n in range(kp)])),
    )
    rep.add(
        "R(th)@L(bth) = diag([n+1] q_k^(2n+4))",
        (a_R @ b_L).residual(diag([nums[n + 1] * q_k ** (2 * n + 4) for n in range(kp)])),
    )
    rep.add(
        "R(bth)@L(th) = diag([n])",
        (b_R @ a_L).residual(diag([nums[n] for n in range(kp)])),
    )
    rep.add(
        "R(bth)@R(th) = diag([n] q_k^(n+1))",
        (b_R @ a_R).residual(diag([nums[n] * q_k ** (n + 1) for n in range(kp)])),
    )
    rep.add(
        "L(bth)@L(th) = diag([n] q_k^(n+1))",
        (b_L @ a_L).residual(diag([nums[n] * q_k ** (n + 1) for n in range(kp)])),
    )
    rep.add(
        "L(bth)@R(th) = diag([n] q_k^(2n+2))",
        (b_L @ a_R).residual(diag([nums[n] * q_k ** (2 * n + 2) for n in range(kp)])),
    )
    return rep


def check_mixed_quantization(dfm: Deformation, tolerance: float = 1e-10) -> VerificationReport:
    """Check the closed forms for mixed monomials theta^n bartheta^m against
    direct quantization and against ordered operator products, plus the
    commutator expansion of [low^n, high^m] into nested first-order
    commutators (single mode)."""
    kp = dfm.kprime
    rep = VerificationReport(tolerance)
    low = ladder(dfm)
    high = ladder_dag(dfm)
    res_int = 0.0
    res_prod = 0.0
    res_rev = 0.0
    for n in range(kp):
        for m in range(kp):
            closed = quantize_mixed_monomial(n, m, dfm)
            theta = ParaPoly.monomial(dfm, 1, (n,), (m,))
            res_int = max(res_int, closed.residual(quantize(theta)))
            res_prod = max(res_prod, closed.residual(low.power(n) @ high.power(m)))
            # Reversed product high^m @ low^n, closed form.
            rev = np.zeros((kp, kp), dtype=complex)
            for l in range(kp):
                if l + n > kp - 1 or l + m > kp - 1:
                    continue
                rev[l + m, l + n] = math.sqrt(
                    (qfactorial(l + n, dfm) / qfactorial(l, dfm))
                    * (qfactorial(l + m, dfm) / qfactorial(l, dfm))
                )
            res_rev = max(res_rev, (high.power(m) @ low.power(n)).residual(FockOperator(dfm, 1, rev)))
    rep.add("closed mixed form = quantize(theta^n bartheta^m), all n,m", res_int)
    rep.add("closed mixed form = low^n @ high^m, all n,m", res_prod)
    rep.add("reversed product high^m @ low^n matches its closed form, all n,m", res_rev)

    base = low @ high - high @ low
    res_comm = 0.0
    for n in range(kp):
        for m in range(kp):
            lhs = low.power(n) @ high.power(m) - high.power(m) @ low.power(n)
            acc = FockOperator.zero(dfm)
            for s in range(n):
                for r in range(m):
                    acc = acc + (
                        low.power(s) @ high.power(r) @ base @ high.power(m - 1 - r) @ low.power(n - 1 - s)
                    )
            res_comm = max(res_comm, lhs.residual(acc))
    rep.add("[low^n, high^m] = nested first-order commutator sum, all n,m", res_comm)
    return rep


def hermiticity_residual(dfm: Deformation, trials: int = 100, seed: int = 0) -> float:
    """Worst deviation of quantize(conjugate(f)) from dagger(quantize(f))
    over random single-mode symbols."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        f = random_poly(dfm, rng, modes=1)
        worst = max(worst, quantize(f.conjugate()).residual(quantize(f).dagger()))
    return worst


def operator_to_dict(op: FockOperator) -> dict:
    """JSON-ready form: ``{"k", "d", "dim", "rows"}`` with complex entries
    as ``{"re", "im"}`` objects."""
    rows = [
        [{"re": float(v.real), "im": float(v.imag)} for v in row] for row in op.mat
    ]
    return {"k": op.dfm.k, "d": op.d, "dim": op.dim, "rows": rows}


def operator_from_dict(obj: dict) -> FockOperator:
    """Inverse of ``operator_to_dict`` with shape validation."""
    from .qnum import deformation

    try:
        k = int(obj["k"])
        d = int(obj["d"])
        dim = int(obj["dim"])
        rows = obj["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    dfm = deformation(k)
    if dim != dfm.kprime**d:
        raise ValueError(f"dim {dim} does not match (k/2)^d = {dfm.kprime ** d}")
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError("rows do not form a dim x dim matrix")
    try:
        mat = [[complex(float(v["re"]), float(v["im"])) for v in row] for row in rows]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix entry: {exc}") from exc
    return FockOperator(dfm, d, np.asarray(mat, dtype=complex))
