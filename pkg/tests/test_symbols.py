"""Symbol maps: coherent expectation (lower), antinormal preimage (upper),
the transported star product and the quaternion demo."""

import cmath
import math

import numpy as np
import pytest

from pgquant import (
    FockOperator,
    ParaPoly,
    coherent_overlap,
    deformation,
    ladder,
    ladder_dag,
    lower_symbol,
    lower_symbol_by_pairing,
    moyal_star,
    multiply,
    quantize,
    quaternion_demo,
    random_poly,
    round_trip_residuals,
    upper_symbol,
)


def random_operator(dfm, rng):
    kp = dfm.kprime
    mat = rng.uniform(-1, 1, (kp, kp)) + 1j * rng.uniform(-1, 1, (kp, kp))
    return FockOperator(dfm, 1, mat)


# ---------------------------------------------------------------- lower symbol


def test_coherent_overlap_frozen_k4():
    dfm = deformation(4)
    ov = coherent_overlap(dfm)
    assert ov.coefficient((0,), (0,)) == pytest.approx(1.0)
    assert ov.coefficient((1,), (1,)) == pytest.approx(-1.0, abs=1e-12)
    assert len(ov.terms) == 2


def test_coherent_overlap_frozen_k6():
    dfm = deformation(6)
    ov = coherent_overlap(dfm)
    w = cmath.exp(-2j * math.pi / 3)
    assert ov.coefficient((0,), (0,)) == pytest.approx(1.0)
    assert ov.coefficient((1,), (1,)) == pytest.approx(w, abs=1e-12)
    # conj(q_k)^4 / [2]! = conj(q_k) since q_k^3 = 1 and [2] = 1 at k = 6
    assert ov.coefficient((2,), (2,)) == pytest.approx(w, abs=1e-12)


def test_lower_symbol_of_identity_is_overlap(dfm):
    sym = lower_symbol(FockOperator.identity(dfm, 1))
    assert sym.distance(coherent_overlap(dfm)) < 1e-12


def test_lower_symbol_ladder_identities(dfm):
    # expectation of the lowering operator multiplies the overlap by theta on
    # the right; the raising operator multiplies by bartheta on the left
    th = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    ov = coherent_overlap(dfm)
    assert lower_symbol(ladder(dfm)).distance(multiply(ov, th)) < 1e-12
    assert lower_symbol(ladder_dag(dfm)).distance(multiply(bth, ov)) < 1e-12


def test_lower_symbol_matches_pairing_route(dfm):
    rng = np.random.default_rng(43)
    for _ in range(10):
        op = random_operator(dfm, rng)
        direct = lower_symbol(op)
        paired = lower_symbol_by_pairing(op)
        assert direct.distance(paired) < 1e-10


def test_lower_symbol_is_linear():
    dfm = deformation(8)
    rng = np.random.default_rng(47)
    a = random_operator(dfm, rng)
    b = random_operator(dfm, rng)
    lhs = lower_symbol(a + (-1.5j) * b)
    rhs = lower_symbol(a) + (-1.5j) * lower_symbol(b)
    assert lhs.distance(rhs) < 1e-12


# ---------------------------------------------------------------- upper symbol


def test_upper_symbol_of_identity_is_one(dfm):
    sym = upper_symbol(FockOperator.identity(dfm, 1))
    assert sym.distance(ParaPoly.unit(dfm)) < 1e-10


def test_upper_symbol_k4_closed_form():
    dfm = deformation(4)
    rng = np.random.default_rng(53)
    for _ in range(20):
        op = random_operator(dfm, rng)
        a = op.mat
        expect = ParaPoly(
            dfm,
            1,
            {
                ((0,), (0,)): a[1, 1],
                ((1,), (0,)): a[0, 1],
                ((0,), (1,)): a[1, 0],
                ((1,), (1,)): a[0, 0] - a[1, 1],
            },
        )
        assert upper_symbol(op).distance(expect) < 1e-12


def test_upper_symbol_diag_projector_k4():
    dfm = deformation(4)
    op = FockOperator(dfm, 1, np.diag([1.0, 0.0]).astype(complex))
    sym = upper_symbol(op)
    assert sym.terms == {((1,), (1,)): 1.0 + 0j}


def test_round_trip_poly_to_matrix(dfm):
    rng = np.random.default_rng(59)
    for _ in range(25):
        f = random_poly(dfm, rng)
        assert upper_symbol(quantize(f)).distance(f) < 1e-9


def test_round_trip_matrix_to_poly(dfm):
    rng = np.random.default_rng(61)
    for _ in range(25):
        op = random_operator(dfm, rng)
        assert quantize(upper_symbol(op)).residual(op) < 1e-9


def test_round_trip_residual_helper():
    r_poly, r_mat = round_trip_residuals(deformation(10), trials=40, seed=3)
    assert r_poly < 1e-9 and r_mat < 1e-9


# ---------------------------------------------------------------- star product


def test_star_unit_is_neutral(dfm):
    rng = np.random.default_rng(67)
    f = random_poly(dfm, rng)
    one = ParaPoly.unit(dfm)
    assert moyal_star(one, f).distance(f) < 1e-9
    assert moyal_star(f, one).distance(f) < 1e-9


def test_star_powers_track_algebra_powers(dfm):
    # theta * theta (star) is theta^2, so star powers vanish at exactly the
    # algebra's nilpotency order
    th = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    assert moyal_star(th, th).distance(th * th) < 1e-10
    assert moyal_star(bth, bth).distance(bth * bth) < 1e-10
    p = th
    for _ in range(dfm.kprime - 1):
        p = moyal_star(p, th)
    assert p.is_zero(1e-10)
    p = bth
    for _ in range(dfm.kprime - 1):
        p = moyal_star(p, bth)
    assert p.is_zero(1e-10)


def test_star_nilpotency_k4():
    dfm = deformation(4)
    th = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    assert moyal_star(th, th).is_zero(1e-12)
    assert moyal_star(bth, bth).is_zero(1e-12)


def test_star_frozen_pairs_k4():
    dfm = deformation(4)
    th = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    assert moyal_star(th, bth).distance(th * bth) < 1e-12
    # reversed star is 1 - theta bartheta, not the algebra product
    expect = ParaPoly(dfm, 1, {((0,), (0,)): 1.0, ((1,), (1,)): -1.0})
    assert moyal_star(bth, th).distance(expect) < 1e-12
    assert moyal_star(bth, th).distance(bth * th) > 0.9


def test_star_matches_k4_coefficient_formula():
    # with f = f0 + f1 theta + f2 bartheta + f3 theta bartheta the operator
    # image is [[f0+f3, f1], [f2, f0]]; multiply two of those and read the
    # product coefficients back off
    dfm = deformation(4)
    rng = np.random.default_rng(71)

    def coeffs(p):
        return np.array(
            [
                p.coefficient((0,), (0,)),
                p.coefficient((1,), (0,)),
                p.coefficient((0,), (1,)),
                p.coefficient((1,), (1,)),
            ]
        )

    for _ in range(20):
        f = random_poly(dfm, rng)
        g = random_poly(dfm, rng)
        f0, f1, f2, f3 = coeffs(f)
        g0, g1, g2, g3 = coeffs(g)
        expect = np.array(
            [
                f2 * g1 + f0 * g0,
                (f0 + f3) * g1 + f1 * g0,
                f2 * (g0 + g3) + f0 * g2,
                (f0 + f3) * (g0 + g3) + f1 * g2 - f2 * g1 - f0 * g0,
            ]
        )
        got = coeffs(moyal_star(f, g))
        assert np.max(np.abs(got - expect)) < 1e-12


@pytest.mark.parametrize("k", [4, 6, 8])
def test_star_associative(k):
    dfm = deformation(k)
    rng = np.random.default_rng(73)
    for _ in range(10):
        f = random_poly(dfm, rng)
        g = random_poly(dfm, rng)
        h = random_poly(dfm, rng)
        lhs = moyal_star(moyal_star(f, g), h)
        rhs = moyal_star(f, moyal_star(g, h))
        assert lhs.distance(rhs) < 1e-9


def test_star_transports_operator_product(dfm):
    rng = np.random.default_rng(79)
    f = random_poly(dfm, rng)
    g = random_poly(dfm, rng)
    assert quantize(moyal_star(f, g)).residual(quantize(f) @ quantize(g)) < 1e-9


# ---------------------------------------------------------------- guards


def test_symbol_maps_reject_multimode():
    dfm = deformation(4)
    op2 = FockOperator.identity(dfm, 2)
    with pytest.raises(ValueError):
        upper_symbol(op2)
    with pytest.raises(ValueError):
        lower_symbol(op2)
    p2 = ParaPoly.unit(dfm, 2)
    with pytest.raises(ValueError):
        moyal_star(p2, p2)


# ---------------------------------------------------------------- quaternions


def test_quaternion_demo_passes():
    rep = quaternion_demo(trials=60, seed=17)
    assert rep.all_pass, [c.name for c in rep.checks if not c.passed]
    names = {c.name for c in rep.checks}
    assert "I*I = -1" in names
    assert "J*I = -K" in names
    assert "theta*theta = 0" in names


def test_quaternion_units_square_to_minus_one_directly():
    dfm = deformation(4)
    th = ParaPoly.generator(dfm, 1, 1)
    bth = ParaPoly.generator(dfm, 1, 1, barred=True)
    unit_i = 1j * (th + bth)
    unit_j = -1.0 * th + bth
    unit_k = ParaPoly(dfm, 1, {((0,), (0,)): -1j, ((1,), (1,)): 2j})
    minus_one = ParaPoly.constant(dfm, 1, -1.0)
    for u in (unit_i, unit_j, unit_k):
        assert moyal_star(u, u).distance(minus_one) < 1e-10
    assert moyal_star(unit_i, unit_j).distance(unit_k) < 1e-10
    assert moyal_star(unit_j, unit_i).distance(-unit_k) < 1e-10
