import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwparrondo.coins import (
    CoinParams,
    InvalidParameterError,
    build_coin,
    coin,
    composite_ab,
    composite_ba,
    hadamard,
    is_unitary,
    multiply,
    player_a_coin,
    player_b_coin,
)

from oracles import coin_by_hand, matmul2, max_entry_diff

pi = math.pi
angles = st.floats(min_value=-10, max_value=10, allow_nan=False)


def test_zero_angles_give_pauli_z():
    np.testing.assert_allclose(coin(0, 0, 0), [[1, 0], [0, -1]], atol=1e-15)


def test_hadamard_special_case():
    np.testing.assert_allclose(hadamard(), np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=1e-15)


def test_quarter_turns_give_pauli_x():
    np.testing.assert_allclose(coin(pi / 2, pi / 2, 0), [[0, 1], [1, 0]], atol=1e-15)


def test_coin_matches_hand_arithmetic(rng):
    for xi, theta, zeta in rng.uniform(-7, 7, size=(50, 3)):
        assert max_entry_diff(coin(xi, theta, zeta), coin_by_hand(xi, theta, zeta)) < 1e-15


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_angle_rejected(bad):
    with pytest.raises(InvalidParameterError):
        CoinParams(bad, 0.1, 0.2)
    with pytest.raises(InvalidParameterError):
        composite_ba(0.1, bad, 0.2)
    with pytest.raises(InvalidParameterError):
        composite_ab(0.1, 0.2, bad)


def test_coins_are_read_only():
    m = hadamard()
    with pytest.raises(ValueError):
        m[0, 0] = 2


def test_multiply_identity_and_involution():
    m = coin(0.3, 0.8, -1.2)
    np.testing.assert_allclose(multiply(np.eye(2), m), m)
    np.testing.assert_allclose(multiply(hadamard(), hadamard()), np.eye(2), atol=1e-15)


def test_is_unitary_examples():
    assert is_unitary(hadamard(), 1e-12)
    assert not is_unitary(np.diag([1, 2]).astype(complex), 1e-12)
    assert not is_unitary(np.eye(3), 1e-12)
    with pytest.raises(ValueError):
        is_unitary(hadamard(), 0.0)


def test_random_coins_unitary(rng):
    assert all(is_unitary(coin(*p), 1e-12) for p in rng.uniform(-2 * pi, 2 * pi, size=(1000, 3)))


@given(angles, angles, angles)
def test_coin_unitary_with_determinant_minus_one(xi, theta, zeta):
    m = coin(xi, theta, zeta)
    assert is_unitary(m, 1e-12)
    assert abs(np.linalg.det(m) + 1) < 1e-12


@given(angles, angles, angles)
def test_composite_ba_is_b_after_a(xi, theta, zeta):
    ref = matmul2(coin_by_hand(0, theta, zeta), coin_by_hand(xi, theta, 0))
    assert max_entry_diff(composite_ba(xi, theta, zeta), ref) < 1e-12


@given(angles, angles, angles)
def test_composite_ab_is_a_after_b(xi, theta, zeta):
    ref = matmul2(coin_by_hand(xi, theta, 0), coin_by_hand(0, theta, zeta))
    assert max_entry_diff(composite_ab(xi, theta, zeta), ref) < 1e-12


@given(angles, angles)
def test_composite_ba_diagonal_when_angles_match(xi, theta):
    m = composite_ba(xi, theta, xi)
    assert abs(m[0, 1]) < 1e-12 and abs(m[1, 0]) < 1e-12
    assert abs(m[0, 0] - cmath.exp(1j * xi)) < 1e-12


def test_composite_ba_worked_value():
    m = composite_ba(0, pi / 4, pi / 6)
    assert abs(m[0, 0] - (1 + cmath.exp(1j * pi / 6)) / 2) < 1e-15
    assert abs(m[0, 0] - complex(0.9330127018922193, 0.25)) < 1e-15


def test_composite_ab_worked_value():
    m = composite_ab(pi / 4, pi / 4, pi / 4)
    # e^{i(zeta+xi)} - 1 = i - 1 here
    assert abs(m[0, 1] - 0.5 * (1j - 1)) < 1e-15
    assert abs(m[1, 0] - 0.5 * (1 - (-1j))) < 1e-15


def test_composite_ab_with_zero_phases_is_square_of_coin():
    theta = 0.7
    c = coin(0, theta, 0)
    np.testing.assert_allclose(composite_ab(0, theta, 0), c @ c, atol=1e-15)


def test_player_coin_helpers():
    np.testing.assert_array_equal(player_a_coin(0.4, 0.9), build_coin(CoinParams(0.4, 0.9, 0.0)))
    np.testing.assert_array_equal(player_b_coin(0.4, 0.9), build_coin(CoinParams(0.0, 0.9, 0.4)))
