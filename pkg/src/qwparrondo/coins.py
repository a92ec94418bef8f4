"""
Two-level coin operators for the walk on a line.

A coin is a 2x2 ``complex128`` NumPy array. The three-angle family

    B(xi, theta, zeta) = [[ e^{i xi} cos(theta),   e^{i zeta} sin(theta) ],
                          [ e^{-i zeta} sin(theta), -e^{-i xi} cos(theta) ]]

covers every coin used by the game: player A holds ``B(xi, theta, 0)`` and
player B holds ``B(0, theta, zeta)``. The closed-form products of the two
player coins (one per ordering) are provided for the composite strategy.

Arrays returned here are read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "ComplexMatrix2",
    "CoinParams",
    "InvalidParameterError",
    "UNITARY_TOL",
    "build_coin",
    "coin",
    "player_a_coin",
    "player_b_coin",
    "multiply",
    "composite_ba",
    "composite_ab",
    "is_unitary",
    "hadamard",
]

ComplexMatrix2 = NDArray[np.complex128]

UNITARY_TOL = 1e-12


class InvalidParameterError(ValueError):
    """Raised when a coin angle is NaN or infinite."""


def _check_finite(**angles: float) -> None:
    for name, value in angles.items():
        if not math.isfinite(value):
            raise InvalidParameterError(f"{name} must be finite, got {value!r}")


def _frozen(m: np.ndarray) -> ComplexMatrix2:
    m = np.asarray(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class CoinParams:
    """Angles (radians) of a three-parameter coin. No range wrapping is done."""

    xi: float
    theta: float
    zeta: float

    def __post_init__(self) -> None:
        _check_finite(xi=self.xi, theta=self.theta, zeta=self.zeta)


def build_coin(p: CoinParams) -> ComplexMatrix2:
    """Return the coin matrix for ``p``."""
    _check_finite(xi=p.xi, theta=p.theta, zeta=p.zeta)
    c, s = math.cos(p.theta), math.sin(p.theta)
    exi, ezeta = np.exp(1j * p.xi), np.exp(1j * p.zeta)
    return _frozen(
        [
            [exi * c, ezeta * s],
            [np.conj(ezeta) * s, -np.conj(exi) * c],
        ]
    )


def coin(xi: float, theta: float, zeta: float) -> ComplexMatrix2:
    """Shorthand for ``build_coin(CoinParams(xi, theta, zeta))``."""
    return build_coin(CoinParams(xi, theta, zeta))


def player_a_coin(xi: float, theta: float) -> ComplexMatrix2:
    return coin(xi, theta, 0.0)


def player_b_coin(zeta: float, theta: float) -> ComplexMatrix2:
    return coin(0.0, theta, zeta)


def hadamard() -> ComplexMatrix2:
    """The Hadamard coin, ``B(0, pi/4, 0)``."""
    return coin(0.0, math.pi / 4, 0.0)


def multiply(a: ComplexMatrix2, b: ComplexMatrix2) -> ComplexMatrix2:
    """Matrix product ``a @ b``."""
    return _frozen(np.asarray(a) @ np.asarray(b))


def composite_ba(xi: float, theta: float, zeta: float) -> ComplexMatrix2:
    """
    Closed form of ``B(0, theta, zeta) @ B(xi, theta, 0)``.

    Player A's coin acts first, then player B's.
    """
    _check_finite(xi=xi, theta=theta, zeta=zeta)
    c2, s2 = math.cos(theta) ** 2, math.sin(theta) ** 2
    sc = math.sin(theta) * math.cos(theta)
    d = np.exp(1j * (zeta - xi))
    return _frozen(
        [
            [np.exp(1j * xi) * c2 + np.exp(1j * zeta) * s2, sc * (1 - d)],
            [sc * (np.conj(d) - 1), np.exp(-1j * zeta) * s2 + np.exp(-1j * xi) * c2],
        ]
    )


def composite_ab(xi: float, theta: float, zeta: float) -> ComplexMatrix2:
    """
    Closed form of ``B(xi, theta, 0) @ B(0, theta, zeta)``.

    Player B's coin acts first, then player A's.
    """
    _check_finite(xi=xi, theta=theta, zeta=zeta)
    c2, s2 = math.cos(theta) ** 2, math.sin(theta) ** 2
    sc = math.sin(theta) * math.cos(theta)
    # Bottom-right is e^{+i zeta} sin^2 + e^{-i xi} cos^2; the conjugate
    # phase that appears in the other ordering would break unitarity here.
    return _frozen(
        [
            [np.exp(1j * xi) * c2 + np.exp(-1j * zeta) * s2, sc * (np.exp(1j * (zeta + xi)) - 1)],
            [sc * (1 - np.exp(-1j * (xi + zeta))), np.exp(1j * zeta) * s2 + np.exp(-1j * xi) * c2],
        ]
    )


def is_unitary(m: ComplexMatrix2, tol: float = UNITARY_TOL) -> bool:
    """True iff every entry of ``m^dagger m - I`` is within ``tol`` of zero."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    m = np.asarray(m)
    if m.shape != (2, 2):
        return False
    err = m.conj().T @ m - np.eye(2)
    return bool(np.max(np.abs(err)) <= tol)
