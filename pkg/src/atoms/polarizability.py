"""
2준위 등방성 원자의 분극률
- 실수/복소 주파수 α(ω), 허수축 α(iξ)
- 들뜬 상태는 − 부호, 바닥 상태는 + 부호
"""

import math
from dataclasses import dataclass

import numpy as np

from media.dielectric import ArrayLike
from utils.logging_system import ParameterError, ResonanceSingularityError

EXCITED = "excited"
GROUND = "ground"


@dataclass(frozen=True)
class AtomSpec:
    """2준위 원자 (ω_0, γ 단위 ω_ref; d_sq = |d_eg|²/(ħ ω_ref ℓ_ref³))"""
    omega_0: float
    gamma: float
    d_sq: float
    state: str = GROUND

    def __post_init__(self):
        if not (self.omega_0 > 0.0 and math.isfinite(self.omega_0)):
            raise ParameterError(f"omega_0 must be > 0, got {self.omega_0}")
        if self.gamma < 0.0:
            raise ParameterError(f"gamma must be >= 0, got {self.gamma}")
        if not self.d_sq > 0.0:
            raise ParameterError(f"d_sq must be > 0, got {self.d_sq}")
        if self.state not in (EXCITED, GROUND):
            raise ParameterError(f"state must be '{EXCITED}' or '{GROUND}', got '{self.state}'")

    @property
    def sign(self) -> float:
        return -1.0 if self.state == EXCITED else 1.0

    @classmethod
    def from_static_polarizability(cls, omega_0: float, gamma: float, alpha0: float, state: str = GROUND) -> "AtomSpec":
        """α(0) = 2 d²/(3 ω_0) 로부터 d² 역산"""
        if alpha0 <= 0.0:
            raise ParameterError(f"alpha0 must be > 0, got {alpha0}")
        return cls(omega_0=omega_0, gamma=gamma, d_sq=1.5 * omega_0 * alpha0, state=state)


def static_polarizability(atom: AtomSpec) -> float:
    """2 d²/(3 ω_0) (부호 없는 크기)"""
    return 2.0 * atom.d_sq / (3.0 * atom.omega_0)


def polarizability(atom: AtomSpec, omega: ArrayLike) -> ArrayLike:
    """α(ω) = ∓ α(0) ω_0²/(ω_0² − ω² − iωγ)"""
    omega = np.asarray(omega, dtype=complex)
    denominator = atom.omega_0 ** 2 - omega ** 2 - 1j * omega * atom.gamma
    if np.any(denominator == 0):
        raise ResonanceSingularityError(
            "Polarizability evaluated on its pole (gamma = 0 and omega = omega_0)",
            details={"omega_0": atom.omega_0, "state": atom.state},
        )
    value = atom.sign * static_polarizability(atom) * atom.omega_0 ** 2 / denominator
    return value[()] if value.ndim == 0 else value


def polarizability_imag_axis(atom: AtomSpec, xi: ArrayLike) -> ArrayLike:
    """허수축 α(iξ) (실수, 바닥 상태 양수 / 들뜬 상태 음수)"""
    xi = np.asarray(xi, dtype=float)
    value = atom.sign * static_polarizability(atom) * atom.omega_0 ** 2 / (atom.omega_0 ** 2 + xi ** 2 + xi * atom.gamma)
    return value[()] if value.ndim == 0 else value
