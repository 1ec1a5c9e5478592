"""
계면 및 국소장 응답
- 준정적 Fresnel 반사계수 r(ω)
- Lorentz 매질에 대한 r(ω)의 정확한 공명 분해 (배경 + σ² 공명항)
- Onsager 국소장 인자 L(ω) = [3ε/(2ε+1)]²

주의: 국소장 인자 L(ω)와 힘 공식의 Lorentzian 함수 L(x, y, z)는 이름만 같고
서로 다른 양이다. 후자는 analysis.forces.lorentzian_line 참고.
"""

from dataclasses import dataclass

import numpy as np

from media.dielectric import (
    ArrayLike, MediumModel, static_reflection_limit, surface_mode_frequency,
)
from utils.logging_system import ResonanceSingularityError

DEGENERATE_DENOMINATOR = 1e-300


def fresnel_r(eps_host: ArrayLike, eps_medium: ArrayLike) -> ArrayLike:
    """준정적 반사계수 (ε_m − ε)/(ε_m + ε)"""
    eps_host = np.asarray(eps_host, dtype=complex)
    eps_medium = np.asarray(eps_medium, dtype=complex)
    denominator = eps_medium + eps_host
    if np.any(np.abs(denominator) < DEGENERATE_DENOMINATOR):
        raise ResonanceSingularityError(
            "Degenerate medium pair: eps_medium + eps_host vanishes",
            details={"eps_host": str(eps_host), "eps_medium": str(eps_medium)},
        )
    value = (eps_medium - eps_host) / denominator
    return value[()] if value.ndim == 0 else value


def local_field_factor(eps_host: ArrayLike) -> ArrayLike:
    """Onsager 국소장 인자 [3ε/(2ε+1)]²; ε → ∞ 이면 9/4"""
    eps_host = np.asarray(eps_host, dtype=complex)
    infinite = np.isinf(eps_host)
    finite_eps = np.where(infinite, 1.0 + 0j, eps_host)
    denominator = 2.0 * finite_eps + 1.0
    if np.any(denominator == 0):
        raise ResonanceSingularityError("Local-field factor undefined at eps = -1/2")
    value = np.where(infinite, 2.25 + 0j, (3.0 * finite_eps / denominator) ** 2)
    return value[()] if value.ndim == 0 else value


@dataclass(frozen=True)
class ResonantDecomposition:
    """r(ω) = background + σ² ω_S²/(ω_S² − ω² − iωΓ)"""
    background: float
    sigma_sq: float
    omega_S: float
    Gamma: float

    def resonant_part(self, omega: ArrayLike) -> ArrayLike:
        """공명항 r̲(ω)"""
        omega = np.asarray(omega, dtype=complex)
        value = self.sigma_sq * self.omega_S ** 2 / (self.omega_S ** 2 - omega ** 2 - 1j * omega * self.Gamma)
        return value[()] if value.ndim == 0 else value

    def reflection(self, omega: ArrayLike) -> ArrayLike:
        """분해로부터 재구성한 r(ω)"""
        return self.background + self.resonant_part(omega)


def resonant_decomposition(model: MediumModel) -> ResonantDecomposition:
    """진공 호스트에 대한 r(ω)의 부분분수 분해"""
    eta = model.eta
    omega_S = surface_mode_frequency(model)
    if omega_S == 0.0:
        sigma_sq = 0.0
    else:
        sigma_sq = 2.0 * eta * model.omega_P ** 2 / ((eta + 1.0) ** 2 * omega_S ** 2)
    return ResonantDecomposition(
        background=(eta - 1.0) / (eta + 1.0),
        sigma_sq=sigma_sq,
        omega_S=omega_S,
        Gamma=model.Gamma,
    )


def sigma_sq_from_static_limits(model: MediumModel) -> float:
    """σ² = (ε(0)−1)/(ε(0)+1) − (η−1)/(η+1) (정적 극한 경로)"""
    return static_reflection_limit(model) - (model.eta - 1.0) / (model.eta + 1.0)
