"""
Casimir–Polder 퍼텐셜과 atom*-atom van der Waals 퍼텐셜
- W 인자 (직접 + 영상-영상 + 간섭 항)
- 비공명 허수축 적분 항과 공명 항의 분해
- 자유 공간 대비 증강 인자 (정확값 / 근사식)

단위: ħ = 1, 주파수 ω_ref, 길이 ℓ_ref. 들뜬 원자 A의 선폭은 모든 공식에서 0으로 둔다.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from analysis.quadrature import QuadratureSpec, halfline_integral
from atoms.polarizability import (
    EXCITED, GROUND, AtomSpec, polarizability, polarizability_imag_axis, static_polarizability,
)
from geometry.green_dyadic import PairGeometry, pair_trace_product, scattered_trace_interface
from media.dielectric import (
    ArrayLike, HostModel, MediumModel, permittivity_at, permittivity_imag_axis, surface_mode_frequency,
)
from media.response import fresnel_r, local_field_factor
from utils.logging_system import ParameterError, ResonanceSingularityError, system_logger


@dataclass(frozen=True)
class PotentialBreakdown:
    """U_AB 한 번 평가의 분해 (단위 ħω_ref)"""
    off_resonant: float
    resonant: float
    total: float
    u0_reference: float
    ratio_resonant: float
    off_resonant_evaluated: bool = True

    @property
    def ratio_off_resonant(self) -> float:
        return self.off_resonant / self.u0_reference

    @property
    def ratio_total(self) -> float:
        return self.total / self.u0_reference


@dataclass(frozen=True)
class CasimirPolderBreakdown:
    """U_A (위치 의존 부분) 분해"""
    off_resonant: float
    resonant: float

    @property
    def total(self) -> float:
        return self.off_resonant + self.resonant


def w_factor(geom: PairGeometry, r_coeff: ArrayLike) -> ArrayLike:
    """W(R∥, Z, Z₊; ω) = 3/R⁶ + |r|²·3/R′⁶ − Re r·[3(R∥⁴ − Z²Z₊²) + R²R′²]/(R⁵R′⁵)"""
    R, R_prime = geom.R, geom.R_prime
    interference = (3.0 * (geom.R_par ** 4 - geom.Z ** 2 * geom.Z_plus ** 2) + R ** 2 * R_prime ** 2) / (R ** 5 * R_prime ** 5)
    r = np.asarray(r_coeff, dtype=complex)
    value = 3.0 / R ** 6 + np.abs(r) ** 2 * 3.0 / R_prime ** 6 - np.real(r) * interference
    return value[()] if value.ndim == 0 else value


def _vacuum_if_none(host: Optional[HostModel]) -> HostModel:
    return host if host is not None else HostModel.vacuum()


def _excited_atom(atomA: AtomSpec, omega_A: Optional[float]) -> AtomSpec:
    """ω_A 반영, γ_A = 0 강제"""
    if atomA.state != EXCITED:
        raise ParameterError("Atom A must be in the excited state")
    if atomA.gamma != 0.0:
        system_logger.warning("Excited-atom linewidth ignored (gamma_A = 0 is used)", {"gamma_A": atomA.gamma})
    return replace(atomA, omega_0=float(omega_A) if omega_A is not None else atomA.omega_0, gamma=0.0)


def reflection_real_axis(medium: Optional[MediumModel], host: HostModel, omega: ArrayLike) -> ArrayLike:
    """실수 주파수 r(ω); medium=None 이면 계면 없음 (r ≡ 0)"""
    if medium is None:
        return np.zeros_like(np.asarray(omega, dtype=complex))[()]
    return fresnel_r(host.at(omega), permittivity_at(medium, omega))


def reflection_imag_axis(medium: Optional[MediumModel], host: HostModel, xi: ArrayLike) -> ArrayLike:
    """허수축 r(iξ) (실수)"""
    if medium is None:
        return np.zeros_like(np.asarray(xi, dtype=float))[()]
    return np.real(fresnel_r(host.imag_axis(xi), permittivity_imag_axis(medium, xi)))


def _local_field_ratio_imag_axis(host: HostModel, xi: np.ndarray) -> np.ndarray:
    """L(iξ)/ε(iξ)"""
    if host.is_vacuum:
        return np.ones_like(np.asarray(xi, dtype=float))
    eps = host.imag_axis(xi)
    return np.real(local_field_factor(eps)) / eps


def _off_resonant_integral(atomA: AtomSpec, atomB: AtomSpec, medium: Optional[MediumModel], host: HostModel,
                           quad: QuadratureSpec, trace_of: callable) -> float:
    def integrand(xi: np.ndarray) -> np.ndarray:
        r = reflection_imag_axis(medium, host, xi)
        lf = _local_field_ratio_imag_axis(host, xi)
        return (polarizability_imag_axis(atomA, xi) * polarizability_imag_axis(atomB, xi)
                * lf ** 2 * trace_of(r))

    return halfline_integral(integrand, quad)


def u_ab_breakdown(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: Optional[MediumModel],
                   host: Optional[HostModel] = None, omega_A: Optional[float] = None,
                   quad: QuadratureSpec = QuadratureSpec(), include_off_resonant: bool = True) -> PotentialBreakdown:
    """atom*-atom 퍼텐셜 U_AB의 비공명/공명 분해

    off_resonant = −(1/π)∫dξ α_e^A(iξ) α_g^B(iξ) [L²/ε²](iξ) W(iξ)
    resonant     = −(2 d_A² |L|²/(3|ε|²)) Re α_g^B(ω_A) W(ω_A)
    """
    host = _vacuum_if_none(host)
    atomA = _excited_atom(atomA, omega_A)
    if atomB.state != GROUND:
        raise ParameterError("Atom B must be in the ground state")
    if atomB.gamma == 0.0 and atomA.omega_0 == atomB.omega_0:
        raise ResonanceSingularityError(
            "Resonant term undefined at omega_A = omega_B with gamma_B = 0",
            details={"omega_A": atomA.omega_0},
        )

    omega = atomA.omega_0
    r_res = reflection_real_axis(medium, host, omega)
    eps = host.at(omega)
    lf_sq = abs(local_field_factor(eps)) ** 2 / abs(eps) ** 2
    alpha_B = polarizability(atomB, omega)
    resonant = float(-(2.0 * atomA.d_sq / 3.0) * lf_sq * np.real(alpha_B) * w_factor(geom, r_res))

    if include_off_resonant:
        off_resonant = -_off_resonant_integral(
            atomA, atomB, medium, host, quad, lambda r: w_factor(geom, r)
        ) / math.pi
    else:
        off_resonant = 0.0

    u0 = 2.0 * atomA.d_sq * static_polarizability(atomB) / geom.R ** 6
    return PotentialBreakdown(
        off_resonant=float(off_resonant),
        resonant=resonant,
        total=float(off_resonant) + resonant,
        u0_reference=u0,
        ratio_resonant=resonant / u0,
        off_resonant_evaluated=include_off_resonant,
    )


def off_resonant_via_trace(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: Optional[MediumModel],
                           host: Optional[HostModel] = None, omega_A: Optional[float] = None,
                           quad: QuadratureSpec = QuadratureSpec()) -> float:
    """비공명 항을 Tr[𝒢·𝒢] 경로로 계산: −(1/2π)∫ αα (L²/ε²) Tr[𝒢(A←B)𝒢(B←A)]"""
    host = _vacuum_if_none(host)
    atomA = _excited_atom(atomA, omega_A)
    integral = _off_resonant_integral(atomA, atomB, medium, host, quad, lambda r: pair_trace_product(geom, r))
    return -integral / (2.0 * math.pi)


def casimir_polder_breakdown(atomA: AtomSpec, z_A: float, medium: Optional[MediumModel],
                             host: Optional[HostModel] = None, omega_A: Optional[float] = None,
                             quad: QuadratureSpec = QuadratureSpec()) -> CasimirPolderBreakdown:
    """U_A(r_A)의 위치 의존 부분 (Onsager 공동 자기항 제외)"""
    host = _vacuum_if_none(host)
    atomA = _excited_atom(atomA, omega_A)

    def integrand(xi: np.ndarray) -> np.ndarray:
        trace = scattered_trace_interface(z_A, reflection_imag_axis(medium, host, xi))
        return polarizability_imag_axis(atomA, xi) * _local_field_ratio_imag_axis(host, xi) * trace

    off_resonant = -halfline_integral(integrand, quad) / (2.0 * math.pi)

    omega = atomA.omega_0
    eps = host.at(omega)
    trace_res = scattered_trace_interface(z_A, reflection_real_axis(medium, host, omega))
    resonant = -(atomA.d_sq / 3.0) * float(np.real(local_field_factor(eps) / eps * trace_res))
    return CasimirPolderBreakdown(off_resonant=float(off_resonant), resonant=resonant)


def casimir_polder(atomA: AtomSpec, z_A: float, medium: Optional[MediumModel],
                   host: Optional[HostModel] = None, omega_A: Optional[float] = None,
                   quad: QuadratureSpec = QuadratureSpec()) -> float:
    """U_A(r_A) = −(1/4π z_A³)∫α_e^A L r/ε dξ − (d_A²/6z_A³) Re[L r/ε](ω_A)"""
    return casimir_polder_breakdown(atomA, z_A, medium, host, omega_A, quad).total


def enhancement_exact(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
                      host: Optional[HostModel] = None) -> float:
    """ω_A = ω_S에서 |U^r_AB(계면)| / |U^r_AB(r ≡ 0)|"""
    omega_S = surface_mode_frequency(medium)
    if math.isclose(atomB.omega_0, omega_S, rel_tol=1e-12):
        raise ResonanceSingularityError(
            "Free-space resonant term vanishes (omega_A = omega_B); enhancement undefined",
            details={"omega_S": omega_S, "omega_B": atomB.omega_0},
        )
    with_interface = u_ab_breakdown(atomA, atomB, geom, medium, host, omega_S, include_off_resonant=False)
    free_space = u_ab_breakdown(atomA, atomB, geom, None, host, omega_S, include_off_resonant=False)
    return abs(with_interface.resonant) / abs(free_space.resonant)


def enhancement_estimate(sigma_sq: float, omega_S: float, Gamma: float, z_A: float, z_B: float, R: float) -> float:
    """g ≃ σ⁴ (ω_S/Γ)² (1 + 4 z_A z_B/R²)⁻³"""
    if min(omega_S, Gamma, R) <= 0.0 or sigma_sq < 0.0 or z_A < 0.0 or z_B < 0.0:
        raise ParameterError("enhancement_estimate requires positive inputs")
    return sigma_sq ** 2 * (omega_S / Gamma) ** 2 * (1.0 + 4.0 * z_A * z_B / R ** 2) ** -3


def full_potential(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: Optional[MediumModel],
                   host: Optional[HostModel] = None, omega_A: Optional[float] = None,
                   quad: QuadratureSpec = QuadratureSpec()) -> Tuple[float, float]:
    """(U_A(r_A), U_AB(r_A, r_B)) 전체 퍼텐셜의 두 성분"""
    cp = casimir_polder(atomA, geom.z_A, medium, host, omega_A, quad)
    pair = u_ab_breakdown(atomA, atomB, geom, medium, host, omega_A, quad).total
    return cp, pair
