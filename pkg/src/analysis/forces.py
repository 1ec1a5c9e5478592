"""
들뜬 원자 A에 작용하는 공명 힘 F_A = −∇_A U_A

가장 공명적인 항만 남긴 퍼텐셜
    U_keep = −(d²/6z_A³) Re r̲(ω_A) − 2d² Re α_B(ω_A) |r̲(ω_A)|²/R′⁶
의 해석적 기울기와, 유한차분 기울기 검증기를 제공한다. 호스트는 진공으로 고정.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from analysis.potentials import full_potential
from analysis.quadrature import QuadratureSpec
from atoms.polarizability import AtomSpec, polarizability, static_polarizability
from geometry.green_dyadic import PairGeometry
from media.dielectric import MediumModel
from media.response import resonant_decomposition
from utils.logging_system import GeometryError, IllConditionedError, ResonanceSingularityError, system_logger

# 유한차분 반올림 오차 비율 상한 (eps·|U|/(h·|F|))
ILL_CONDITIONED_RATIO = 1e-4


def lorentzian_line(x: float, y: float, z: float) -> float:
    """L(x, y, z) = x⁴/[(x² − y²)² + (yz)²]"""
    denominator = (x ** 2 - y ** 2) ** 2 + (y * z) ** 2
    if denominator == 0.0:
        raise ResonanceSingularityError(
            "Lorentzian line evaluated on its pole",
            details={"x": x, "y": y, "z": z},
        )
    return x ** 4 / denominator


@dataclass(frozen=True)
class ForceResult:
    """공명 힘 (정규화 값 + 원시 값)

    F_parallel, F_z, F_z_surface, F_z_pair 는 F⁰ = d²/(2z_A⁴) 단위.
    F_parallel 은 R∥ = r_A∥ − r_B∥ 방향 기준의 평면 성분 (x, y).
    """
    F_parallel: np.ndarray
    F_z: float
    normalization: float
    F_parallel_raw: np.ndarray
    F_z_raw: float
    F_z_surface: float
    F_z_pair: float

    @property
    def vector_raw(self) -> np.ndarray:
        return np.array([self.F_parallel_raw[0], self.F_parallel_raw[1], self.F_z_raw])


def _check_excited(atomA: AtomSpec, omega_A: Optional[float]) -> float:
    if atomA.gamma != 0.0:
        system_logger.warning("Excited-atom linewidth ignored (gamma_A = 0 is used)", {"gamma_A": atomA.gamma})
    omega = float(omega_A) if omega_A is not None else atomA.omega_0
    if omega <= 0.0:
        raise ResonanceSingularityError(f"omega_A must be > 0, got {omega}")
    return omega


def resonant_force(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
                   omega_A: Optional[float] = None) -> ForceResult:
    """공명 근방 성분별 힘 (평면 성분 / 수직 성분)

    F∥ = −R∥ 12 d² α_B(0)/R′⁸ (1 − ω_A²/ω_B²) L(ω_B, ω_A, γ_B) σ⁴ L(ω_S, ω_A, Γ)
    F_z = −(d²/2z_A⁴) σ² L(ω_S, ω_A, Γ)[1 − ω_A²/ω_S² + 24 z_A⁴ (z_A + z_B) α_B(0)/R′⁸
          (1 − ω_A²/ω_B²) L(ω_B, ω_A, γ_B) σ²]
    """
    omega = _check_excited(atomA, omega_A)
    decomposition = resonant_decomposition(medium)
    sigma_sq, omega_S = decomposition.sigma_sq, decomposition.omega_S
    d_sq = atomA.d_sq
    z_A, z_B = geom.z_A, geom.z_B
    normalization = d_sq / (2.0 * z_A ** 4)

    if sigma_sq == 0.0:
        zero = np.zeros(2)
        return ForceResult(zero, 0.0, normalization, zero.copy(), 0.0, 0.0, 0.0)

    surface_line = lorentzian_line(omega_S, omega, decomposition.Gamma)
    atom_line = lorentzian_line(atomB.omega_0, omega, atomB.gamma)
    alpha0 = static_polarizability(atomB)
    detuning_B = 1.0 - omega ** 2 / atomB.omega_0 ** 2
    R_prime_8 = geom.R_prime ** 8

    parallel_coefficient = 12.0 * d_sq * alpha0 / R_prime_8 * detuning_B * atom_line * sigma_sq ** 2 * surface_line
    F_parallel_raw = -np.array([geom.R_par, 0.0]) * parallel_coefficient

    surface_raw = -normalization * sigma_sq * surface_line * (1.0 - omega ** 2 / omega_S ** 2)
    pair_raw = -normalization * sigma_sq * surface_line * (
        24.0 * z_A ** 4 * (z_A + z_B) * alpha0 / R_prime_8 * detuning_B * atom_line * sigma_sq
    )
    F_z_raw = surface_raw + pair_raw

    return ForceResult(
        F_parallel=F_parallel_raw / normalization,
        F_z=F_z_raw / normalization,
        normalization=normalization,
        F_parallel_raw=F_parallel_raw,
        F_z_raw=F_z_raw,
        F_z_surface=surface_raw / normalization,
        F_z_pair=pair_raw / normalization,
    )


def _resonant_reflection(medium: MediumModel, omega: float) -> complex:
    return complex(resonant_decomposition(medium).resonant_part(omega))


def resonant_force_from_gradient_form(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
                                      omega_A: Optional[float] = None) -> np.ndarray:
    """F = −ẑ (d²/2z_A⁴) Re r̲ − R′ 12 d² Re α_B |r̲|²/R′⁸ (원시 단위 3-벡터)"""
    omega = _check_excited(atomA, omega_A)
    r_res = _resonant_reflection(medium, omega)
    alpha_B = polarizability(atomB, omega)
    surface = -np.array([0.0, 0.0, 1.0]) * atomA.d_sq / (2.0 * geom.z_A ** 4) * r_res.real
    pair = -geom.R_prime_vec * 12.0 * atomA.d_sq * float(np.real(alpha_B)) * abs(r_res) ** 2 / geom.R_prime ** 8
    return surface + pair


def _u_keep_terms(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
                  omega: float) -> Tuple[float, float]:
    r_res = _resonant_reflection(medium, omega)
    alpha_B = polarizability(atomB, omega)
    surface = -(atomA.d_sq / (6.0 * geom.z_A ** 3)) * r_res.real
    pair = -2.0 * atomA.d_sq * float(np.real(alpha_B)) * abs(r_res) ** 2 / geom.R_prime ** 6
    return surface, pair


def u_keep(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
           omega_A: Optional[float] = None) -> float:
    """가장 공명적인 항만 남긴 퍼텐셜 (원시 단위 ħω_ref)"""
    omega = _check_excited(atomA, omega_A)
    return sum(_u_keep_terms(atomA, atomB, geom, medium, omega))


@dataclass(frozen=True)
class GradientCheckReport:
    """해석적 힘과 유한차분 힘 비교 결과 (원시 단위 3-벡터)"""
    analytic: np.ndarray
    finite_difference: np.ndarray
    step: float
    relative_mismatch: float
    full_potential_force: Optional[np.ndarray] = None

    @property
    def dropped_terms(self) -> Optional[np.ndarray]:
        """전체 퍼텐셜 힘 − 유지 항 힘"""
        if self.full_potential_force is None:
            return None
        return self.full_potential_force - self.analytic


def _central_gradient(potential, r_A: np.ndarray, r_B: np.ndarray, step: float) -> np.ndarray:
    force = np.zeros(3)
    for axis in range(3):
        shift = np.zeros(3)
        shift[axis] = step
        plus = potential(PairGeometry.from_positions(r_A + shift, r_B))
        minus = potential(PairGeometry.from_positions(r_A - shift, r_B))
        force[axis] = -(plus - minus) / (2.0 * step)
    return force


def gradient_force_check(atomA: AtomSpec, atomB: AtomSpec, geom: PairGeometry, medium: MediumModel,
                         omega_A: Optional[float] = None, step: Optional[float] = None,
                         include_full: bool = False, full_step: Optional[float] = None,
                         quad: QuadratureSpec = QuadratureSpec()) -> GradientCheckReport:
    """U_keep 의 중앙 유한차분 기울기와 해석적 힘 비교

    step 기본값 1e-5·z_A. include_full=True 이면 전체 퍼텐셜 U_A + U_AB 의 유한차분 힘도
    (더 큰 full_step, 기본 1e-3·z_A 로) 함께 보고한다.
    """
    omega = _check_excited(atomA, omega_A)
    h = step if step is not None else 1e-5 * geom.z_A
    if not h > 0.0:
        raise GeometryError(f"step must be > 0, got {h}")
    if h >= 0.5 * min(geom.z_A, geom.R):
        raise GeometryError(
            "step must be small compared with z_A and R",
            details={"step": h, "z_A": geom.z_A, "R": geom.R},
        )

    analytic = resonant_force_from_gradient_form(atomA, atomB, geom, medium, omega)
    force_norm = float(np.linalg.norm(analytic))

    def kept(g: PairGeometry) -> float:
        return u_keep(atomA, atomB, g, medium, omega)

    r_A, r_B = geom.positions()
    scale = sum(abs(term) for term in _u_keep_terms(atomA, atomB, geom, medium, omega))
    if force_norm > 0.0 and np.finfo(float).eps * scale / (h * force_norm) > ILL_CONDITIONED_RATIO:
        raise IllConditionedError(
            "Finite-difference step dominated by rounding error",
            details={"step": h, "potential_scale": scale, "force_norm": force_norm},
        )

    finite_difference = _central_gradient(kept, r_A, r_B, h)
    # 힘이 0이면 절대 오차를 보고
    mismatch = float(np.linalg.norm(finite_difference - analytic) / (force_norm if force_norm > 0.0 else 1.0))

    full_force = None
    if include_full:
        atomA_resonant = replace(atomA, gamma=0.0)

        def full(g: PairGeometry) -> float:
            return math.fsum(full_potential(atomA_resonant, atomB, g, medium, None, omega, quad))

        full_force = _central_gradient(full, r_A, r_B, full_step if full_step is not None else 1e-3 * geom.z_A)

    return GradientCheckReport(
        analytic=analytic,
        finite_difference=finite_difference,
        step=h,
        relative_mismatch=mismatch,
        full_potential_force=full_force,
    )
