"""
원자쌍 배치와 비지연(준정적) 축약 Green 다이애딕

축약 다이애딕 𝒢는 G_nr = (c²/ω²)(L/ε) 𝒢 로 정의되어 광속과 주파수가 저장되지 않는다.
원자쌍은 x–z 평면에 고정: r_A = (R∥, 0, z_A), r_B = (0, 0, z_B), 계면은 z = 0.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from media.dielectric import ArrayLike
from utils.logging_system import GeometryError

# 영상 쌍극자의 반사 행렬 (−I∥ + ẑẑ)
IMAGE_REFLECTION = np.diag([-1.0, -1.0, 1.0])

ORIENTATIONS = ("parallel", "perpendicular")


@dataclass(frozen=True)
class PairGeometry:
    """계면 위 두 원자의 배치 (길이 단위 ℓ_ref)"""
    z_A: float
    z_B: float
    R_par: float

    def __post_init__(self):
        if not (self.z_A > 0.0 and self.z_B > 0.0):
            raise GeometryError(
                "Atoms must lie strictly above the interface",
                details={"z_A": self.z_A, "z_B": self.z_B},
            )
        if self.R_par < 0.0:
            raise GeometryError(f"R_par must be >= 0, got {self.R_par}")
        if self.R == 0.0:
            raise GeometryError("Atoms A and B coincide")

    @property
    def Z(self) -> float:
        return self.z_A - self.z_B

    @property
    def Z_plus(self) -> float:
        return self.z_A + self.z_B

    @property
    def R(self) -> float:
        return math.hypot(self.R_par, self.Z)

    @property
    def R_prime(self) -> float:
        return math.hypot(self.R_par, self.Z_plus)

    @property
    def R_vec(self) -> np.ndarray:
        return np.array([self.R_par, 0.0, self.Z])

    @property
    def R_prime_vec(self) -> np.ndarray:
        return np.array([self.R_par, 0.0, self.Z_plus])

    def positions(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.array([self.R_par, 0.0, self.z_A]), np.array([0.0, 0.0, self.z_B])

    @classmethod
    def from_positions(cls, r_A, r_B) -> "PairGeometry":
        """임의 위치 → 정규 배치 (방위각 자유도 제거)"""
        r_A = np.asarray(r_A, dtype=float)
        r_B = np.asarray(r_B, dtype=float)
        in_plane = r_A[:2] - r_B[:2]
        return cls(z_A=float(r_A[2]), z_B=float(r_B[2]), R_par=float(np.hypot(*in_plane)))

    def swapped(self) -> "PairGeometry":
        return PairGeometry(z_A=self.z_B, z_B=self.z_A, R_par=self.R_par)

    def scaled(self, factor: float) -> "PairGeometry":
        return PairGeometry(z_A=self.z_A * factor, z_B=self.z_B * factor, R_par=self.R_par * factor)


def build_pair_geometry(z_A: float, R: float, orientation: str = "parallel", nearer: str = "A") -> PairGeometry:
    """그림용 표준 배치 생성

    parallel: 두 원자가 같은 높이 z_A, 수평 거리 R.
    perpendicular: 계면 법선 위에 정렬; nearer 원자가 높이 z_A, 다른 원자는 z_A + R.
    """
    if orientation not in ORIENTATIONS:
        raise GeometryError(f"Unknown orientation '{orientation}'", details={"allowed": ORIENTATIONS})
    if R <= 0.0:
        raise GeometryError(f"Separation R must be > 0, got {R}")
    if z_A <= 0.0:
        raise GeometryError(f"Height must be > 0, got {z_A}")

    if orientation == "parallel":
        return PairGeometry(z_A=z_A, z_B=z_A, R_par=R)
    if nearer == "A":
        return PairGeometry(z_A=z_A, z_B=z_A + R, R_par=0.0)
    if nearer == "B":
        return PairGeometry(z_A=z_A + R, z_B=z_A, R_par=0.0)
    raise GeometryError(f"nearer must be 'A' or 'B', got '{nearer}'")


def direct_dyadic(R_vec) -> np.ndarray:
    """(3R̂R̂ − I)/R³"""
    R_vec = np.asarray(R_vec, dtype=float)
    distance = np.linalg.norm(R_vec)
    if distance == 0.0:
        raise GeometryError("Direct dyadic undefined for zero separation")
    unit = R_vec / distance
    return (3.0 * np.outer(unit, unit) - np.eye(3)) / distance ** 3


def image_dyadic(R_prime_vec) -> np.ndarray:
    """영상 쌍극자 항: direct_dyadic(R′)·(−I∥ + ẑẑ) (일반적으로 비대칭)"""
    return direct_dyadic(R_prime_vec) @ IMAGE_REFLECTION


def _separations(geom: PairGeometry, reverse: bool) -> Tuple[np.ndarray, np.ndarray]:
    r_A, r_B = geom.positions()
    r_obs, r_src = (r_B, r_A) if reverse else (r_A, r_B)
    r_src_image = r_src * np.array([1.0, 1.0, -1.0])
    return r_obs - r_src, r_obs - r_src_image


def reduced_greens(geom: PairGeometry, r_coeff: complex, reverse: bool = False) -> np.ndarray:
    """𝒢(r_A ← r_B) (reverse=True 이면 𝒢(r_B ← r_A))"""
    R_vec, R_prime_vec = _separations(geom, reverse)
    return direct_dyadic(R_vec) + complex(r_coeff) * image_dyadic(R_prime_vec)


def pair_trace_product(geom: PairGeometry, r_coeff: ArrayLike) -> ArrayLike:
    """Re Tr[𝒢(A←B)·𝒢*(B←A)] (= 2W), r_coeff 배열 지원

    𝒢 = T + r X 꼴이므로 행렬 곱의 네 트레이스를 한 번만 계산한다.
    """
    R_ab, R_prime_ab = _separations(geom, reverse=False)
    R_ba, R_prime_ba = _separations(geom, reverse=True)
    T_ab, X_ab = direct_dyadic(R_ab), image_dyadic(R_prime_ab)
    T_ba, X_ba = direct_dyadic(R_ba), image_dyadic(R_prime_ba)

    direct_direct = np.trace(T_ab @ T_ba)
    direct_image = np.trace(T_ab @ X_ba)
    image_direct = np.trace(X_ab @ T_ba)
    image_image = np.trace(X_ab @ X_ba)

    r = np.asarray(r_coeff, dtype=complex)
    value = np.real(
        direct_direct + np.conj(r) * direct_image + r * image_direct + np.abs(r) ** 2 * image_image
    )
    return value[()] if value.ndim == 0 else value


def scattered_trace_interface(z_A: float, r_coeff: ArrayLike) -> ArrayLike:
    """축약 산란 트레이스의 계면 항 r/(2 z_A³) (L/ε는 호출자가 곱함)

    Onsager 공동 자기항은 위치와 무관하므로 포함하지 않는다.
    """
    if z_A <= 0.0:
        raise GeometryError(f"z_A must be > 0, got {z_A}")
    return r_coeff / (2.0 * z_A ** 3)
