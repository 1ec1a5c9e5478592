"""
반무한 매질 및 호스트 유전함수 모델
- Lorentz 진동자 유전함수 (실수/허수 주파수)
- 실험 관측량 (η, ε(0), ω_S, Γ) <-> 미시 파라미터 (η, ω_P, ω_T, Γ) 변환
- 금속 극한 (ω_T = 0): 정적 유전율 무한대

모든 주파수는 기준 주파수 ω_ref (기본값 ω_S) 단위의 무차원 값.
이 유전함수는 고주파에서 1로 가지 않으므로 ω_S 주변 주파수 창에서만 유효하다.
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from utils.logging_system import ParameterError

ArrayLike = Union[float, complex, np.ndarray]


@dataclass(frozen=True)
class MediumModel:
    """Lorentz 진동자 매질 ε_m(ω) = η(1 + ω_P²/(ω_T² − ω² − iωΓ))"""
    eta: float
    omega_P: float
    omega_T: float
    Gamma: float

    def __post_init__(self):
        values = (self.eta, self.omega_P, self.omega_T, self.Gamma)
        if not all(math.isfinite(v) for v in values):
            raise ParameterError("Medium parameters must be finite", details=self._as_dict())
        if self.eta < 1.0:
            raise ParameterError(f"eta must be >= 1, got {self.eta}", details=self._as_dict())
        if self.Gamma <= 0.0:
            raise ParameterError(f"Gamma must be > 0, got {self.Gamma}", details=self._as_dict())
        if self.omega_P < 0.0 or self.omega_T < 0.0:
            raise ParameterError("omega_P and omega_T must be >= 0", details=self._as_dict())

    def _as_dict(self):
        return {"eta": self.eta, "omega_P": self.omega_P, "omega_T": self.omega_T, "Gamma": self.Gamma}

    @property
    def is_metal(self) -> bool:
        return self.omega_T == 0.0 and self.omega_P > 0.0


def from_microscopic(eta: float, omega_P: float, omega_T: float, Gamma: float) -> MediumModel:
    """미시 파라미터로 매질 생성"""
    return MediumModel(eta=float(eta), omega_P=float(omega_P), omega_T=float(omega_T), Gamma=float(Gamma))


def from_observables(eta: float, eps0: float, omega_S: float, Gamma: float) -> MediumModel:
    """관측량 (η, ε(0), ω_S, Γ)로부터 매질 생성"""
    if eta < 1.0:
        raise ParameterError(f"eta must be >= 1, got {eta}")
    if eps0 <= eta:
        raise ParameterError(
            f"eps0 must exceed eta (no oscillator strength): eps0={eps0}, eta={eta}",
            details={"eta": eta, "eps0": eps0},
        )
    if omega_S <= 0.0 or Gamma <= 0.0:
        raise ParameterError("omega_S and Gamma must be positive", details={"omega_S": omega_S, "Gamma": Gamma})

    a = eps0 / eta - 1.0
    omega_T_sq = omega_S ** 2 / (1.0 + eta * a / (eta + 1.0))
    omega_P_sq = a * omega_T_sq
    return MediumModel(eta=float(eta), omega_P=math.sqrt(omega_P_sq), omega_T=math.sqrt(omega_T_sq), Gamma=float(Gamma))


def permittivity_at(model: MediumModel, omega: ArrayLike) -> ArrayLike:
    """복소 주파수에서의 유전율"""
    omega = np.asarray(omega, dtype=complex)
    value = model.eta * (1.0 + model.omega_P ** 2 / (model.omega_T ** 2 - omega ** 2 - 1j * omega * model.Gamma))
    return value[()] if value.ndim == 0 else value


def permittivity_imag_axis(model: MediumModel, xi: ArrayLike) -> ArrayLike:
    """허수축 ω = iξ (ξ ≥ 0)에서의 실수 유전율"""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0.0):
        raise ParameterError("Imaginary frequency xi must be >= 0")
    value = model.eta * (1.0 + model.omega_P ** 2 / (model.omega_T ** 2 + xi ** 2 + xi * model.Gamma))
    return value[()] if value.ndim == 0 else value


def surface_mode_frequency(model: MediumModel) -> float:
    """진공 호스트에 대한 표면 모드 주파수 ω_S"""
    return math.sqrt(model.eta * model.omega_P ** 2 / (model.eta + 1.0) + model.omega_T ** 2)


def static_permittivity(model: MediumModel) -> float:
    """ε(0); 금속 (ω_T = 0, ω_P > 0)이면 math.inf"""
    if model.is_metal:
        return math.inf
    if model.omega_P == 0.0:
        return model.eta
    return model.eta * (1.0 + model.omega_P ** 2 / model.omega_T ** 2)


def static_reflection_limit(model: MediumModel) -> float:
    """(ε(0) − 1)/(ε(0) + 1), 금속이면 1"""
    eps0 = static_permittivity(model)
    if math.isinf(eps0):
        return 1.0
    return (eps0 - 1.0) / (eps0 + 1.0)


def forward_observables(model: MediumModel) -> Tuple[float, float, float, float]:
    """(η, ε(0), ω_S, Γ) 반환 (from_observables의 역)"""
    return model.eta, static_permittivity(model), surface_mode_frequency(model), model.Gamma


@dataclass(frozen=True)
class HostModel:
    """원자를 둘러싼 호스트 매질 ε(ω)"""
    epsilon_host: Callable[[ArrayLike], ArrayLike]
    name: str = "custom"

    @classmethod
    def vacuum(cls) -> "HostModel":
        return cls(epsilon_host=lambda omega: np.ones_like(np.asarray(omega), dtype=complex), name="vacuum")

    @classmethod
    def constant(cls, eps: complex) -> "HostModel":
        value = complex(eps)
        return cls(epsilon_host=lambda omega: np.full_like(np.asarray(omega), value, dtype=complex), name=f"constant({value})")

    @classmethod
    def lorentz(cls, model: MediumModel) -> "HostModel":
        return cls(epsilon_host=lambda omega: permittivity_at(model, omega), name="lorentz")

    @property
    def is_vacuum(self) -> bool:
        return self.name == "vacuum"

    def at(self, omega: ArrayLike) -> ArrayLike:
        """실수/복소 주파수에서의 ε(ω)"""
        value = np.asarray(self.epsilon_host(omega), dtype=complex)
        return value[()] if value.ndim == 0 else value

    def imag_axis(self, xi: ArrayLike) -> ArrayLike:
        """허수축 ε(iξ) (실수)"""
        xi = np.asarray(xi, dtype=float)
        value = np.real(np.asarray(self.epsilon_host(1j * xi), dtype=complex))
        return value[()] if value.ndim == 0 else value
