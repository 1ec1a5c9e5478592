"""
반무한 구간 [0, ∞) 적분
- 변수 변환 ξ = s·t/(1 − t), t ∈ [0, 1)
- 복합 Gauss–Legendre 패널, 패널 수를 두 배씩 늘리며 수렴 판정
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from utils.logging_system import ParameterError, QuadratureError, system_logger


@dataclass(frozen=True)
class QuadratureSpec:
    """적분 허용오차 및 노드 설정"""
    rel_tol: float = 1e-9
    max_doublings: int = 16
    base_nodes: int = 32

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ParameterError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.base_nodes < 8:
            raise ParameterError(f"base_nodes must be >= 8, got {self.base_nodes}")
        if self.max_doublings < 1:
            raise ParameterError(f"max_doublings must be >= 1, got {self.max_doublings}")


@lru_cache(maxsize=32)
def _unit_panel_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """[0, 1] 위의 n점 Gauss–Legendre 규칙"""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _composite_nodes(panels: int, base_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = _unit_panel_rule(base_nodes)
    edges = np.arange(panels, dtype=float) / panels
    t = (edges[:, None] + x[None, :] / panels).ravel()
    weights = np.tile(w / panels, panels)
    return t, weights


def _estimate(f: Callable[[np.ndarray], np.ndarray], panels: int, spec: QuadratureSpec, scale: float) -> float:
    t, w = _composite_nodes(panels, spec.base_nodes)
    one_minus_t = 1.0 - t
    xi = scale * t / one_minus_t
    jacobian = scale / one_minus_t ** 2
    values = np.asarray(f(xi), dtype=float)
    return float(np.sum(w * jacobian * values))


def halfline_integral(f: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec = QuadratureSpec(),
                      scale: float = 1.0) -> float:
    """∫₀^∞ f(ξ) dξ

    f는 numpy 배열을 받아 같은 모양의 실수 배열을 반환해야 한다.
    scale은 피적분 함수의 특성 주파수 (기본값 ω_ref = 1).
    """
    if scale <= 0.0:
        raise ParameterError(f"scale must be > 0, got {scale}")

    previous = _estimate(f, 1, spec, scale)
    current = previous
    for level in range(1, spec.max_doublings + 1):
        previous, current = current, _estimate(f, 2 ** level, spec, scale)
        if abs(current - previous) <= spec.rel_tol * abs(current) or (current == 0.0 and previous == 0.0):
            system_logger.debug("Quadrature converged", {"panels": 2 ** level, "estimate": current})
            return current

    raise QuadratureError(
        f"halfline_integral did not converge after {spec.max_doublings} doublings",
        details={"last_estimate": current, "previous_estimate": previous},
    )
