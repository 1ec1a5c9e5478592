"""
시나리오 파일 입출력
- `key = value` 줄 단위 텍스트, `#` 이후는 주석
- 알 수 없는 키, 중복 키, 숫자 변환 실패, 불변식 위반은 줄 번호와 함께 ScenarioError
- 빈 파일은 기본 사파이어 시나리오 (ω_S 근방 평행 배치)

모든 물리량은 환산 단위: ω_S = 1, 퍼텐셜 길이 단위 R, 힘 길이 단위 α_B(0)^{1/3}.
"""

import math
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np

from analysis.quadrature import QuadratureSpec
from atoms.polarizability import EXCITED, AtomSpec
from geometry.green_dyadic import ORIENTATIONS, PairGeometry, build_pair_geometry
from media.dielectric import MediumModel, from_observables
from utils.logging_system import ScenarioError

NEARER_ATOMS = ("A", "B")
NONE_TOKEN = "none"


@dataclass(frozen=True)
class Scenario:
    """시나리오 파라미터 (기본값 = 사파이어 표면, ω_B = 0.9 ω_S, 평행 배치)"""
    # 매질 관측량
    eta: float = 2.71
    eps0: float = 6.57
    omega_S_hz: Optional[float] = 1.54e14
    Gamma_rel: float = 0.015
    # 바닥 상태 원자 B
    omega_B_rel: float = 0.9
    gamma_B_rel: float = 0.001
    alpha_B0_rel: float = 1.0
    # 배치
    orientation: str = "parallel"
    nearer_atom: str = "A"
    z_A_rel: float = 0.1
    R_rel: float = 1.0
    z_A_alpha: float = 3.0
    R_over_zA: float = 1.0
    # 스윕
    omega_A_min_rel: float = 0.7
    omega_A_max_rel: float = 1.3
    points: int = 600
    # 적분
    rel_tol: float = 1e-9

    def __post_init__(self):
        problem = _first_violation(self)
        if problem is not None:
            key, message = problem
            raise ScenarioError(message, details={"key": key})

    def with_overrides(self, **overrides: Any) -> "Scenario":
        return replace(self, **overrides)

    # --- 물리 객체 생성 ---

    def medium(self) -> MediumModel:
        return from_observables(self.eta, self.eps0, 1.0, self.Gamma_rel)

    def excited_atom(self, omega_A: float) -> AtomSpec:
        """d_A² = 1 (모든 출력은 d_A² 에 대한 비율)"""
        return AtomSpec(omega_0=float(omega_A), gamma=0.0, d_sq=1.0, state=EXCITED)

    def ground_atom(self, for_force: bool = False) -> AtomSpec:
        # 힘 시나리오의 길이 단위는 α_B(0)^{1/3} 이므로 α_B(0) = 1
        alpha0 = 1.0 if for_force else self.alpha_B0_rel
        return AtomSpec.from_static_polarizability(self.omega_B_rel, self.gamma_B_rel, alpha0)

    def potential_geometry(self) -> PairGeometry:
        return build_pair_geometry(self.z_A_rel * self.R_rel, self.R_rel, self.orientation, self.nearer_atom)

    def force_geometry(self) -> PairGeometry:
        return build_pair_geometry(self.z_A_alpha, self.R_over_zA * self.z_A_alpha, self.orientation, self.nearer_atom)

    def quadrature(self, base_nodes: int = 32, max_doublings: int = 16) -> QuadratureSpec:
        return QuadratureSpec(rel_tol=self.rel_tol, base_nodes=base_nodes, max_doublings=max_doublings)

    def omega_grid(self) -> np.ndarray:
        return np.linspace(self.omega_A_min_rel, self.omega_A_max_rel, self.points)


_POSITIVE_KEYS = (
    "Gamma_rel", "omega_B_rel", "alpha_B0_rel", "z_A_rel", "R_rel", "z_A_alpha", "R_over_zA",
    "omega_A_min_rel", "omega_A_max_rel", "rel_tol",
)


def _first_violation(s: Scenario) -> Optional[Tuple[str, str]]:
    """위반된 첫 불변식의 (키, 메시지); 없으면 None"""
    for f in fields(s):
        value = getattr(s, f.name)
        if isinstance(value, float) and not math.isfinite(value):
            return f.name, f"{f.name} must be finite, got {value}"

    if s.eta < 1.0:
        return "eta", f"eta must be >= 1, got {s.eta}"
    if s.eps0 <= s.eta:
        return "eps0", f"eps0 must exceed eta ({s.eta}), got {s.eps0}"
    if s.omega_S_hz is not None and s.omega_S_hz <= 0.0:
        return "omega_S_hz", f"omega_S_hz must be > 0, got {s.omega_S_hz}"
    for key in _POSITIVE_KEYS:
        if not getattr(s, key) > 0.0:
            return key, f"{key} must be > 0, got {getattr(s, key)}"
    if s.gamma_B_rel < 0.0:
        return "gamma_B_rel", f"gamma_B_rel must be >= 0, got {s.gamma_B_rel}"
    if s.orientation not in ORIENTATIONS:
        return "orientation", f"orientation must be one of {ORIENTATIONS}, got '{s.orientation}'"
    if s.nearer_atom not in NEARER_ATOMS:
        return "nearer_atom", f"nearer_atom must be one of {NEARER_ATOMS}, got '{s.nearer_atom}'"
    if s.points < 2:
        return "points", f"points must be >= 2, got {s.points}"
    if s.omega_A_max_rel <= s.omega_A_min_rel:
        return "omega_A_max_rel", "omega_A_max_rel must exceed omega_A_min_rel"
    return None


_FIELD_TYPES: Dict[str, type] = {
    f.name: (int if f.type is int else str if f.type is str else float) for f in fields(Scenario)
}
_OPTIONAL_KEYS = {"omega_S_hz"}


def _convert(key: str, raw: str, lineno: int) -> Any:
    kind = _FIELD_TYPES[key]
    if key in _OPTIONAL_KEYS and raw.lower() == NONE_TOKEN:
        return None
    if kind is str:
        return raw
    try:
        return kind(raw)
    except ValueError:
        raise ScenarioError(
            f"line {lineno}: cannot parse value '{raw}' for key '{key}'",
            details={"line": lineno, "key": key},
        ) from None


def _parse_assignments(text: str) -> Tuple[Dict[str, Any], Dict[str, int]]:
    values: Dict[str, Any] = {}
    lines: Dict[str, int] = {}

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(
                f"line {lineno}: expected 'key = value', got '{line}'",
                details={"line": lineno},
            )
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _FIELD_TYPES:
            raise ScenarioError(f"line {lineno}: unknown key '{key}'", details={"line": lineno, "key": key})
        if key in values:
            raise ScenarioError(
                f"line {lineno}: duplicate key '{key}' (first set on line {lines[key]})",
                details={"line": lineno, "key": key},
            )
        values[key] = _convert(key, raw, lineno)
        lines[key] = lineno

    return values, lines


def _build(base: Scenario, values: Dict[str, Any], lines: Dict[str, int]) -> Scenario:
    try:
        return base.with_overrides(**values)
    except ScenarioError as e:
        key = e.details.get("key")
        lineno = lines.get(key)
        prefix = f"line {lineno}: " if lineno is not None else ""
        raise ScenarioError(f"{prefix}{e.message}", details={"line": lineno, "key": key}) from None


def parse_scenario(text: str) -> Scenario:
    """시나리오 텍스트 → Scenario (누락 키는 기본값)"""
    values, lines = _parse_assignments(text)
    return _build(Scenario(), values, lines)


def parse_scenario_overrides(text: str, base: Optional[Scenario] = None) -> Dict[str, Any]:
    """명시된 키만 담은 dict (그림 프리셋 위에 덮어쓸 값)

    base 가 주어지면 덮어쓴 결과의 불변식도 검사한다.
    """
    values, lines = _parse_assignments(text)
    _build(base or Scenario(), values, lines)
    return values


def _format_value(value: Any) -> str:
    if value is None:
        return NONE_TOKEN
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_scenario(scenario: Scenario) -> str:
    """Scenario → 텍스트 (parse_scenario 의 역)"""
    lines = ["# surface-enhanced van der Waals scenario"]
    for f in fields(scenario):
        lines.append(f"{f.name} = {_format_value(getattr(scenario, f.name))}")
    return "\n".join(lines) + "\n"


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ScenarioError(f"Cannot read scenario file {path}: {e}", details={"path": str(path)}) from e


def load_scenario(path: str) -> Scenario:
    return parse_scenario(_read_text(path))


def load_scenario_overrides(path: str) -> Dict[str, Any]:
    return parse_scenario_overrides(_read_text(path))
