"""
ω_A 주파수 스윕과 그림 프리셋 CSV 출력
- 격자점별 평가는 스레드 풀에서 독립 실행, 결과는 격자 순서대로 조립
- 극점 위 격자점 (ω_A = ω_B, γ_B = 0)은 NaN 공백으로 보고
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from analysis.forces import resonant_force
from analysis.potentials import casimir_polder_breakdown, u_ab_breakdown
from analysis.quadrature import QuadratureSpec
from scenario.scenario_io import Scenario
from utils.config_manager import config_manager
from utils.logging_system import (
    OutputError, ParameterError, ResonanceSingularityError, SurfaceVdwError, SweepPointError, system_logger,
)
from utils.performance_monitor import monitor_performance, performance_monitor

OMEGA_COLUMN = "omega_A_rel"

# quantity -> (기본 열, breakdown 추가 열)
QUANTITY_COLUMNS: Dict[str, Tuple[str, Tuple[str, ...]]] = {
    "u_ratio": ("u_ratio", ("off_resonant_ratio", "total_ratio")),
    "force_z": ("f_z_ratio", ("f_z_surface_ratio", "f_z_pair_ratio")),
    "force_par": ("f_par_ratio", ()),
    "cp_potential": ("cp_potential", ("cp_resonant", "cp_off_resonant")),
}


@dataclass
class SweepResult:
    """스윕 결과 (격자 순서 보존)"""
    quantity: str
    frame: pd.DataFrame
    gaps: List[float] = field(default_factory=list)

    @property
    def value_column(self) -> str:
        return QUANTITY_COLUMNS[self.quantity][0]


def scenario_quadrature(scenario: Scenario) -> QuadratureSpec:
    """허용오차는 시나리오, 노드 설정은 환경 설정에서"""
    config = config_manager.get_quadrature_config()
    return scenario.quadrature(config.base_nodes, config.max_doublings)


def _point_evaluator(scenario: Scenario, quantity: str, breakdown: bool) -> Callable[[float], Dict[str, float]]:
    """ω_A 하나를 열 값 dict 로 평가하는 함수"""
    if quantity == "u_ratio":
        medium, atom_B, geom, quad = (
            scenario.medium(), scenario.ground_atom(), scenario.potential_geometry(), scenario_quadrature(scenario),
        )

        def evaluate(omega_A: float) -> Dict[str, float]:
            result = u_ab_breakdown(scenario.excited_atom(omega_A), atom_B, geom, medium, None, omega_A, quad,
                                    include_off_resonant=breakdown)
            row = {"u_ratio": result.ratio_resonant}
            if breakdown:
                row.update(off_resonant_ratio=result.ratio_off_resonant, total_ratio=result.ratio_total)
            return row

        return evaluate

    if quantity in ("force_z", "force_par"):
        medium, atom_B, geom = scenario.medium(), scenario.ground_atom(for_force=True), scenario.force_geometry()

        def evaluate(omega_A: float) -> Dict[str, float]:
            force = resonant_force(scenario.excited_atom(omega_A), atom_B, geom, medium, omega_A)
            if quantity == "force_par":
                return {"f_par_ratio": float(force.F_parallel[0])}
            row = {"f_z_ratio": force.F_z}
            if breakdown:
                row.update(f_z_surface_ratio=force.F_z_surface, f_z_pair_ratio=force.F_z_pair)
            return row

        return evaluate

    if quantity == "cp_potential":
        medium, quad = scenario.medium(), scenario_quadrature(scenario)
        z_A = scenario.potential_geometry().z_A

        def evaluate(omega_A: float) -> Dict[str, float]:
            atom_A = scenario.excited_atom(omega_A)
            # d_A²/z_A³ 단위
            unit = atom_A.d_sq / z_A ** 3
            cp = casimir_polder_breakdown(atom_A, z_A, medium, None, omega_A, quad)
            row = {"cp_potential": cp.total / unit}
            if breakdown:
                row.update(cp_resonant=cp.resonant / unit, cp_off_resonant=cp.off_resonant / unit)
            return row

        return evaluate

    raise ParameterError(f"Unknown sweep quantity '{quantity}'", details={"allowed": sorted(QUANTITY_COLUMNS)})


@monitor_performance
def run_sweep(scenario: Scenario, quantity: str = "u_ratio", breakdown: bool = False,
              max_workers: Optional[int] = None) -> SweepResult:
    """균일 ω_A 격자 위에서 quantity 평가"""
    evaluate = _point_evaluator(scenario, quantity, breakdown)
    primary, extras = QUANTITY_COLUMNS[quantity]
    columns = [primary] + (list(extras) if breakdown else [])
    grid = scenario.omega_grid()
    workers = max_workers if max_workers is not None else config_manager.get_system_config().max_workers

    def evaluate_point(omega_A: float) -> Optional[Dict[str, float]]:
        try:
            return evaluate(float(omega_A))
        except ResonanceSingularityError:
            return None
        except SurfaceVdwError as e:
            raise SweepPointError(
                f"Sweep point omega_A = {omega_A!r} failed: {e.message}",
                details={"omega_A": float(omega_A), "cause": e.error_code},
            ) from e

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        rows = list(executor.map(evaluate_point, grid))

    gaps = [float(omega) for omega, row in zip(grid, rows) if row is None]
    for omega in gaps:
        system_logger.warning("Sweep point on a resonance pole reported as gap", {"omega_A": omega})

    table = {OMEGA_COLUMN: grid}
    for column in columns:
        table[column] = [np.nan if row is None else row[column] for row in rows]

    performance_monitor.record_evaluations(quantity, len(grid))
    system_logger.debug("Sweep finished", {"quantity": quantity, "points": len(grid), "gaps": len(gaps)})
    return SweepResult(quantity=quantity, frame=pd.DataFrame(table), gaps=gaps)


def write_csv(frame: pd.DataFrame, out_path: Optional[str] = None) -> Optional[str]:
    """CSV 출력 (17 유효숫자 과학 표기, 콤마, 단일 개행); out_path 가 None 이면 문자열 반환"""
    options = dict(index=False, float_format="%.16e", na_rep="nan", lineterminator="\n")
    if out_path is None:
        return frame.to_csv(**options)
    try:
        Path(out_path).parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(out_path, **options)
    except OSError as e:
        raise OutputError(f"Cannot write CSV to {out_path}: {e}", details={"path": str(out_path)}) from e
    return None


@dataclass(frozen=True)
class FigurePreset:
    """그림 하나: 공통 설정 + 곡선별 (열 이름, 변경 필드)"""
    figure_id: int
    quantity: str
    base: Dict[str, Any]
    curves: Tuple[Tuple[str, Dict[str, Any]], ...]
    description: str = ""


FIGURE_PRESETS: Dict[int, FigurePreset] = {
    2: FigurePreset(
        2, "u_ratio", {},
        (("u_ratio_parallel", {"orientation": "parallel"}),
         ("u_ratio_perpendicular", {"orientation": "perpendicular"})),
        "resonant U_AB/U0 for parallel and perpendicular pairs, omega_B = 0.9",
    ),
    3: FigurePreset(
        3, "u_ratio", {"orientation": "parallel"},
        (("u_ratio_wb_0_9", {"omega_B_rel": 0.9}),
         ("u_ratio_wb_1_1", {"omega_B_rel": 1.1})),
        "resonant U_AB/U0 for omega_B below and above the surface mode",
    ),
    4: FigurePreset(
        4, "u_ratio", {"omega_B_rel": 1.0, "omega_A_min_rel": 0.97, "omega_A_max_rel": 1.03},
        (("u_ratio_parallel", {"orientation": "parallel"}),
         ("u_ratio_perpendicular", {"orientation": "perpendicular"})),
        "double resonance omega_B = omega_S",
    ),
    5: FigurePreset(
        5, "force_z", {"orientation": "parallel", "omega_A_min_rel": 0.9, "omega_A_max_rel": 1.1},
        (("f_z_ratio_R_eq_zA", {"R_over_zA": 1.0}),
         ("f_z_ratio_R_eq_5zA", {"R_over_zA": 5.0})),
        "perpendicular force F_z/F0 at R = z_A and R = 5 z_A",
    ),
}


def figure_frame(figure_id: int, overrides: Optional[Dict[str, Any]] = None,
                 max_workers: Optional[int] = None) -> pd.DataFrame:
    """프리셋 곡선들을 한 표로 결합 (기본값 → 프리셋 → 사용자 덮어쓰기 → 곡선별 필드)"""
    if figure_id not in FIGURE_PRESETS:
        raise ParameterError(f"Unknown figure id {figure_id}", details={"allowed": sorted(FIGURE_PRESETS)})
    preset = FIGURE_PRESETS[figure_id]
    base = Scenario().with_overrides(**preset.base).with_overrides(**(overrides or {}))

    frame: Optional[pd.DataFrame] = None
    for column, curve_fields in preset.curves:
        result = run_sweep(base.with_overrides(**curve_fields), preset.quantity, max_workers=max_workers)
        curve = result.frame.rename(columns={result.value_column: column})
        frame = curve if frame is None else frame.assign(**{column: curve[column].to_numpy()})
    return frame


@monitor_performance
def emit_figure(figure_id: int, out_path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None,
                max_workers: Optional[int] = None) -> Optional[str]:
    """그림 프리셋 CSV 작성 (out_path 가 None 이면 CSV 문자열 반환)"""
    frame = figure_frame(figure_id, overrides, max_workers)
    system_logger.info(f"Figure {figure_id} computed", {"rows": len(frame), "columns": list(frame.columns)})
    return write_csv(frame, out_path)
