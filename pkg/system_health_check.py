"""
시스템 상태 검증 스크립트
- 로깅 / 설정 / 성능 모니터 확인
- 핵심 재현 수치 확인 (증강 인자 298.5, 근사식 일치, 부분분수 분해, 수직 힘 4.07)
- JSON 보고서 저장, 종료 코드 0 (정상) / 1 (경고) / 2 (오류)
"""

import json
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, Optional

import numpy as np

PROJECT_ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from analysis.forces import resonant_force
from analysis.potentials import enhancement_estimate, enhancement_exact
from media.dielectric import HostModel, permittivity_at, permittivity_imag_axis
from media.response import fresnel_r, resonant_decomposition
from scenario.scenario_io import Scenario
from utils.config_manager import config_manager
from utils.logging_system import SurfaceVdwLogger, safe_execute
from utils.performance_monitor import performance_monitor

DEFAULT_REPORT_PATH = PROJECT_ROOT / "logs" / "system_health_report.json"

HEADLINE_ENHANCEMENT = 298.5
FORCE_SPOT_VALUE = 4.07


def _check_logging() -> str:
    SurfaceVdwLogger("HealthCheck").info("Health check started")
    return "OK"


def _check_config() -> str:
    validation = config_manager.validate_environment()
    missing = [k for k, v in validation.items() if not v]
    return f"WARNING: Failed {missing}" if missing else "OK"


def _check_performance() -> str:
    summary = performance_monitor.get_performance_summary()
    return "OK" if "uptime_seconds" in summary.get("system_stats", {}) else "WARNING: Incomplete summary"


def _check_partial_fractions() -> str:
    medium = Scenario().medium()
    decomposition = resonant_decomposition(medium)
    vacuum = HostModel.vacuum()

    omega = np.linspace(0.2, 2.0, 1000)
    direct = fresnel_r(vacuum.at(omega), permittivity_at(medium, omega))
    real_axis = np.max(np.abs(decomposition.reflection(omega) - direct) / np.abs(direct))

    xi = np.linspace(0.0, 5.0, 1000)
    direct_imag = fresnel_r(vacuum.imag_axis(xi), permittivity_imag_axis(medium, xi))
    imag_axis = np.max(np.abs(decomposition.reflection(1j * xi) - direct_imag) / np.abs(direct_imag))

    worst = max(real_axis, imag_axis)
    return "OK" if worst <= 1e-12 else f"ERROR: Decomposition mismatch {worst:.2e}"


def _check_enhancement() -> str:
    scenario = Scenario()
    medium = scenario.medium()
    decomposition = resonant_decomposition(medium)
    geom = scenario.potential_geometry()

    exact = enhancement_exact(scenario.excited_atom(1.0), scenario.ground_atom(), geom, medium)
    estimate = enhancement_estimate(decomposition.sigma_sq, decomposition.omega_S, decomposition.Gamma,
                                    geom.z_A, geom.z_B, geom.R)
    if abs(exact - HEADLINE_ENHANCEMENT) > 0.01 * HEADLINE_ENHANCEMENT:
        return f"ERROR: Enhancement {exact:.2f} outside 1% of {HEADLINE_ENHANCEMENT}"
    if abs(exact - estimate) > 0.02 * exact:
        return f"WARNING: Closed-form estimate {estimate:.2f} differs from {exact:.2f} by more than 2%"
    return "OK"


def _check_force() -> str:
    scenario = Scenario()
    result = resonant_force(scenario.excited_atom(1.0), scenario.ground_atom(for_force=True),
                            scenario.force_geometry(), scenario.medium(), 1.0)
    if abs(result.F_z - FORCE_SPOT_VALUE) > 0.02 * FORCE_SPOT_VALUE:
        return f"ERROR: F_z/F0 = {result.F_z:.3f}, expected {FORCE_SPOT_VALUE}"
    return "OK"


def _check_directories() -> str:
    missing = [name for name in ("src", "config", "tests") if not (PROJECT_ROOT / name).exists()]
    return f"WARNING: Missing {missing}" if missing else "OK"


CHECKS: Dict[str, tuple] = {
    "logging": ("🧾 로깅 시스템", _check_logging),
    "config": ("⚙️ 설정 관리자", _check_config),
    "performance": ("📊 성능 모니터링", _check_performance),
    "partial_fractions": ("🧮 반사계수 부분분수 분해", _check_partial_fractions),
    "enhancement": ("📈 증강 인자 재현", _check_enhancement),
    "force": ("🧲 수직 힘 재현", _check_force),
    "directory_structure": ("📁 디렉토리 구조", _check_directories),
}


def _run_check(label: str, check: Callable[[], str]) -> str:
    status = safe_execute(check, "ERROR: Exception raised (see log)", f"{label} 검사 실패")
    if status == "OK":
        print(f"✅ {label}: 정상")
    elif status.startswith("WARNING"):
        print(f"⚠️ {label}: {status}")
    else:
        print(f"❌ {label}: {status}")
    return status


def check_system_health(report_path: Optional[Path] = None) -> Dict:
    """전체 시스템 상태 검사"""
    print("🔍 === 표면 증강 van der Waals 계산기 상태 검증 ===")
    print(f"📅 검사 시간: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print("=" * 60)

    health_status = {
        "timestamp": datetime.now().isoformat(),
        "components": {},
        "overall_status": "UNKNOWN",
    }

    for name, (label, check) in CHECKS.items():
        health_status["components"][name] = _run_check(label, check)

    statuses = list(health_status["components"].values())
    error_count = len([v for v in statuses if v.startswith("ERROR")])
    warning_count = len([v for v in statuses if v.startswith("WARNING")])
    ok_count = len([v for v in statuses if v == "OK"])

    if error_count == 0 and warning_count == 0:
        health_status["overall_status"] = "HEALTHY"
        status_emoji = "🟢"
        status_text = "모든 컴포넌트 정상"
    elif error_count == 0:
        health_status["overall_status"] = "WARNING"
        status_emoji = "🟡"
        status_text = f"경고 {warning_count}개 (정상 {ok_count}개)"
    else:
        health_status["overall_status"] = "ERROR"
        status_emoji = "🔴"
        status_text = f"오류 {error_count}개, 경고 {warning_count}개 (정상 {ok_count}개)"

    print(f"\n{status_emoji} === 전체 시스템 상태: {health_status['overall_status']} ===")
    print(f"📋 상태 요약: {status_text}")

    report_path = Path(report_path) if report_path else DEFAULT_REPORT_PATH
    os.makedirs(report_path.parent, exist_ok=True)
    with open(report_path, 'w', encoding='utf-8') as f:
        json.dump(health_status, f, indent=2, ensure_ascii=False)
    print(f"💾 상태 보고서 저장: {report_path}")

    return health_status


EXIT_CODES = {"HEALTHY": 0, "WARNING": 1}


if __name__ == "__main__":
    status = check_system_health(Path(sys.argv[1]) if len(sys.argv) > 1 else None)
    sys.exit(EXIT_CODES.get(status["overall_status"], 2))
