"""
표면 증강 van der Waals 상호작용 계산기 (CLI)
- sweep: ω_A 스윕 (u_ratio / force_z / force_par / cp_potential)
- figure: 그림 프리셋 2–5 CSV 재현
- enhancement: ω_A = ω_S 증강 인자 (정확값 vs 근사식)
- force: 단일 ω_A 공명 힘 + 기울기 검증
"""

import functools
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
import pandas as pd

# 모듈 경로 추가
sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from analysis.forces import gradient_force_check, resonant_force
from analysis.potentials import enhancement_estimate, enhancement_exact
from media.response import resonant_decomposition
from scenario.scenario_io import Scenario, load_scenario_overrides
from scenario.sweep import QUANTITY_COLUMNS, emit_figure, run_sweep, scenario_quadrature, write_csv
from utils.config_manager import config_manager
from utils.logging_system import SurfaceVdwError, log_execution, system_logger
from utils.performance_monitor import performance_monitor


def reports_errors(func):
    """SurfaceVdwError → stderr 한 줄 진단 + 종료 코드 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SurfaceVdwError as e:
            system_logger.debug("Command failed", {"error_code": e.error_code, **e.details})
            click.echo(f"error [{e.error_code}]: {e.message}", err=True)
            sys.exit(1)

    return wrapper


def scenario_options(func):
    """--scenario / --out"""
    func = click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
                        help="Output CSV path (stdout if omitted)")(func)
    func = click.option("--scenario", "scenario_path", type=click.Path(dir_okay=False), default=None,
                        help="Scenario file (key = value lines)")(func)
    return func


def tolerance_option(func):
    return click.option("--tol", type=float, default=None, help="Quadrature relative tolerance")(func)


def grid_options(func):
    """--points / --tol"""
    func = tolerance_option(func)
    return click.option("--points", type=int, default=None, help="Number of omega_A grid points")(func)


def _collect_overrides(scenario_path: Optional[str], points: Optional[int], tol: Optional[float]) -> Dict[str, Any]:
    """우선순위: 명령행 > 시나리오 파일 > 환경 설정 > 기본값"""
    overrides = load_scenario_overrides(scenario_path) if scenario_path else {}
    if points is not None:
        overrides["points"] = points
    if tol is not None:
        overrides["rel_tol"] = tol
    elif "rel_tol" not in overrides:
        overrides["rel_tol"] = config_manager.get_quadrature_config().rel_tol
    return overrides


def _resolve_scenario(scenario_path: Optional[str], points: Optional[int], tol: Optional[float]) -> Scenario:
    return Scenario().with_overrides(**_collect_overrides(scenario_path, points, tol))


def _emit_csv(frame: pd.DataFrame, out_path: Optional[str]):
    text = write_csv(frame, out_path)
    if text is not None:
        click.echo(text, nl=False)
    else:
        system_logger.info("CSV written", {"path": out_path, "rows": len(frame)})


@click.group()
@click.option("--env", default=None, help="Configuration environment (development/production)")
@click.option("--verbose", is_flag=True, help="Force DEBUG logging")
@click.option("--perf-report", type=click.Path(dir_okay=False), default=None,
              help="Write a JSON performance report on exit")
@click.pass_context
@reports_errors
def cli(ctx: click.Context, env: Optional[str], verbose: bool, perf_report: Optional[str]):
    """Surface-enhanced van der Waals interaction between an excited and a ground-state atom."""
    config_manager.use_environment(env)
    system_config = config_manager.get_system_config()
    system_logger.configure("DEBUG" if verbose else system_config.log_level, system_config.log_dir)
    system_logger.debug("Configuration loaded", {
        "environment": config_manager.current_environment(),
        "max_workers": system_config.max_workers,
    })
    ctx.obj = system_config

    def finish():
        system_logger.debug("Performance summary", performance_monitor.get_performance_summary())
        if perf_report:
            performance_monitor.save_performance_report(perf_report)

    ctx.call_on_close(finish)


@cli.command()
@click.option("--quantity", type=click.Choice(sorted(QUANTITY_COLUMNS)), default="u_ratio", show_default=True)
@click.option("--breakdown", is_flag=True, help="Add off-resonant / split columns")
@scenario_options
@grid_options
@click.pass_obj
@reports_errors
@log_execution
def sweep(system_config, quantity, breakdown, scenario_path, out_path, points, tol):
    """Sweep omega_A over the scenario grid and write CSV."""
    scenario = _resolve_scenario(scenario_path, points, tol)
    result = run_sweep(scenario, quantity, breakdown=breakdown, max_workers=system_config.max_workers)
    system_logger.info("Sweep complete", {"quantity": quantity, "points": scenario.points, "gaps": len(result.gaps)})
    _emit_csv(result.frame, out_path)


@cli.command()
@click.argument("figure_id", type=click.Choice(["2", "3", "4", "5"]))
@scenario_options
@grid_options
@click.pass_obj
@reports_errors
@log_execution
def figure(system_config, figure_id, scenario_path, out_path, points, tol):
    """Reproduce a figure preset (2, 3, 4 or 5) as CSV."""
    overrides = _collect_overrides(scenario_path, points, tol)
    text = emit_figure(int(figure_id), out_path, overrides, max_workers=system_config.max_workers)
    if text is not None:
        click.echo(text, nl=False)
    else:
        system_logger.success(f"Figure {figure_id} written", {"path": out_path})


@cli.command()
@scenario_options
@click.pass_obj
@reports_errors
@log_execution
def enhancement(system_config, scenario_path, out_path):
    """Enhancement factor at omega_A = omega_S, exact and closed-form estimate."""
    scenario = _resolve_scenario(scenario_path, None, None)
    medium = scenario.medium()
    decomposition = resonant_decomposition(medium)

    rows = []
    for orientation in ("parallel", "perpendicular"):
        variant = scenario.with_overrides(orientation=orientation)
        geom = variant.potential_geometry()
        exact = enhancement_exact(variant.excited_atom(decomposition.omega_S), variant.ground_atom(), geom, medium)
        estimate = enhancement_estimate(decomposition.sigma_sq, decomposition.omega_S, decomposition.Gamma,
                                        geom.z_A, geom.z_B, geom.R)
        rows.append({
            "orientation": orientation,
            "enhancement_exact": exact,
            "enhancement_estimate": estimate,
            "relative_difference": abs(exact - estimate) / exact,
        })

    frame = pd.DataFrame(rows)
    if out_path:
        _emit_csv(frame, out_path)

    click.echo("=" * 60)
    click.echo("🎯 Surface enhancement at omega_A = omega_S")
    click.echo("=" * 60)
    click.echo(f"  sigma^2 = {decomposition.sigma_sq:.6f}   Gamma/omega_S = {decomposition.Gamma:g}")
    if scenario.omega_S_hz is not None:
        click.echo(f"  omega_S = {scenario.omega_S_hz:.3e} s^-1")
    for row in rows:
        click.echo(
            f"  📐 {row['orientation']:<13} exact = {row['enhancement_exact']:.4f}   "
            f"estimate = {row['enhancement_estimate']:.4f}   "
            f"diff = {100.0 * row['relative_difference']:.2f}%"
        )


@cli.command()
@click.option("--omega-a", "omega_a", type=float, default=1.0, show_default=True, help="omega_A / omega_S")
@click.option("--full", "include_full", is_flag=True, help="Also finite-difference the full potential")
@scenario_options
@tolerance_option
@click.pass_obj
@reports_errors
@log_execution
def force(system_config, omega_a, include_full, scenario_path, out_path, tol):
    """Resonant force on atom A at one omega_A, with gradient check."""
    scenario = _resolve_scenario(scenario_path, None, tol)
    medium = scenario.medium()
    atom_A = scenario.excited_atom(omega_a)
    atom_B = scenario.ground_atom(for_force=True)
    geom = scenario.force_geometry()

    result = resonant_force(atom_A, atom_B, geom, medium, omega_a)
    report = gradient_force_check(atom_A, atom_B, geom, medium, omega_a, include_full=include_full,
                                  quad=scenario_quadrature(scenario))

    if out_path:
        _emit_csv(pd.DataFrame([{
            "omega_A_rel": omega_a,
            "f_par_ratio": float(result.F_parallel[0]),
            "f_z_ratio": result.F_z,
            "f_z_surface_ratio": result.F_z_surface,
            "f_z_pair_ratio": result.F_z_pair,
            "normalization": result.normalization,
            "gradient_mismatch": report.relative_mismatch,
        }]), out_path)

    click.echo("=" * 60)
    click.echo(f"🧲 Resonant force on atom A at omega_A = {omega_a:g} omega_S")
    click.echo("=" * 60)
    # −0.0 → 0.0
    f_par, f_z, f_surface, f_pair = (v + 0.0 for v in (result.F_parallel[0], result.F_z, result.F_z_surface, result.F_z_pair))
    click.echo(f"  F_par/F0 = {f_par:+.6e}")
    click.echo(f"  F_z/F0   = {f_z:+.6e}  (surface {f_surface:+.6e}, pair {f_pair:+.6e})")
    click.echo(f"  F0       = {result.normalization:.6e}")
    click.echo(f"  ✅ gradient check mismatch = {report.relative_mismatch:.3e} (step {report.step:.1e})")
    if report.dropped_terms is not None:
        dropped = report.dropped_terms / result.normalization + 0.0
        click.echo(f"  dropped terms /F0 = ({dropped[0]:+.3e}, {dropped[1]:+.3e}, {dropped[2]:+.3e})")


def main():
    """메인 실행 함수"""
    cli(prog_name="surface-vdw")


if __name__ == "__main__":
    main()
