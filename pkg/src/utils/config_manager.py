"""
시스템 설정 및 환경 변수 관리
- 환경별 설정 분리 (development / production)
- 적분 허용오차, 스윕 병렬도, 로그 레벨
- 설정 검증
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from utils.logging_system import ConfigError

load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parents[2]

DEFAULT_ENV_CONFIGS: Dict[str, Dict[str, Any]] = {
    "development.yaml": {
        "quadrature": {
            "rel_tol": 1.0e-9,
            "base_nodes": 32,
            "max_doublings": 16,
        },
        "system": {
            "debug_mode": True,
            "log_level": "DEBUG",
            "max_workers": 2,
        },
    },
    "production.yaml": {
        "quadrature": {
            "rel_tol": 1.0e-9,
            "base_nodes": 32,
            "max_doublings": 16,
        },
        "system": {
            "debug_mode": False,
            "log_level": "INFO",
            "max_workers": 8,
        },
    },
}


@dataclass
class QuadratureConfig:
    """허수축 적분 설정"""
    rel_tol: float = 1.0e-9
    base_nodes: int = 32
    max_doublings: int = 16


@dataclass
class SystemConfig:
    """전체 시스템 설정"""
    debug_mode: bool = False
    log_level: str = "INFO"
    max_workers: int = 4
    log_dir: Optional[str] = None


class ConfigManager:
    """설정 관리자"""

    def __init__(self, base_path: Optional[Path] = None):
        self.base_path = Path(base_path) if base_path else PROJECT_ROOT
        override = os.getenv("VDW_CONFIG_DIR")
        self.config_path = Path(override) if override else self.base_path / "config"
        self.active_environment: Optional[str] = None
        self.ensure_config_directory()

    def ensure_config_directory(self):
        """설정 디렉토리 확인/생성 (없는 기본 파일만 작성)"""
        self.config_path.mkdir(parents=True, exist_ok=True)

        for filename, config_data in DEFAULT_ENV_CONFIGS.items():
            config_file = self.config_path / filename
            if not config_file.exists():
                with open(config_file, 'w', encoding='utf-8') as f:
                    yaml.safe_dump(config_data, f, allow_unicode=True, default_flow_style=False)

    def use_environment(self, environment: Optional[str]):
        """CLI --env 로 지정된 환경 고정 (None 이면 VDW_ENV 사용)"""
        self.active_environment = environment

    def current_environment(self) -> str:
        return self.active_environment or os.getenv("VDW_ENV", "development")

    def load_config(self, environment: Optional[str] = None) -> Dict[str, Any]:
        """환경별 설정 로드"""
        environment = environment or self.current_environment()
        config_file = self.config_path / f"{environment}.yaml"

        if not config_file.exists():
            raise ConfigError(
                f"Config file not found: {config_file}",
                "CONFIG_NOT_FOUND",
                {"environment": environment},
            )

        with open(config_file, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ConfigError(f"Config file is not a mapping: {config_file}")
        return data

    def get_quadrature_config(self, environment: Optional[str] = None) -> QuadratureConfig:
        """적분 설정 가져오기"""
        section = self.load_config(environment).get("quadrature", {}) or {}

        try:
            config = QuadratureConfig(
                rel_tol=float(section.get("rel_tol", 1.0e-9)),
                base_nodes=int(section.get("base_nodes", 32)),
                max_doublings=int(section.get("max_doublings", 16)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid quadrature section: {e}") from e

        if config.rel_tol <= 0 or config.base_nodes < 8 or config.max_doublings < 1:
            raise ConfigError("Quadrature settings out of range", details=section)
        return config

    def get_system_config(self, environment: Optional[str] = None) -> SystemConfig:
        """시스템 설정 가져오기 (VDW_LOG_LEVEL 환경 변수 우선)

        log_level 이 없으면 debug_mode 에 따라 DEBUG / INFO.
        """
        section = self.load_config(environment).get("system", {}) or {}
        debug_mode = bool(section.get("debug_mode", False))
        default_level = "DEBUG" if debug_mode else "INFO"

        return SystemConfig(
            debug_mode=debug_mode,
            log_level=os.getenv("VDW_LOG_LEVEL", section.get("log_level", default_level)),
            max_workers=max(1, int(section.get("max_workers", 4))),
            log_dir=section.get("log_dir"),
        )

    def validate_environment(self) -> Dict[str, bool]:
        """환경 설정 검증"""
        validation_results = {}

        for config_file in DEFAULT_ENV_CONFIGS:
            file_path = self.config_path / config_file
            validation_results[f"config_{config_file}"] = file_path.exists()

        try:
            self.get_quadrature_config()
            self.get_system_config()
            validation_results["config_parsable"] = True
        except ConfigError:
            validation_results["config_parsable"] = False

        # 로그 디렉토리는 선택 사항 (설정된 경우만 쓰기 권한 확인)
        log_dir = self.get_system_config().log_dir if validation_results["config_parsable"] else None
        if log_dir is None:
            validation_results["log_directory"] = True
        else:
            target = Path(log_dir)
            while not target.exists():
                target = target.parent
            validation_results["log_directory"] = os.access(target, os.W_OK)

        return validation_results


# 글로벌 설정 매니저
config_manager = ConfigManager()
