"""
로깅 및 에러 처리 시스템
- 구조화된 로깅 (colorlog 콘솔 + 선택적 일별 파일)
- 도메인 예외 계층 (error_code, details)
- 실행 추적 데코레이터
"""

import functools
import logging
import os
import sys
import traceback
from datetime import datetime
from typing import Any, Callable, Dict, Optional

import colorlog


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class SurfaceVdwLogger:
    """표면 증강 van der Waals 계산 전용 로거"""

    def __init__(self, name: str = "SurfaceVdw", level: str = "INFO", log_dir: Optional[str] = None):
        self.logger = logging.getLogger(name)
        self.logger.propagate = False
        self.configure(level, log_dir)

    def configure(self, level: str = "INFO", log_dir: Optional[str] = None):
        """로깅 설정 (재호출 시 핸들러 교체)"""
        numeric_level = getattr(logging, str(level).upper(), logging.INFO)
        self.logger.setLevel(numeric_level)

        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        # 콘솔 핸들러: CSV가 stdout으로 나갈 수 있으므로 stderr 사용
        console_handler = colorlog.StreamHandler(sys.stderr)
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(colorlog.ColoredFormatter(
            '%(log_color)s' + LOG_FORMAT,
            datefmt=DATE_FORMAT,
            log_colors={
                'DEBUG': 'cyan',
                'INFO': 'green',
                'WARNING': 'yellow',
                'ERROR': 'red',
                'CRITICAL': 'red,bg_white',
            },
        ))
        self.logger.addHandler(console_handler)

        # 파일 핸들러 (일별 로그)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
            today = datetime.now().strftime("%Y%m%d")
            file_handler = logging.FileHandler(
                os.path.join(log_dir, f"surface_vdw_{today}.log"), encoding='utf-8'
            )
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
            self.logger.addHandler(file_handler)

    @staticmethod
    def _compose(message: str, extra_data: Optional[Dict] = None) -> str:
        if extra_data:
            return f"{message} | Data: {extra_data}"
        return message

    def debug(self, message: str, extra_data: Optional[Dict] = None):
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(self._compose(message, extra_data), stacklevel=2)

    def info(self, message: str, extra_data: Optional[Dict] = None):
        self.logger.info(self._compose(message, extra_data), stacklevel=2)

    def warning(self, message: str, extra_data: Optional[Dict] = None):
        self.logger.warning(self._compose(message, extra_data), stacklevel=2)

    def error(self, message: str, error: Exception = None, extra_data: Optional[Dict] = None):
        """에러 로그 (스택 트레이스 포함)"""
        log_message = message
        if error:
            log_message += f" | Error: {error}"
        self.logger.error(self._compose(log_message, extra_data), stacklevel=2)

        if error and error.__traceback__ is not None:
            stack = ''.join(traceback.format_exception(type(error), error, error.__traceback__))
            self.logger.debug(f"Stack trace: {stack}")

    def success(self, message: str, extra_data: Optional[Dict] = None):
        self.logger.info(self._compose(f"✅ SUCCESS: {message}", extra_data), stacklevel=2)


# 글로벌 로거 인스턴스
system_logger = SurfaceVdwLogger()


def log_execution(func: Callable) -> Callable:
    """함수 실행을 로깅하는 데코레이터"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = datetime.now()
        function_name = func.__name__

        try:
            system_logger.debug(f"🚀 Starting {function_name}")
            result = func(*args, **kwargs)

            execution_time = (datetime.now() - start_time).total_seconds()
            system_logger.success(
                f"Completed {function_name}",
                {"execution_time_seconds": execution_time}
            )
            return result

        except SurfaceVdwError as e:
            # 호출자가 한 줄 진단으로 보고
            execution_time = (datetime.now() - start_time).total_seconds()
            system_logger.debug(
                f"Failed {function_name}",
                {"error_code": e.error_code, "execution_time_seconds": execution_time}
            )
            raise

        except Exception as e:
            execution_time = (datetime.now() - start_time).total_seconds()
            system_logger.error(
                f"Failed {function_name}",
                error=e,
                extra_data={"execution_time_seconds": execution_time}
            )
            raise

    return wrapper


class SurfaceVdwError(Exception):
    """계산 시스템 공통 예외"""

    default_code = "UNKNOWN"

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict] = None):
        self.message = message
        self.error_code = error_code or self.default_code
        self.details = details or {}
        super().__init__(self.message)


class ParameterError(SurfaceVdwError, ValueError):
    """매질/원자/적분 파라미터 오류"""
    default_code = "PARAMETER_INVALID"


class GeometryError(SurfaceVdwError, ValueError):
    """원자 배치 오류 (계면 아래, 원자 겹침 등)"""
    default_code = "GEOMETRY_INVALID"


class ResonanceSingularityError(SurfaceVdwError, ArithmeticError):
    """공명 극점 위에서의 평가"""
    default_code = "RESONANCE_POLE"


class QuadratureError(SurfaceVdwError, ArithmeticError):
    """허수축 적분 수렴 실패"""
    default_code = "QUADRATURE_NOT_CONVERGED"


class IllConditionedError(SurfaceVdwError, ArithmeticError):
    """유한차분 스텝이 너무 작아 상쇄 오차가 지배적"""
    default_code = "STEP_ILL_CONDITIONED"


class ScenarioError(SurfaceVdwError, ValueError):
    """시나리오 파일 파싱/검증 오류"""
    default_code = "SCENARIO_INVALID"


class SweepPointError(SurfaceVdwError):
    """스윕 격자점 하나의 평가 실패"""
    default_code = "SWEEP_POINT_FAILED"


class OutputError(SurfaceVdwError):
    """결과 파일 쓰기 실패"""
    default_code = "OUTPUT_WRITE_FAILED"


class ConfigError(SurfaceVdwError):
    """설정 파일 관련 에러"""
    default_code = "CONFIG_INVALID"


def safe_execute(func: Callable, default_return: Any = None, error_message: str = "Operation failed"):
    """안전한 함수 실행 (에러 시 기본값 반환)"""
    try:
        return func()
    except Exception as e:
        system_logger.error(error_message, error=e)
        return default_return
