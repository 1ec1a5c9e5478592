"""
성능 모니터링 시스템
- 스윕/그림 생성 실행 시간 추적
- 메모리 사용량 (RSS) 변화
- 격자점 평가 횟수 집계
"""

import functools
import json
import threading
from collections import defaultdict, deque
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import psutil


@dataclass
class PerformanceMetric:
    """성능 지표 데이터 클래스"""
    function_name: str
    start_time: datetime
    end_time: Optional[datetime] = None
    execution_time: Optional[float] = None
    memory_before: Optional[float] = None
    memory_after: Optional[float] = None
    memory_delta: Optional[float] = None
    errors: List[str] = field(default_factory=list)

    def calculate_execution_time(self):
        if self.end_time and self.start_time:
            self.execution_time = (self.end_time - self.start_time).total_seconds()

    def calculate_memory_delta(self):
        if self.memory_before is not None and self.memory_after is not None:
            self.memory_delta = self.memory_after - self.memory_before


def _rss_megabytes() -> float:
    return psutil.Process().memory_info().rss / (1024 ** 2)


class PerformanceMonitor:
    """성능 모니터링 (스레드 안전)"""

    def __init__(self, max_history_size: int = 1000):
        self.metrics_history: deque = deque(maxlen=max_history_size)
        self.current_metrics: Dict[str, PerformanceMetric] = {}
        self.evaluation_counter = defaultdict(int)
        self.system_stats = {
            'startup_time': datetime.now(),
            'total_operations': 0,
            'total_evaluations': 0,
            'total_errors': 0,
        }
        self._lock = threading.Lock()
        self._sequence = 0

    def start_operation(self, function_name: str) -> str:
        """작업 시작"""
        metric = PerformanceMetric(
            function_name=function_name,
            start_time=datetime.now(),
            memory_before=_rss_megabytes(),
        )
        with self._lock:
            self._sequence += 1
            operation_id = f"{function_name}_{self._sequence}"
            self.current_metrics[operation_id] = metric
            self.system_stats['total_operations'] += 1
        return operation_id

    def end_operation(self, operation_id: str, error: Optional[str] = None) -> Optional[PerformanceMetric]:
        """작업 종료"""
        with self._lock:
            metric = self.current_metrics.pop(operation_id, None)
        if metric is None:
            return None

        metric.end_time = datetime.now()
        metric.calculate_execution_time()
        metric.memory_after = _rss_megabytes()
        metric.calculate_memory_delta()

        with self._lock:
            if error:
                metric.errors.append(error)
                self.system_stats['total_errors'] += 1
            self.metrics_history.append(metric)
        return metric

    def record_evaluations(self, quantity: str, count: int = 1):
        """격자점 평가 횟수 기록"""
        with self._lock:
            self.evaluation_counter[quantity] += count
            self.system_stats['total_evaluations'] += count

    def get_performance_summary(self) -> Dict[str, Any]:
        """성능 요약 통계"""
        with self._lock:
            metrics = list(self.metrics_history)
            evaluations = dict(self.evaluation_counter)
            stats = dict(self.system_stats)

        function_stats = defaultdict(list)
        for metric in metrics:
            function_stats[metric.function_name].append(metric)

        summary: Dict[str, Any] = {"total_operations": len(metrics), "functions": {}}
        for func_name, items in function_stats.items():
            times = [m.execution_time for m in items if m.execution_time is not None]
            deltas = [m.memory_delta for m in items if m.memory_delta is not None]
            error_count = sum(len(m.errors) for m in items)
            summary["functions"][func_name] = {
                "call_count": len(items),
                "avg_execution_time": sum(times) / len(times) if times else 0.0,
                "max_execution_time": max(times) if times else 0.0,
                "avg_memory_delta_mb": sum(deltas) / len(deltas) if deltas else 0.0,
                "error_count": error_count,
            }

        summary["evaluations"] = evaluations
        stats["uptime_seconds"] = (datetime.now() - stats['startup_time']).total_seconds()
        stats['startup_time'] = stats['startup_time'].isoformat()
        summary["system_stats"] = stats
        return summary

    def get_slow_operations(self, threshold_seconds: float = 5.0) -> List[Dict]:
        """느린 작업 식별"""
        with self._lock:
            metrics = list(self.metrics_history)

        slow_ops = [
            {
                "function_name": m.function_name,
                "execution_time": m.execution_time,
                "start_time": m.start_time.isoformat(),
                "errors": m.errors,
            }
            for m in metrics
            if m.execution_time and m.execution_time > threshold_seconds
        ]
        slow_ops.sort(key=lambda x: x["execution_time"], reverse=True)
        return slow_ops

    def save_performance_report(self, report_file: str) -> str:
        """성능 리포트 JSON 저장"""
        report = {
            "generated_at": datetime.now().isoformat(),
            "summary": self.get_performance_summary(),
            "slow_operations": self.get_slow_operations(),
        }
        path = Path(report_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(report, f, indent=2, ensure_ascii=False)
        return str(path)


# 글로벌 성능 모니터 인스턴스
performance_monitor = PerformanceMonitor()


def monitor_performance(func):
    """성능 모니터링 데코레이터"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        operation_id = performance_monitor.start_operation(func.__name__)
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            performance_monitor.end_operation(operation_id, str(e))
            raise
        performance_monitor.end_operation(operation_id)
        return result

    return wrapper
