"""
시스템 상태 검증 스크립트 테스트
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from pathlib import Path

PROJECT_ROOT = os.path.join(os.path.dirname(__file__), '..')
sys.path.insert(0, os.path.join(PROJECT_ROOT, 'src'))
sys.path.insert(0, PROJECT_ROOT)
from system_health_check import CHECKS, EXIT_CODES, check_system_health


class TestHealthCheck(unittest.TestCase):
    """전체 상태 검사"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_all_components_healthy(self):
        report_path = Path(self.temp_dir) / "health.json"
        status = check_system_health(report_path)
        self.assertEqual(status["overall_status"], "HEALTHY", status["components"])
        self.assertEqual(set(status["components"]), set(CHECKS))
        self.assertEqual(EXIT_CODES[status["overall_status"]], 0)

        with open(report_path, encoding="utf-8") as f:
            saved = json.load(f)
        self.assertEqual(saved["components"], status["components"])


if __name__ == "__main__":
    unittest.main()
