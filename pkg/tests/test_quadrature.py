"""
반무한 구간 적분 테스트
"""

import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
from analysis.quadrature import QuadratureSpec, halfline_integral
from utils.logging_system import ParameterError, QuadratureError

TIGHT = QuadratureSpec(rel_tol=1e-12)


class TestHalflineIntegral(unittest.TestCase):
    """닫힌 형식 적분과 비교"""

    def test_product_of_lorentzians(self):
        for a in (0.3, 1.0, 3.0):
            for b in (0.3, 1.0, 3.0):
                with self.subTest(a=a, b=b):
                    value = halfline_integral(lambda xi: 1.0 / ((a * a + xi * xi) * (b * b + xi * xi)), TIGHT)
                    expected = math.pi / (2.0 * a * b * (a + b))
                    self.assertAlmostEqual(value, expected, delta=1e-10 * expected)

    def test_exponential(self):
        self.assertAlmostEqual(halfline_integral(lambda xi: np.exp(-xi), TIGHT), 1.0, delta=1e-11)

    def test_zero_integrand(self):
        self.assertEqual(halfline_integral(lambda xi: np.zeros_like(xi)), 0.0)

    def test_scale_follows_integrand(self):
        value = halfline_integral(lambda xi: np.exp(-xi / 50.0), TIGHT, scale=50.0)
        self.assertAlmostEqual(value, 50.0, delta=1e-9)

    def test_invalid_scale(self):
        with self.assertRaises(ParameterError):
            halfline_integral(lambda xi: np.exp(-xi), scale=0.0)

    def test_divergent_integrand_reports_estimates(self):
        with self.assertRaises(QuadratureError) as ctx:
            halfline_integral(lambda xi: 1.0 / (1.0 + xi), QuadratureSpec(max_doublings=3))
        details = ctx.exception.details
        self.assertEqual(ctx.exception.error_code, "QUADRATURE_NOT_CONVERGED")
        self.assertNotEqual(details["last_estimate"], details["previous_estimate"])


class TestQuadratureSpec(unittest.TestCase):
    """적분 설정 검증"""

    def test_defaults(self):
        spec = QuadratureSpec()
        self.assertEqual((spec.rel_tol, spec.max_doublings, spec.base_nodes), (1e-9, 16, 32))

    def test_invalid_values(self):
        with self.assertRaises(ParameterError):
            QuadratureSpec(rel_tol=0.0)
        with self.assertRaises(ParameterError):
            QuadratureSpec(base_nodes=4)
        with self.assertRaises(ParameterError):
            QuadratureSpec(max_doublings=0)


if __name__ == "__main__":
    unittest.main()
