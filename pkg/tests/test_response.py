"""
계면 응답 테스트
- Fresnel 반사계수, 국소장 인자
- 공명 분해 (배경 + σ² 공명항)와 직접 계산의 일치
"""

import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
from media.dielectric import (
    HostModel, from_microscopic, from_observables, permittivity_at, permittivity_imag_axis,
)
from media.response import fresnel_r, local_field_factor, resonant_decomposition, sigma_sq_from_static_limits
from utils.logging_system import ResonanceSingularityError

SAPPHIRE_BACKGROUND = 0.4609164420
SAPPHIRE_SIGMA_SQ = 0.2748827654


class TestFresnel(unittest.TestCase):
    """준정적 반사계수"""

    def test_simple_values(self):
        self.assertAlmostEqual(complex(fresnel_r(1.0, 3.0)).real, 0.5, delta=1e-15)
        self.assertEqual(complex(fresnel_r(2.0, 2.0)), 0j)
        self.assertAlmostEqual(complex(fresnel_r(1.0, -3.0)).real, 2.0, delta=1e-15)

    def test_vectorized(self):
        values = fresnel_r(np.ones(4), np.array([1.0, 2.0, 3.0, 5.0]))
        np.testing.assert_allclose(values.real, [0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0], rtol=1e-15)

    def test_degenerate_pair(self):
        with self.assertRaises(ResonanceSingularityError):
            fresnel_r(1.0, -1.0)


class TestLocalField(unittest.TestCase):
    """Onsager 국소장 인자"""

    def test_vacuum(self):
        self.assertEqual(complex(local_field_factor(1.0)), 1.0 + 0j)

    def test_dense_host(self):
        self.assertAlmostEqual(complex(local_field_factor(2.0)).real, 1.44, delta=1e-14)

    def test_infinite_host(self):
        self.assertEqual(complex(local_field_factor(math.inf)), 2.25 + 0j)

    def test_pole(self):
        with self.assertRaises(ResonanceSingularityError):
            local_field_factor(-0.5)


class TestResonantDecomposition(unittest.TestCase):
    """반사계수 공명 분해"""

    def setUp(self):
        self.model = from_observables(2.71, 6.57, 1.0, 0.015)
        self.decomposition = resonant_decomposition(self.model)
        self.vacuum = HostModel.vacuum()

    def test_sapphire_constants(self):
        self.assertAlmostEqual(self.decomposition.background, SAPPHIRE_BACKGROUND, delta=1e-10)
        self.assertAlmostEqual(self.decomposition.sigma_sq, SAPPHIRE_SIGMA_SQ, delta=1e-10)
        self.assertAlmostEqual(self.decomposition.omega_S, 1.0, delta=1e-12)
        self.assertEqual(self.decomposition.Gamma, 0.015)

    def test_sigma_sq_matches_static_limits(self):
        self.assertAlmostEqual(self.decomposition.sigma_sq, sigma_sq_from_static_limits(self.model), delta=1e-13)

    def test_reflection_at_surface_mode(self):
        r = complex(self.decomposition.reflection(1.0))
        self.assertAlmostEqual(r.real, 0.460916, delta=1e-6)
        self.assertAlmostEqual(r.imag, 18.3255, delta=1e-4)
        self.assertAlmostEqual(abs(r) ** 2, 336.037, delta=1e-2)

    def test_identity_real_axis(self):
        omega = np.linspace(0.2, 2.0, 1000)
        direct = fresnel_r(self.vacuum.at(omega), permittivity_at(self.model, omega))
        reconstructed = self.decomposition.reflection(omega)
        self.assertLessEqual(np.max(np.abs(reconstructed - direct) / np.abs(direct)), 1e-12)

    def test_identity_imaginary_axis(self):
        xi = np.linspace(0.0, 5.0, 1000)
        direct = fresnel_r(self.vacuum.imag_axis(xi), permittivity_imag_axis(self.model, xi))
        reconstructed = self.decomposition.reflection(1j * xi)
        self.assertLessEqual(np.max(np.abs(reconstructed - direct) / np.abs(direct)), 1e-12)

    def test_metal_oscillator_strength(self):
        metal = from_microscopic(1.0, math.sqrt(2.0), 0.0, 0.01)
        decomposition = resonant_decomposition(metal)
        self.assertAlmostEqual(decomposition.sigma_sq, 1.0, delta=1e-14)
        self.assertEqual(decomposition.background, 0.0)
        self.assertAlmostEqual(sigma_sq_from_static_limits(metal), 1.0, delta=1e-14)


if __name__ == "__main__":
    unittest.main()
