"""
매질 모델 테스트
- 관측량 <-> 미시 파라미터 변환
- 실수/허수 주파수 유전율
- 호스트 모델
"""

import math
import os
import random
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
from media.dielectric import (
    HostModel, MediumModel, forward_observables, from_microscopic, from_observables, permittivity_at,
    permittivity_imag_axis, static_permittivity, static_reflection_limit, surface_mode_frequency,
)
from utils.logging_system import ParameterError


class TestFromObservables(unittest.TestCase):
    """사파이어 관측량으로부터 매질 생성"""

    def setUp(self):
        self.model = from_observables(2.71, 6.57, 1.0, 0.015)

    def test_transverse_frequency(self):
        expected = math.sqrt(1.0 / (1.0 + 2.71 * (6.57 / 2.71 - 1.0) / 3.71))
        self.assertAlmostEqual(self.model.omega_T, expected, delta=1e-14)
        self.assertAlmostEqual(self.model.omega_T, 0.70006, delta=1e-4)

    def test_surface_mode_is_reference_frequency(self):
        self.assertAlmostEqual(surface_mode_frequency(self.model), 1.0, delta=1e-12)

    def test_static_permittivity_recovered(self):
        self.assertAlmostEqual(static_permittivity(self.model), 6.57, delta=1e-12)

    def test_forward_observables_round_trip(self):
        eta, eps0, omega_S, Gamma = forward_observables(self.model)
        rebuilt = from_observables(eta, eps0, omega_S, Gamma)
        self.assertAlmostEqual(rebuilt.omega_P, self.model.omega_P, delta=1e-13)
        self.assertAlmostEqual(rebuilt.omega_T, self.model.omega_T, delta=1e-13)
        self.assertEqual(rebuilt.Gamma, self.model.Gamma)

    def test_randomized_round_trip(self):
        rng = random.Random(7)
        for _ in range(200):
            eta = rng.uniform(1.0, 5.0)
            observables = (eta, eta + rng.uniform(0.01, 20.0), rng.uniform(0.1, 10.0), rng.uniform(1e-4, 1.0))
            recovered = forward_observables(from_observables(*observables))
            for given, back in zip(observables, recovered):
                self.assertAlmostEqual(back, given, delta=1e-12 * max(1.0, abs(given)))

    def test_simple_example(self):
        model = from_observables(1.0, 3.0, 1.0, 0.1)
        self.assertAlmostEqual(model.omega_T ** 2, 0.5, delta=1e-14)
        self.assertAlmostEqual(model.omega_P ** 2, 1.0, delta=1e-14)

    def test_permittivity_minus_one_at_surface_mode(self):
        lossless = from_observables(2.71, 6.57, 1.0, 1e-9)
        self.assertAlmostEqual(complex(permittivity_at(lossless, 1.0)).real, -1.0, delta=1e-6)

    def test_rejects_missing_oscillator_strength(self):
        with self.assertRaises(ParameterError):
            from_observables(2.71, 2.71, 1.0, 0.015)
        with self.assertRaises(ParameterError):
            from_observables(2.71, 2.0, 1.0, 0.015)

    def test_rejects_non_positive_inputs(self):
        with self.assertRaises(ParameterError):
            from_observables(2.71, 6.57, 1.0, 0.0)
        with self.assertRaises(ParameterError):
            from_observables(2.71, 6.57, -1.0, 0.015)


class TestMediumModel(unittest.TestCase):
    """매질 파라미터 검증과 금속 극한"""

    def test_validation(self):
        with self.assertRaises(ParameterError):
            MediumModel(eta=0.5, omega_P=1.0, omega_T=1.0, Gamma=0.1)
        with self.assertRaises(ParameterError):
            MediumModel(eta=1.0, omega_P=1.0, omega_T=1.0, Gamma=0.0)
        with self.assertRaises(ParameterError):
            MediumModel(eta=1.0, omega_P=float('nan'), omega_T=1.0, Gamma=0.1)

    def test_metal_limit(self):
        metal = from_microscopic(1.0, math.sqrt(2.0), 0.0, 0.01)
        self.assertTrue(metal.is_metal)
        self.assertTrue(math.isinf(static_permittivity(metal)))
        self.assertEqual(static_reflection_limit(metal), 1.0)
        self.assertAlmostEqual(surface_mode_frequency(metal), 1.0, delta=1e-14)

    def test_featureless_medium(self):
        flat = from_microscopic(2.0, 0.0, 1.0, 0.01)
        self.assertFalse(flat.is_metal)
        self.assertEqual(static_permittivity(flat), 2.0)
        self.assertAlmostEqual(complex(permittivity_at(flat, 0.7)).real, 2.0, delta=1e-15)

    def test_no_oscillator_at_zero_frequency_is_not_metal(self):
        # ω_T = 0 이지만 ω_P = 0 → 배경 유전율만 남음
        flat = from_microscopic(2.0, 0.0, 0.0, 0.01)
        self.assertFalse(flat.is_metal)
        self.assertEqual(static_permittivity(flat), 2.0)
        self.assertAlmostEqual(static_reflection_limit(flat), 1.0 / 3.0, delta=1e-15)

    def test_surface_mode_identity(self):
        rng = random.Random(11)
        for _ in range(100):
            eta = rng.uniform(1.0, 5.0)
            omega_P = rng.uniform(0.0, 3.0)
            omega_T = rng.choice([0.0, rng.uniform(0.0, 3.0)])
            model = from_microscopic(eta, omega_P, omega_T, 0.01)
            omega_S_sq = surface_mode_frequency(model) ** 2
            self.assertAlmostEqual(omega_S_sq - omega_T ** 2, eta * omega_P ** 2 / (eta + 1.0),
                                   delta=1e-14 * max(1.0, omega_S_sq))

    def test_passivity(self):
        rng = random.Random(3)
        omega = np.linspace(1e-3, 10.0, 2001)
        models = [from_observables(2.71, 6.57, 1.0, 0.015), from_microscopic(1.0, math.sqrt(2.0), 0.0, 0.01)]
        for _ in range(20):
            eta = rng.uniform(1.0, 5.0)
            models.append(from_observables(eta, eta + rng.uniform(0.01, 20.0), rng.uniform(0.1, 5.0),
                                           rng.uniform(1e-4, 0.5)))
        for model in models:
            self.assertTrue(np.all(np.imag(permittivity_at(model, omega)) > 0.0), model)


class TestPermittivity(unittest.TestCase):
    """유전율 벡터 연산과 허수축"""

    def setUp(self):
        self.model = from_observables(2.71, 6.57, 1.0, 0.015)

    def test_vectorized_shape(self):
        omega = np.linspace(0.2, 2.0, 17)
        values = permittivity_at(self.model, omega)
        self.assertEqual(values.shape, (17,))
        self.assertTrue(np.iscomplexobj(values))

    def test_scalar_returns_scalar(self):
        self.assertIsInstance(complex(permittivity_at(self.model, 0.5)), complex)
        self.assertEqual(np.ndim(permittivity_at(self.model, 0.5)), 0)

    def test_imaginary_axis_monotone(self):
        xi = np.linspace(0.0, 50.0, 200)
        values = permittivity_imag_axis(self.model, xi)
        self.assertAlmostEqual(values[0], 6.57, delta=1e-12)
        self.assertTrue(np.all(np.diff(values) < 0))
        self.assertTrue(np.all(values > 2.71))

    def test_imaginary_axis_matches_complex_evaluation(self):
        xi = np.array([0.1, 0.5, 2.0])
        direct = permittivity_at(self.model, 1j * xi)
        np.testing.assert_allclose(permittivity_imag_axis(self.model, xi), direct.real, rtol=1e-14)
        np.testing.assert_allclose(direct.imag, 0.0, atol=1e-14)

    def test_negative_imaginary_frequency_rejected(self):
        with self.assertRaises(ParameterError):
            permittivity_imag_axis(self.model, -0.1)


class TestHostModel(unittest.TestCase):
    """호스트 매질"""

    def test_vacuum_is_exactly_one(self):
        vacuum = HostModel.vacuum()
        self.assertTrue(vacuum.is_vacuum)
        self.assertEqual(complex(vacuum.at(0.9)), 1.0 + 0.0j)
        np.testing.assert_array_equal(vacuum.imag_axis(np.array([0.0, 1.0, 5.0])), np.ones(3))

    def test_constant_host(self):
        host = HostModel.constant(2.25)
        self.assertFalse(host.is_vacuum)
        np.testing.assert_array_equal(host.at(np.array([0.5, 1.5])), np.full(2, 2.25 + 0j))
        self.assertEqual(float(host.imag_axis(3.0)), 2.25)

    def test_lorentz_host_follows_model(self):
        model = from_observables(2.71, 6.57, 1.0, 0.015)
        host = HostModel.lorentz(model)
        self.assertEqual(complex(host.at(0.8)), complex(permittivity_at(model, 0.8)))
        self.assertAlmostEqual(float(host.imag_axis(0.0)), 6.57, delta=1e-12)


if __name__ == "__main__":
    unittest.main()
