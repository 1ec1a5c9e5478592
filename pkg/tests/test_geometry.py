"""
원자쌍 배치와 Green 다이애딕 테스트
"""

import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
from geometry.green_dyadic import (
    PairGeometry, build_pair_geometry, direct_dyadic, image_dyadic, pair_trace_product, reduced_greens,
    scattered_trace_interface,
)
from utils.logging_system import GeometryError


class TestPairGeometry(unittest.TestCase):
    """배치 검증과 파생 거리"""

    def test_rejects_atoms_on_or_below_interface(self):
        with self.assertRaises(GeometryError):
            PairGeometry(z_A=0.0, z_B=1.0, R_par=1.0)
        with self.assertRaises(GeometryError):
            PairGeometry(z_A=1.0, z_B=-0.1, R_par=1.0)

    def test_rejects_coincident_atoms(self):
        with self.assertRaises(GeometryError):
            PairGeometry(z_A=0.5, z_B=0.5, R_par=0.0)

    def test_rejects_negative_parallel_distance(self):
        with self.assertRaises(GeometryError):
            PairGeometry(z_A=0.5, z_B=0.5, R_par=-1.0)

    def test_image_distance_identity(self):
        geom = PairGeometry(z_A=0.3, z_B=0.7, R_par=1.2)
        self.assertAlmostEqual(geom.R_prime ** 2, geom.R ** 2 + 4.0 * geom.z_A * geom.z_B, delta=1e-14)

    def test_from_positions_removes_azimuth(self):
        geom = PairGeometry.from_positions([0.3, 0.4, 0.2], [0.0, 0.0, 0.6])
        self.assertAlmostEqual(geom.R_par, 0.5, delta=1e-15)
        self.assertEqual((geom.z_A, geom.z_B), (0.2, 0.6))

    def test_swapped_and_scaled(self):
        geom = PairGeometry(z_A=0.2, z_B=0.6, R_par=0.5)
        swapped = geom.swapped()
        self.assertEqual((swapped.z_A, swapped.z_B, swapped.R_par), (0.6, 0.2, 0.5))
        scaled = geom.scaled(10.0)
        self.assertAlmostEqual(scaled.R, 10.0 * geom.R, delta=1e-13)
        self.assertAlmostEqual(scaled.R_prime, 10.0 * geom.R_prime, delta=1e-13)


class TestBuildPairGeometry(unittest.TestCase):
    """표준 배치"""

    def test_parallel(self):
        geom = build_pair_geometry(0.1, 1.0, "parallel")
        self.assertEqual((geom.z_A, geom.z_B, geom.R_par), (0.1, 0.1, 1.0))
        self.assertAlmostEqual(geom.R_prime ** 2, 1.04, delta=1e-14)

    def test_perpendicular_nearer_A(self):
        geom = build_pair_geometry(0.1, 1.0, "perpendicular")
        self.assertEqual((geom.z_A, geom.z_B, geom.R_par), (0.1, 1.1, 0.0))
        self.assertAlmostEqual(geom.R, 1.0, delta=1e-15)
        self.assertAlmostEqual(geom.R_prime, 1.2, delta=1e-15)

    def test_perpendicular_nearer_B(self):
        geom = build_pair_geometry(0.1, 1.0, "perpendicular", nearer="B")
        self.assertEqual((geom.z_A, geom.z_B), (1.1, 0.1))

    def test_invalid_arguments(self):
        with self.assertRaises(GeometryError):
            build_pair_geometry(0.1, 1.0, "diagonal")
        with self.assertRaises(GeometryError):
            build_pair_geometry(0.1, 0.0)
        with self.assertRaises(GeometryError):
            build_pair_geometry(0.1, 1.0, "perpendicular", nearer="C")


class TestDyadics(unittest.TestCase):
    """직접/영상 다이애딕"""

    def test_direct_dyadic_traceless_symmetric(self):
        tensor = direct_dyadic([0.3, -0.4, 1.2])
        self.assertAlmostEqual(np.trace(tensor), 0.0, delta=1e-13)
        np.testing.assert_allclose(tensor, tensor.T, atol=1e-15)

    def test_direct_dyadic_random_vectors(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            vector = rng.normal(size=3) * rng.uniform(0.1, 10.0)
            R = np.linalg.norm(vector)
            tensor = direct_dyadic(vector)
            self.assertAlmostEqual(np.trace(tensor), 0.0, delta=1e-12 * max(1.0, R ** -3))
            self.assertAlmostEqual(np.trace(tensor @ tensor), 6.0 / R ** 6, delta=1e-12 * 6.0 / R ** 6)

    def test_direct_dyadic_zero_separation(self):
        with self.assertRaises(GeometryError):
            direct_dyadic([0.0, 0.0, 0.0])

    def test_image_dyadic_on_normal(self):
        tensor = image_dyadic([0.0, 0.0, 2.0])
        np.testing.assert_allclose(tensor, np.diag([1.0, 1.0, 2.0]) / 8.0, atol=1e-15)

    def test_image_dyadic_in_plane(self):
        tensor = image_dyadic([2.0, 0.0, 0.0])
        np.testing.assert_allclose(tensor, np.diag([-2.0, 1.0, -1.0]) / 8.0, atol=1e-15)

    def test_reciprocity(self):
        geom = PairGeometry(z_A=0.2, z_B=0.5, R_par=0.7)
        r = 0.46 + 18.3j
        forward = reduced_greens(geom, r)
        backward = reduced_greens(geom, r, reverse=True)
        np.testing.assert_allclose(backward, forward.T, atol=1e-12)

    def test_free_space_trace_product(self):
        geom = PairGeometry(z_A=0.2, z_B=0.5, R_par=0.7)
        self.assertAlmostEqual(pair_trace_product(geom, 0.0), 6.0 / geom.R ** 6, delta=1e-10)

    def test_trace_product_perpendicular_closed_form(self):
        geom = build_pair_geometry(0.1, 1.0, "perpendicular")
        r = 0.5 + 2.0j
        R, Rp = geom.R, geom.R_prime
        expected = 6.0 / R ** 6 + 4.0 * r.real / (R ** 3 * Rp ** 3) + 6.0 * abs(r) ** 2 / Rp ** 6
        self.assertAlmostEqual(pair_trace_product(geom, r), expected, delta=1e-12 * expected)

    def test_trace_product_vectorized(self):
        geom = build_pair_geometry(0.1, 1.0)
        r = np.array([0.0, 0.5, 1.0 + 1.0j])
        values = pair_trace_product(geom, r)
        self.assertEqual(values.shape, (3,))
        for value, single in zip(values, r):
            self.assertAlmostEqual(value, pair_trace_product(geom, single), delta=1e-12 * abs(value))

    def test_scattered_trace_interface(self):
        self.assertAlmostEqual(scattered_trace_interface(0.1, 1.0), 500.0, delta=1e-10)
        with self.assertRaises(GeometryError):
            scattered_trace_interface(0.0, 1.0)


if __name__ == "__main__":
    unittest.main()
