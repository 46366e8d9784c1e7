import math
import unittest

import numpy as np

from tsi_entanglement.model import ModelParams, EnergyUnit, \
    DispersionConvention, ParameterError, validate_params, dispersion_eval, \
    Dispersion, momentum_grid, max_group_velocity


class ParamsTests(unittest.TestCase):

    def test_ratio_from_couplings(self):
        params = validate_params(ModelParams(j_nn=1.0, j_tsi=2.0))
        self.assertEqual(params.alpha, 2.0)
        self.assertEqual(params.energy_unit, EnergyUnit.j_unit)
        self.assertEqual(params.label, "2")

    def test_pure_tsi(self):
        params = validate_params(ModelParams(j_nn=0.0, j_tsi=1.0,
                                             pure_tsi=True))
        self.assertIsNone(params.alpha)
        self.assertEqual(params.energy_unit, EnergyUnit.jprime_unit)
        self.assertEqual(params.label, "pure_tsi")
        self.assertEqual(ModelParams.pure_tsi_limit(), params)

    def test_zero_j_without_flag(self):
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=0.0, j_tsi=1.0))

    def test_pure_tsi_needs_unit_jprime(self):
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=0.0, j_tsi=2.0, pure_tsi=True))
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=1.0, j_tsi=1.0, pure_tsi=True))

    def test_quadrature_resolution(self):
        for n_k in (32, 65, 0, -64, 100.5):
            with self.assertRaises(ParameterError):
                validate_params(ModelParams(n_k=n_k))
        self.assertEqual(validate_params(ModelParams(n_k=64)).n_k, 64)

    def test_unit_inference(self):
        params = validate_params(ModelParams(j_nn=2.0, j_tsi=1.0))
        self.assertEqual(params.energy_unit, EnergyUnit.jprime_unit)
        self.assertAlmostEqual(params.alpha, 0.5)
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=2.0, j_tsi=3.0))

    def test_unit_mismatch(self):
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=2.0, j_tsi=1.0,
                                        energy_unit=EnergyUnit.j_unit))
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=1.0, j_tsi=2.0,
                                        energy_unit=EnergyUnit.jprime_unit))

    def test_inconsistent_alpha(self):
        with self.assertRaises(ParameterError):
            validate_params(ModelParams(j_nn=1.0, j_tsi=2.0, alpha=1.9))
        params = validate_params(ModelParams(j_nn=1.0, j_tsi=2.0, alpha=2.0))
        self.assertEqual(params.alpha, 2.0)

    def test_negative_couplings_accepted(self):
        params = validate_params(ModelParams(j_nn=-1.0, j_tsi=0.5))
        self.assertAlmostEqual(params.alpha, -0.5)
        self.assertEqual(params.energy_unit, EnergyUnit.j_unit)
        params = ModelParams.from_alpha(-1.5)
        self.assertAlmostEqual(params.alpha, -1.5)

    def test_describe(self):
        d = ModelParams.from_alpha(1.0, n_k=128).describe()
        self.assertEqual(d["alpha"], "1")
        self.assertEqual(d["n_k"], 128)
        self.assertEqual(d["convention"], "fermionized")


class DispersionTests(unittest.TestCase):

    def test_printed_examples(self):
        printed = DispersionConvention.printed
        self.assertAlmostEqual(
            dispersion_eval(0.0, ModelParams.from_alpha(1.0, convention=printed)),
            1.5, places=14)
        self.assertAlmostEqual(
            dispersion_eval(math.pi, ModelParams.from_alpha(2.0,
                                                            convention=printed)),
            0.0, places=14)
        self.assertAlmostEqual(
            dispersion_eval(math.pi / 2,
                            ModelParams.from_alpha(1.0, convention=printed)),
            -0.5, places=14)

    def test_fermionized_sign(self):
        params = ModelParams.from_alpha(1.0)
        self.assertAlmostEqual(dispersion_eval(0.0, params), 0.5, places=14)
        self.assertAlmostEqual(dispersion_eval(math.pi / 2, params), 0.5,
                               places=14)

    def test_pure_tsi(self):
        for convention, sign in ((DispersionConvention.printed, 1.0),
                                 (DispersionConvention.fermionized, -1.0)):
            params = ModelParams.pure_tsi_limit(convention=convention)
            k = np.linspace(-3, 3, 7)
            np.testing.assert_allclose(dispersion_eval(k, params),
                                       sign * 0.5 * np.cos(2 * k), atol=1e-15)

    def test_periodic_and_even(self):
        params = ModelParams.from_alpha(1.7)
        k = np.linspace(-7.0, 7.0, 101)
        eps = Dispersion(params)
        np.testing.assert_allclose(eps(k), eps(k + 2 * np.pi), atol=1e-13)
        np.testing.assert_allclose(eps(k), eps(-k), atol=1e-13)

    def test_bound(self):
        for alpha in (0.0, 0.5, 1.0, 2.0, -3.0):
            params = ModelParams.from_alpha(alpha, n_k=256)
            values = Dispersion(params).on_grid()
            self.assertTrue(np.all(np.abs(values) <= 1 + abs(alpha) / 2
                                   + 1e-14))

    def test_grid(self):
        k = momentum_grid(64)
        self.assertEqual(k.size, 64)
        self.assertAlmostEqual(k[0], -math.pi)
        self.assertAlmostEqual(k[1] - k[0], 2 * math.pi / 64)
        self.assertLess(k[-1], math.pi)

    def test_light_cone_speed(self):
        self.assertEqual(max_group_velocity(ModelParams.from_alpha(2.0)), 3.0)
        self.assertEqual(max_group_velocity(ModelParams.pure_tsi_limit()), 1.0)

    def test_invalid_params(self):
        with self.assertRaises(ParameterError):
            dispersion_eval(0.0, ModelParams(j_nn=0.0, j_tsi=1.0))


if __name__ == '__main__':
    unittest.main()
