import unittest

import numpy as np
from scipy import special

from tsi_entanglement.model import ParameterError
from tsi_entanglement.dynamics import QuenchState
from tsi_entanglement.analysis import PairKind, ConcurrenceSeries, \
    concurrence_series, decay_exponent, time_grid, esd_times, witness, \
    witness_scan, static_concurrence_scan, death_time_scan, \
    environment_comparison, alpha_range, sweep, SweepSettings

N_K = 1024


def square(x):
    return x * x


class SeriesTests(unittest.TestCase):

    def test_time_grid(self):
        grid = time_grid(0, 1, 0.25)
        np.testing.assert_allclose(grid, [0, 0.25, 0.5, 0.75, 1.0])
        self.assertEqual(time_grid(0, 40, 0.01).size, 4001)
        with self.assertRaises(ParameterError):
            time_grid(1, 1, 0.1)
        with self.assertRaises(ParameterError):
            time_grid(0, 1, 0)
        with self.assertRaises(ParameterError):
            time_grid(-1, 1, 0.1)

    def test_bessel_limits(self):
        t = np.linspace(0, 10, 101)
        series = concurrence_series(PairKind.system,
                                    QuenchState.for_alpha(0.0, n_k=N_K),
                                    0, 10, 0.1)
        np.testing.assert_allclose(series.c_values,
                                   special.j0(t) ** 2 + special.j1(t) ** 2,
                                   atol=1e-10)
        pure = concurrence_series(PairKind.system,
                                  QuenchState.pure_tsi(n_k=N_K), 0, 10, 0.1)
        np.testing.assert_allclose(pure.c_values, special.j0(t / 2) ** 2,
                                   atol=1e-10)
        self.assertIsNone(pure.alpha)

    def test_pairs_at_start(self):
        state = QuenchState.for_alpha(1.0, n_k=N_K)
        for pair, expected in ((PairKind.system, 1.0), (PairKind.edge, 0.0),
                               (PairKind.environment, 0.0)):
            series = concurrence_series(pair, state, 0, 1, 0.5)
            self.assertAlmostEqual(series.c_values[0], expected, places=12)

    def test_bounded(self):
        series = concurrence_series(PairKind.edge,
                                    QuenchState.for_alpha(2.0, n_k=N_K),
                                    0, 20, 0.05)
        self.assertTrue(np.all(series.c_values >= 0))
        self.assertTrue(np.all(series.c_values <= 1 + 1e-12))

    def test_frame(self):
        series = concurrence_series(PairKind.system,
                                    QuenchState.for_alpha(1.0, n_k=N_K),
                                    0, 1, 0.5)
        frame = series.to_frame()
        self.assertEqual(list(frame.columns), ["t", "C_raw", "C"])
        self.assertEqual(len(frame), 3)

    def test_raw_at(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2], [1.0, 0.0, -1.0])
        self.assertAlmostEqual(series.raw_at(0.5), 0.5)
        np.testing.assert_array_equal(series.c_values, [1.0, 0.0, 0.0])
        with self.assertRaises(ParameterError):
            ConcurrenceSeries.from_raw([0, 1], [1.0])
        with self.assertRaises(ParameterError):
            ConcurrenceSeries.from_raw([0, 0], [1.0, 1.0])
        with self.assertRaises(ParameterError):
            ConcurrenceSeries.from_raw([0, 1, 3], [1.0, 0.5, 0.2])
        grid = time_grid(0, 40, 0.01)
        ConcurrenceSeries.from_raw(grid, np.ones_like(grid))

    def test_decay_exponent(self):
        series = concurrence_series(PairKind.system,
                                    QuenchState.for_alpha(0.0, n_k=N_K),
                                    0, 40, 0.05)
        self.assertAlmostEqual(series.c_values[-1], 0.01594, places=4)
        self.assertLess(abs(decay_exponent(series) + 1.0), 0.1)
        with self.assertRaises(ParameterError):
            decay_exponent(series, 50, 60)


class EsdTests(unittest.TestCase):

    def test_crossings(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2, 3, 4],
                                            [1, 0.5, -0.5, -0.2, 0.4])
        events = esd_times(series)
        self.assertEqual(len(events.death_times), 1)
        self.assertAlmostEqual(events.first_death, 1.5, places=3)
        self.assertAlmostEqual(events.first_revival, 3 + 1 / 3, places=3)

    def test_touching_zero(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2, 3, 4],
                                            [1, 0.3, 0.005, 0.4, 0.8])
        events = esd_times(series)
        self.assertEqual(events.death_times, [2.0])
        self.assertEqual(events.revival_times, [2.0])
        self.assertFalse(esd_times(series, zero_tol=0))

    def test_sampled_dip_above_threshold(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2, 3, 4],
                                            [1, 0.3, 0.015, 0.4, 0.8])
        self.assertFalse(esd_times(series))

    def test_touching_zero_between_samples(self):
        # grid minimum at t=4.36 has C ~ 0.015, the true zero is at 4.8097
        series = concurrence_series(PairKind.system,
                                    QuenchState.pure_tsi(n_k=N_K), 0.36,
                                    8.36, 1.0)
        self.assertGreater(series.c_values[4], 0.01)
        self.assertLess(series.c_values[4], 0.02)
        events = esd_times(series)
        self.assertAlmostEqual(events.first_death, 4.8097, delta=1e-3)
        self.assertAlmostEqual(events.first_revival, 4.8097, delta=1e-3)

    def test_death_at_end(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2, 3], [1, 0.5, 0.2, 0])
        events = esd_times(series)
        self.assertEqual(events.death_times, [3.0])
        self.assertEqual(events.revival_times, [])

    def test_start_at_zero(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2], [0, 0.3, 0.6])
        self.assertFalse(esd_times(series))

    def test_invalid_tolerances(self):
        series = ConcurrenceSeries.from_raw([0, 1, 2], [0, 0.3, 0.6])
        with self.assertRaises(ParameterError):
            esd_times(series, refine_tol=0)
        with self.assertRaises(ParameterError):
            esd_times(series, zero_tol=-1)

    def test_pure_tsi_death(self):
        series = concurrence_series(PairKind.system,
                                    QuenchState.pure_tsi(n_k=N_K), 0, 10,
                                    0.01)
        events = esd_times(series)
        self.assertAlmostEqual(events.first_death, 4.8097, delta=1e-3)
        self.assertAlmostEqual(events.first_revival, 4.8097, delta=1e-3)
        coarse = concurrence_series(PairKind.system,
                                    QuenchState.pure_tsi(n_k=N_K), 0, 10,
                                    0.05)
        self.assertAlmostEqual(esd_times(coarse).first_death,
                               events.first_death, delta=1e-3)

    def test_no_esd_without_tsi(self):
        series = concurrence_series(PairKind.system,
                                    QuenchState.for_alpha(0.0, n_k=N_K),
                                    0, 40, 0.01)
        self.assertFalse(esd_times(series))

    def test_death_times_shrink_with_alpha(self):
        frame = death_time_scan([1.2, 1.6, 2.0], 0, 20, 0.01, n_k=N_K)
        deaths = frame["t_r"].to_numpy()
        self.assertFalse(np.any(np.isnan(deaths)))
        self.assertTrue(np.all(np.diff(deaths) < 0))
        self.assertAlmostEqual(deaths[-1], 4.25, delta=0.01)


class WitnessTests(unittest.TestCase):

    def test_example(self):
        result = witness(ConcurrenceSeries.from_raw([0, 1, 2, 3],
                                                    [1, 0.5, 0.8, 0.3]))
        self.assertAlmostEqual(result.i_value, 0.6)
        self.assertAlmostEqual(result.delta_c, 0.7)
        self.assertFalse(result.is_markovian)

    def test_monotone(self):
        result = witness(ConcurrenceSeries.from_raw([0, 1, 2, 3],
                                                    [1, 0.8, 0.8, 0.1]))
        self.assertEqual(result.i_value, 0.0)
        self.assertTrue(result.is_markovian)

    def test_markovian_without_tsi(self):
        series = concurrence_series(PairKind.system,
                                    QuenchState.for_alpha(0.0, n_k=N_K),
                                    0, 40, 0.01)
        self.assertLess(witness(series).i_value, 1e-3)

    def test_grid_stability(self):
        state = QuenchState.pure_tsi(n_k=N_K)
        fine = witness(concurrence_series(PairKind.system, state, 0, 40,
                                          0.005))
        coarse = witness(concurrence_series(PairKind.system, state, 0, 40,
                                            0.01))
        self.assertGreater(fine.i_value, 0.1)
        self.assertLess(abs(fine.i_value - coarse.i_value), 1e-3)

    def test_scan(self):
        scan = witness_scan([0.5, 2.0, 1.5], 0, 40, 0.01, n_k=N_K)
        values = [r.i_value for r in scan]
        self.assertLess(values[0], 1e-3)
        self.assertGreater(values[1], values[2])
        self.assertGreater(values[2], 0.3)
        self.assertEqual(scan.onset, 1.5)
        frame = scan.to_frame()
        self.assertEqual(list(frame.columns), ["alpha", "I", "delta_c"])
        self.assertEqual(frame["alpha"].tolist(), [0.5, 2.0, 1.5])

    def test_no_onset(self):
        scan = witness_scan([0.0, 0.25], 0, 10, 0.05, n_k=N_K)
        self.assertIsNone(scan.onset)


class ScanTests(unittest.TestCase):

    def test_alpha_range(self):
        grid = alpha_range(0, 2.5, 0.02)
        self.assertEqual(grid.size, 126)
        self.assertEqual(grid[-1], 2.5)
        self.assertEqual(grid[41], 0.82)
        with self.assertRaises(ParameterError):
            alpha_range(1, 0, 0.1)
        with self.assertRaises(ParameterError):
            alpha_range(0, 1, 0)

    def test_sweep_order(self):
        self.assertEqual(sweep(square, [3, 1, 2]), [9, 1, 4])
        with self.assertRaises(ParameterError):
            sweep(square, [1], workers=0)

    def test_sweep_settings(self):
        settings = SweepSettings(phi=0.2, n_k=N_K)
        self.assertIsNone(settings.state(None).params.alpha)
        self.assertEqual(settings.state(1.5).params.alpha, 1.5)
        self.assertEqual(settings.state(1.5).phi, 0.2)

    def test_static_flat_at_start(self):
        scan = static_concurrence_scan([0.0, 1.0, 2.0], [0.0], n_k=N_K)
        self.assertTrue(scan.is_flat(0))
        self.assertIsNone(scan.argmax(0))
        self.assertIsNone(scan.alpha_c_estimate)
        np.testing.assert_allclose(scan.values[:, 0], 1.0, atol=1e-12)

    def test_static_peak(self):
        scan = static_concurrence_scan(alpha_range(0.8, 1.2, 0.02), [1.0],
                                       n_k=N_K)
        self.assertAlmostEqual(scan.argmax(0), 1.0, delta=0.05)
        self.assertAlmostEqual(scan.alpha_c_estimate, 1.0, delta=0.05)
        frame = scan.to_frame()
        self.assertEqual(list(frame.columns), ["alpha", "C(t=1)", "warning"])

    def test_static_beyond_death(self):
        scan = static_concurrence_scan([2.0], [3.0, 5.0], n_k=N_K)
        self.assertAlmostEqual(scan.first_death[0], 4.25, delta=0.01)
        np.testing.assert_array_equal(scan.beyond_death(), [[False, True]])
        self.assertIn("t=5", scan.to_frame()["warning"][0])

    def test_static_invalid(self):
        with self.assertRaises(ParameterError):
            static_concurrence_scan([1.0], [])
        with self.assertRaises(ParameterError):
            static_concurrence_scan([1.0], [-1.0])
        with self.assertRaises(ParameterError):
            static_concurrence_scan([], [1.0])

    def test_environment_comparison(self):
        comparison = environment_comparison(
            QuenchState.for_alpha(2.0, n_k=N_K), 0, 20, 0.01)
        system = comparison.events[PairKind.system]
        environment = comparison.events[PairKind.environment]
        self.assertAlmostEqual(system.first_death, 4.2505, delta=0.01)
        self.assertAlmostEqual(environment.first_death, 6.8295, delta=0.01)
        self.assertGreater(environment.first_death - system.first_death, 0.1)
        self.assertIsNotNone(comparison.gap)
        self.assertLess(abs(comparison.gap), 0.5)
        frame = comparison.to_frame()
        self.assertEqual(list(frame.columns),
                         ["t", "C_system", "C_edge", "C_environment"])
        self.assertAlmostEqual(frame["C_environment"][0], 0.0, places=12)

    def test_environment_without_esd(self):
        comparison = environment_comparison(
            QuenchState.for_alpha(0.5, n_k=N_K), 0, 40, 0.01)
        self.assertFalse(comparison.events[PairKind.environment])
        self.assertIsNone(comparison.gap)


if __name__ == '__main__':
    unittest.main()
