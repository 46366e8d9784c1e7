import json
import os
import tempfile
import unittest

import numpy as np
import pandas as pd

from tsi_entanglement.utils.cli import main, EXIT_OK, EXIT_PARAMETERS, \
    EXIT_IO, EXIT_VERIFICATION


class CliTests(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def read_metadata(self, path):
        with open(path) as f:
            return [line for line in f if line.startswith("#")]

    def test_series_csv(self):
        out = self.path("series.csv")
        code = main(["series", "--alpha", "0", "--tmax", "5", "--nk", "1024",
                     "--out", out])
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(out, comment="#")
        self.assertEqual(list(frame.columns), ["t", "C_raw", "C"])
        self.assertEqual(len(frame), 501)
        self.assertAlmostEqual(frame["C"].iloc[0], 1.0)
        self.assertAlmostEqual(frame["C"].iloc[-1], 0.138849, places=6)
        metadata = "".join(self.read_metadata(out))
        self.assertIn("# alpha: 0", metadata)
        self.assertIn("# n_k: 1024", metadata)
        self.assertIn("# death_times:", metadata)

    def test_pure_tsi_series_json(self):
        out = self.path("pure.json")
        code = main(["series", "--pure-tsi", "--tmax", "10", "--dt", "0.05",
                     "--nk", "1024", "--format", "json", "-o", out])
        self.assertEqual(code, EXIT_OK)
        with open(out) as f:
            data = json.load(f)
        self.assertEqual(data["metadata"]["alpha"], "pure_tsi")
        self.assertAlmostEqual(data["metadata"]["death_times"][0], 4.8097,
                               delta=1e-3)
        self.assertEqual(len(data["rows"]), 201)

    def test_witness_scan(self):
        out = self.path("scan.json")
        code = main(["witness-scan", "--alpha-min", "0", "--alpha-max", "0.5",
                     "--alpha-step", "0.25", "--tmax", "10", "--dt", "0.05",
                     "--nk", "512", "--format", "json", "--out", out])
        self.assertEqual(code, EXIT_OK)
        with open(out) as f:
            data = json.load(f)
        self.assertEqual(data["metadata"]["alpha_c_onset"], "not found")
        self.assertEqual([row["alpha"] for row in data["rows"]],
                         [0.0, 0.25, 0.5])

    def test_workers_do_not_change_output(self):
        outputs = []
        for workers in ("1", "2"):
            out = self.path("scan{}.csv".format(workers))
            code = main(["witness-scan", "--alpha-min", "1.5",
                         "--alpha-max", "2", "--alpha-step", "0.5",
                         "--tmax", "10", "--nk", "512", "--workers", workers,
                         "--out", out])
            self.assertEqual(code, EXIT_OK)
            with open(out) as f:
                outputs.append(f.read())
        self.assertEqual(outputs[0], outputs[1])

    def test_static_scan(self):
        out = self.path("static.csv")
        code = main(["static-scan", "--alpha-min", "1.8", "--alpha-max", "2",
                     "--alpha-step", "0.2", "--times", "3", "5", "--nk",
                     "512", "--out", out])
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(out, comment="#", keep_default_na=False)
        self.assertEqual(list(frame.columns),
                         ["alpha", "C(t=3)", "C(t=5)", "warning"])
        self.assertIn("t=5", frame["warning"].iloc[-1])

    def test_environment_compare(self):
        out = self.path("env.csv")
        code = main(["environment-compare", "--alpha", "2", "--tmax", "10",
                     "--nk", "512", "--out", out])
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(out, comment="#")
        self.assertEqual(list(frame.columns),
                         ["t", "C_system", "C_edge", "C_environment"])
        metadata = "".join(self.read_metadata(out))
        self.assertIn("# environment_death_times:", metadata)

    def test_invalid_parameters(self):
        self.assertEqual(main(["witness-scan", "--alpha-min", "1",
                               "--alpha-max", "0"]), EXIT_PARAMETERS)
        self.assertEqual(main(["series", "--alpha", "1", "--nk", "10"]),
                         EXIT_PARAMETERS)
        self.assertEqual(main(["static-scan", "--times"]), EXIT_PARAMETERS)

    def test_oracle_out_of_range(self):
        code = main(["verify", "--ring", "64", "--nk", "512", "--tmax", "40",
                     "--dt", "0.1", "--out", self.path("v.csv")])
        self.assertEqual(code, EXIT_PARAMETERS)

    def test_unwritable_output(self):
        out = os.path.join(self.tmp.name, "missing", "dir", "out.csv")
        code = main(["series", "--alpha", "1", "--tmax", "1", "--nk", "512",
                     "--out", out])
        self.assertEqual(code, EXIT_IO)

    def test_verify_pure_tsi(self):
        out = self.path("verify.csv")
        code = main(["verify", "--case", "pure_tsi", "--nk", "1024",
                     "--out", out])
        self.assertEqual(code, EXIT_OK)
        report = pd.read_csv(out, comment="#").set_index("check")
        self.assertLess(report.loc["bessel_pure_tsi", "observed"], 1e-6)
        self.assertTrue(np.isnan(report.loc["oracle_alpha_1", "observed"]))

    def test_verify_failure(self):
        code = main(["verify", "--nk", "64", "--ring", "512", "--tmax", "40",
                     "--dt", "0.2", "--out", self.path("verify.csv")])
        self.assertEqual(code, EXIT_VERIFICATION)


if __name__ == '__main__':
    unittest.main()
