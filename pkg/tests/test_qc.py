import os
import unittest

import numpy as np
import pandas as pd

import tsi_entanglement.qc
from tsi_entanglement.qc import Check, Condition, Severity, \
    ExpectationError, VerificationSettings, VerifyCase, \
    build_verification_frame

CHECK_LIST = os.path.join(os.path.dirname(__file__), "test_data",
                          "test_list.yml")


class QCTests(unittest.TestCase):

    def test_tests(self):
        df = pd.DataFrame({"x": [a for a in range(100)],
                           "oracle": [1e-12 for a in range(100)],
                           "z": [np.nan for a in range(100)],
                           "w": [1 for a in range(100)],
                           "x_plus": [-1e-14 for a in range(100)]})
        tester = tsi_entanglement.qc.Tester("test", yaml_file=CHECK_LIST)
        self.assertEqual(len(tester.checks), 5)
        self.assertFalse(tester.check(df))

        df["x"] = 70
        self.assertTrue(tester.check(df))

        df["x_plus"] = 1e-9
        self.assertFalse(tester.check(df))

    def test_missing_column(self):
        tester = tsi_entanglement.qc.Tester("test", yaml_file=CHECK_LIST)
        df = pd.DataFrame({"x": [70.0], "w": [1.0], "x_plus": [0.0]})
        self.assertFalse(tester.check(df))

    def test_report(self):
        tester = tsi_entanglement.qc.Tester("test", yaml_file=CHECK_LIST)
        df = pd.DataFrame({"x": [70.0, 75.0], "oracle": [1e-6, 1e-12],
                           "z": [np.nan, np.nan], "w": [1.0, 1.0],
                           "x_plus": [0.0, 0.0]})
        report = tester.report(df).set_index("check")
        self.assertEqual(report.loc["test_1", "observed"], 70.0)
        self.assertFalse(report.loc["oracle_less_than_1e-08", "passed"])
        self.assertTrue(report.loc["skipped_reference", "passed"])

    def test_invalid_checks(self):
        with self.assertRaises(ExpectationError):
            Check("x", Condition.less_than, Severity.error)
        with self.assertRaises(ExpectationError):
            Check("x", Condition.abs_less_than, Severity.error, val=-1)
        with self.assertRaises(ExpectationError):
            Check("x", Condition.less_than, Severity.error, val="small")
        check = Check("x", Condition.no_missing, Severity.info)
        self.assertEqual(check.name, "x_no_missing")

    def test_default_checks(self):
        tester = tsi_entanglement.qc.Tester.default()
        passing = pd.DataFrame([{c.variable: 0.0 for c in tester.checks}])
        self.assertTrue(tester.check(passing))
        failing = passing.copy()
        failing["oracle_alpha_1"] = 1e-6
        self.assertFalse(tester.check(failing))

    def test_convergence_tolerance(self):
        tester = tsi_entanglement.qc.Tester.default()
        df = pd.DataFrame([{c.variable: 0.0 for c in tester.checks}])
        df["convergence"] = 1.2e-15
        self.assertTrue(tester.check(df))
        df["convergence"] = 5e-9
        self.assertFalse(tester.check(df))

    def test_verification_frame(self):
        settings = VerificationSettings(case=VerifyCase.alpha_zero,
                                        n_k=1024, t_max=10.0)
        df = build_verification_frame(settings)
        self.assertEqual(len(df), 1)
        self.assertLess(df["bessel_alpha_zero"][0], 1e-6)
        self.assertTrue(np.isnan(df["oracle_alpha_2"][0]))
        self.assertTrue(tsi_entanglement.qc.Tester.default().check(df))


if __name__ == '__main__':
    unittest.main()
