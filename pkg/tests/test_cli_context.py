import os
import tempfile
import unittest

import yaml

from tsi_entanglement.model import ParameterError, DispersionConvention
from tsi_entanglement.analysis import PairKind
from tsi_entanglement.utils.context import Context, Argument, Cardinality
from tsi_entanglement.utils.config import RunConfig, Command
from tsi_entanglement.utils.io_utils import OutputFormat


class MadeUpContext(Context):
    _thing = Argument("thing",
                     help = "a thing",
                     default = "45")
    _numbers = Argument("numbers",
                        help = "some numbers",
                        type = float,
                        cardinality = Cardinality.multiple,
                        default = [1.0])

    def __init__(self):
        self.thing = None
        self.numbers = None
        super().__init__(MadeUpContext)

    def validate(self, attr, value):
        value = super().validate(attr, value)

        if attr == "thing":
            value = "thing"

        return value


class MyTestCase(unittest.TestCase):

    def test_default_context(self):
        context = Context(Context).instantiate([])
        self.assertIsNone(context.config)

    def test_custom_validate(self):
        context = MadeUpContext().instantiate([])

        self.assertEqual(context.thing, "thing")
        self.assertEqual(context.numbers, [1.0])

    def test_multiple(self):
        context = MadeUpContext().instantiate(["--numbers", "2", "3.5"])
        self.assertEqual(context.numbers, [2.0, 3.5])

    def test_usage_error(self):
        with self.assertRaises(ParameterError):
            MadeUpContext().instantiate(["--unknown"])


class RunConfigTests(unittest.TestCase):

    def test_defaults(self):
        config = RunConfig().instantiate(["series", "--alpha", "2"])
        self.assertEqual(config.command, Command.series)
        self.assertEqual(config.alpha, 2.0)
        self.assertFalse(config.pure_tsi)
        self.assertEqual(config.pair, PairKind.system)
        self.assertEqual(config.convention, DispersionConvention.fermionized)
        self.assertEqual(config.format, OutputFormat.csv)
        self.assertEqual((config.t0, config.tmax, config.dt), (0, 40, 0.01))
        self.assertEqual(config.nk, 4096)
        self.assertEqual(config.times, [1.0, 2.0, 3.0])
        self.assertIsNone(config.out)
        self.assertEqual(config.model_params().alpha, 2.0)

    def test_options(self):
        config = RunConfig().instantiate([
            "environment-compare", "--pure-tsi", "--pair", "edge",
            "--convention", "printed", "-o", "out.json", "--format", "json",
            "--nk", "1024", "--zero-tol", "0"
        ])
        self.assertEqual(config.command, Command.environment_compare)
        self.assertTrue(config.pure_tsi)
        self.assertIsNone(config.model_params().alpha)
        self.assertEqual(config.convention, DispersionConvention.printed)
        self.assertEqual(config.out, "out.json")
        self.assertEqual(config.format, OutputFormat.json)
        self.assertEqual(config.zero_tol, 0.0)
        self.assertEqual(config.metadata()["alpha"], "pure_tsi")

    def test_scan_grid(self):
        config = RunConfig().instantiate(["witness-scan", "--alpha-min", "1",
                                          "--alpha-max", "2",
                                          "--alpha-step", "0.5"])
        self.assertEqual(config.alpha_grid().tolist(), [1.0, 1.5, 2.0])

    def test_invalid(self):
        for argv in (["series"],
                     ["series", "--alpha", "1", "--pure-tsi"],
                     ["series", "--alpha", "1", "--nk", "63"],
                     ["series", "--alpha", "1", "--dt", "0"],
                     ["series", "--alpha", "1", "--tmax", "0"],
                     ["series", "--alpha", "one"],
                     ["witness-scan", "--alpha-min", "2", "--alpha-max",
                      "1"],
                     ["static-scan", "--times"],
                     ["static-scan", "--times", "-1"],
                     ["verify", "--ring", "12"],
                     ["dance"]):
            with self.assertRaises(ParameterError, msg=" ".join(argv)):
                RunConfig().instantiate(argv)

    def test_config_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "run.yml")
            with open(path, "w") as f:
                yaml.dump({"alpha": 1.5, "tmax": 3.0, "nk": 512}, f)
            config = RunConfig().instantiate(["series", "--config", path,
                                              "--tmax", "2"])
            self.assertEqual(config.alpha, 1.5)
            self.assertEqual(config.nk, 512)
            self.assertEqual(config.tmax, 2.0)

            with open(path, "w") as f:
                yaml.dump({"alpha": 1.5, "colour": "red"}, f)
            with self.assertRaises(ParameterError):
                RunConfig().instantiate(["series", "--config", path])

        with self.assertRaises(ParameterError):
            RunConfig().instantiate(["series", "--config",
                                     os.path.join(tmp, "missing.yml")])


if __name__ == '__main__':
    unittest.main()
