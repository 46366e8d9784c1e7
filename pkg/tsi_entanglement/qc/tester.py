"""
Generic object for checking numerical deviations against tolerances.

Tester class contains a list of checks to run on a frame of deviations.
Checks contain a variable (column) name, a condition, a tolerance and a
severity; a failed check is logged at its severity.
"""

#  Copyright (c) 2026. The tsi_entanglement authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

from enum import Enum
import os
import pandas as pd
import numpy as np
import yaml
import logging


DEFAULT_CHECKS = os.path.join(os.path.dirname(__file__), "verify.yml")


class Condition(Enum):

    less_than = "lt"
    greater_than = "gt"
    abs_less_than = "abs_lt"
    no_missing = "no_nan"


class Severity(Enum):

    debug = logging.DEBUG
    info = logging.INFO
    warning = logging.WARNING
    error = logging.ERROR
    critical = logging.CRITICAL


class ExpectationError(Exception):
    """
    Error for when an expected value to a condition cannot be valid
    """
    pass


class Check:

    def __init__(self, variable, condition, severity, val=None, name=None,
                 logger=None):
        self.variable = variable
        self.condition = condition
        self.val = val
        """
        Tolerance to compare against, can be excluded for a ``no_missing``
        check
        """
        self.severity = severity
        self.name = name

        if not name:
            self.name = self.variable + "_" + self.condition.value
            if self.val is not None:
                self.name += "_" + str(self.val)

        if logger:
            self.__logger = logger
        else:
            self.__logger = logging.getLogger(__name__ + ".Check." + self.name)

        self._validate_check()
        self.expectation = self._construct_expectation()

    def _validate_check(self):
        """
        Confirm that inputs define a valid check
        """
        if self.condition != Condition.no_missing:
            if self.val is None:
                raise ExpectationError(self.name + ": a tolerance is required")
            try:
                self.val = float(self.val)
            except (TypeError, ValueError):
                raise ExpectationError(self.name + ": tolerance must be a "
                                       "number, got " + repr(self.val))
        if self.condition == Condition.abs_less_than and self.val <= 0:
            raise ExpectationError(self.name + ": absolute tolerances must "
                                   "be positive")

    def _construct_expectation(self):
        """
        Phrase check expectation in words
        :return: str
        """
        out = self.name + ":" + self.severity.name + ": " \
            + "For variable " + self.variable + ": "

        if self.condition == Condition.no_missing:
            out += "no missing values"
        elif self.condition == Condition.greater_than:
            out += "all values greater than " + str(self.val)
        elif self.condition == Condition.less_than:
            out += "all values less than " + str(self.val)
        elif self.condition == Condition.abs_less_than:
            out += "all absolute values less than " + str(self.val)

        return out

    def observed(self, df: pd.DataFrame) -> float:
        """
        The value that decides the check: largest (or smallest for
        ``greater_than``) value of the column, NaN when it was not evaluated
        """
        if self.variable not in df.columns:
            return np.nan
        values = df[self.variable].to_numpy(dtype=float)
        if np.all(np.isnan(values)):
            return np.nan
        if self.condition == Condition.greater_than:
            return float(np.nanmin(values))
        if self.condition == Condition.abs_less_than:
            return float(np.nanmax(np.abs(values)))
        return float(np.nanmax(values))

    def check(self, df: pd.DataFrame):
        """
        Check variable of input dataframe to see if it meets conditions.
        Values that were not evaluated (NaN) pass every condition except
        ``no_missing``.

        :param df: Pandas data frame
        :return: boolean of if the data passed the check
        """

        if self.variable not in df.columns:
            self.__logger.log(self.severity.value, self.expectation
                              + ". Column " + self.variable + " is missing")
            return False

        values = df[self.variable].to_numpy(dtype=float)
        if self.condition == Condition.no_missing:
            count = int(np.sum(np.isnan(values)))
        elif self.condition == Condition.less_than:
            count = int(np.sum(values >= self.val))
        elif self.condition == Condition.greater_than:
            count = int(np.sum(values <= self.val))
        else:
            count = int(np.sum(np.abs(values) >= self.val))

        result = count == 0
        if not result:
            self.__logger.log(self.severity.value, self.expectation
                              + ". check failed, observed %.3e"
                              % self.observed(df))
        else:
            self.__logger.debug("%s: passed, observed %.3e", self.name,
                                self.observed(df))
        return result


class Tester:

    def __init__(self, name, yaml_file=None):
        self.name = name
        self._logger = logging.getLogger(__name__ + ".Tester." + self.name)
        self.checks = []
        if yaml_file:
            self.load_yaml(yaml_file)

    @classmethod
    def default(cls) -> "Tester":
        """
        Tester with the verification checks shipped with the package
        """
        return cls("verify", yaml_file=DEFAULT_CHECKS)

    def add(self, c: Check):
        self.checks.append(c)

    def load_yaml(self, yaml_file):
        with open(yaml_file) as f:
            check_list = yaml.load(f, Loader=yaml.FullLoader)

        for item in check_list:
            item['condition'] = Condition[item['condition']]
            item['severity'] = Severity[item['severity']]
            item['logger'] = self._logger
            self.add(Check(**item))

    def check(self, df: pd.DataFrame):
        out = True
        num_checks = 0
        num_failures = 0
        for c in self.checks:
            num_checks += 1
            result = c.check(df)
            out = out and result
            if not result:
                num_failures += 1

        passes = num_checks - num_failures
        self._logger.info("All Checks Completed. Out of " + str(num_checks)
                          + " checks: " + str(passes) + " passed and "
                          + str(num_failures) + " failed.")
        return out

    def report(self, df: pd.DataFrame) -> pd.DataFrame:
        """
        One row per check: name, variable, observed value, tolerance and
        whether it passed; nothing is logged
        """
        rows = []
        for c in self.checks:
            observed = c.observed(df)
            if c.variable not in df.columns:
                passed = False
            elif c.condition == Condition.no_missing:
                passed = not df[c.variable].isna().any()
            elif np.isnan(observed):
                passed = True
            elif c.condition == Condition.greater_than:
                passed = observed > c.val
            else:
                passed = observed < c.val
            rows.append({
                "check": c.name,
                "variable": c.variable,
                "observed": observed,
                "tolerance": c.val,
                "passed": bool(passed)
            })
        return pd.DataFrame(rows, columns=["check", "variable", "observed",
                                           "tolerance", "passed"])
