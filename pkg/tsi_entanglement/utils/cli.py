"""
Command line entry point.

Each command computes a table and a metadata block; the table is written
once, at the end, as CSV or JSON. Exit codes: 0 success, 1 invalid
parameters, 2 I/O failure, 3 verification failure.
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

import logging
import sys
from dataclasses import dataclass, field
from typing import Sequence

import pandas as pd

from tsi_entanglement.model import ParameterError
from tsi_entanglement.dynamics import QuenchState
from tsi_entanglement.analysis import PairKind, concurrence_series, \
    esd_times, witness, witness_scan, static_concurrence_scan, \
    environment_comparison
from tsi_entanglement.oracle import OracleRangeError
from tsi_entanglement.qc import Tester, VerificationSettings, \
    build_verification_frame
from tsi_entanglement.utils.config import RunConfig, Command
from tsi_entanglement.utils.io_utils import save_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARAMETERS = 1
EXIT_IO = 2
EXIT_VERIFICATION = 3

ESTIMATOR_AGREEMENT = 0.1
NOT_FOUND = "not found"


@dataclass
class CommandResult:
    frame: pd.DataFrame
    metadata: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK


def _state(config: RunConfig) -> QuenchState:
    return QuenchState(config.model_params(), 0, config.phi)


def cmd_series(config: RunConfig) -> CommandResult:
    state = _state(config)
    series = concurrence_series(config.pair, state, config.t0, config.tmax,
                                config.dt)
    events = esd_times(series, config.refine_tol, config.zero_tol)
    result = witness(series)
    metadata = config.metadata()
    metadata.update({
        "death_times": events.death_times,
        "revival_times": events.revival_times,
        "witness_I": result.i_value
    })
    if events:
        logger.info("alpha=%s, %s pair: first death at t=%.4f, "
                    "%d deaths, %d revivals", state.params.label,
                    config.pair.value, events.first_death,
                    len(events.death_times), len(events.revival_times))
    else:
        logger.info("alpha=%s, %s pair: no ESD on [%g, %g]",
                    state.params.label, config.pair.value, config.t0,
                    config.tmax)
    logger.info("Witness I = %.6g", result.i_value)
    return CommandResult(series.to_frame(), metadata)


def _compare_estimators(onset, static_peak):
    if onset is None or static_peak is None:
        return
    if abs(onset - static_peak) > ESTIMATOR_AGREEMENT:
        logger.warning("alpha_c estimators disagree: witness onset %g, "
                       "static peak %g", onset, static_peak)


def cmd_witness_scan(config: RunConfig) -> CommandResult:
    grid = config.alpha_grid()
    settings = config.sweep_settings()
    scan = witness_scan(grid, config.t0, config.tmax, config.dt,
                        phi=settings.phi, n_k=settings.n_k,
                        convention=settings.convention, pair=config.pair,
                        workers=config.workers)
    static = static_concurrence_scan(grid, config.times, phi=settings.phi,
                                     n_k=settings.n_k,
                                     convention=settings.convention,
                                     dt=config.dt,
                                     refine_tol=config.refine_tol,
                                     zero_tol=config.zero_tol,
                                     workers=config.workers)
    onset = scan.onset
    static_peak = static.alpha_c_estimate
    _compare_estimators(onset, static_peak)
    logger.info("Estimated alpha_c: witness onset %s, static peak %s",
                NOT_FOUND if onset is None else "{:g}".format(onset),
                NOT_FOUND if static_peak is None
                else "{:g}".format(static_peak))

    metadata = config.metadata()
    metadata.update({
        "onset_threshold": scan.threshold,
        "alpha_c_onset": NOT_FOUND if onset is None else onset,
        "alpha_c_static": NOT_FOUND if static_peak is None else static_peak
    })
    return CommandResult(scan.to_frame(), metadata)


def cmd_static_scan(config: RunConfig) -> CommandResult:
    settings = config.sweep_settings()
    scan = static_concurrence_scan(config.alpha_grid(), config.times,
                                   pair=config.pair, phi=settings.phi,
                                   n_k=settings.n_k,
                                   convention=settings.convention,
                                   dt=config.dt,
                                   refine_tol=config.refine_tol,
                                   zero_tol=config.zero_tol,
                                   workers=config.workers)
    metadata = config.metadata()
    peaks = scan.argmax_per_time()
    metadata["argmax"] = {
        "t={:g}".format(t): "flat" if peak is None else peak
        for t, peak in peaks.items()
    }
    estimate = scan.alpha_c_estimate
    metadata["alpha_c_static"] = NOT_FOUND if estimate is None else estimate
    return CommandResult(scan.to_frame(), metadata)


def cmd_environment_compare(config: RunConfig) -> CommandResult:
    comparison = environment_comparison(_state(config), config.t0,
                                        config.tmax, config.dt,
                                        config.refine_tol, config.zero_tol)
    metadata = config.metadata()
    del metadata["pair"]
    for pair in PairKind:
        events = comparison.events[pair]
        metadata[pair.value + "_death_times"] = events.death_times
        metadata[pair.value + "_revival_times"] = events.revival_times
    for key, value in comparison.summary().items():
        metadata[key] = "none" if value is None else value
    return CommandResult(comparison.to_frame(), metadata)


def cmd_verify(config: RunConfig) -> CommandResult:
    settings = VerificationSettings(case=config.case, n_k=config.nk,
                                    ring=config.ring, t_max=config.tmax,
                                    oracle_t_max=min(30.0, config.tmax),
                                    dt=config.dt,
                                    convention=config.convention)
    deviations = build_verification_frame(settings)
    tester = Tester.default()
    passed = tester.check(deviations)
    metadata = {
        "command": config.command.value,
        "case": config.case.value,
        "n_k": config.nk,
        "ring": config.ring,
        "t_max": config.tmax,
        "dt": config.dt,
        "convention": config.convention.value,
        "passed": passed
    }
    return CommandResult(tester.report(deviations), metadata,
                         EXIT_OK if passed else EXIT_VERIFICATION)


COMMANDS = {
    Command.series: cmd_series,
    Command.witness_scan: cmd_witness_scan,
    Command.static_scan: cmd_static_scan,
    Command.environment_compare: cmd_environment_compare,
    Command.verify: cmd_verify
}


def run(config: RunConfig) -> int:
    """
    Runs a parsed configuration and writes its table

    :return: exit code
    """
    try:
        result = COMMANDS[config.command](config)
    except (ParameterError, OracleRangeError) as e:
        logger.error("Invalid parameters: %s", e)
        return EXIT_PARAMETERS
    try:
        save_table(result.frame, result.metadata, config.out, config.format)
    except OSError as e:
        logger.error("Cannot write %s: %s", config.out, e)
        return EXIT_IO
    return result.exit_code


def main(argv: Sequence[str] = None) -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: "
                               "%(message)s")
    try:
        config = RunConfig().instantiate(argv)
    except ParameterError as e:
        logger.error("Invalid parameters: %s", e)
        return EXIT_PARAMETERS
    logger.info("Running %s", config.command.value)
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
