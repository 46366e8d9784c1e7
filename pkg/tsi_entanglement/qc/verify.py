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

"""
Builds the frame of numerical deviations checked by the verify command:
quadrature against the ring oracle and the Bessel closed forms, quadrature
convergence, the single-excitation identity X+ = 0, closed form against
the Wootters recipe and conservation of the norm.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from tsi_entanglement.model import DispersionConvention, DEFAULT_NK
from tsi_entanglement.dynamics import QuenchState, pair_correlator_arrays, \
    correlators_from_amplitudes, norm_in_window, site_amplitudes
from tsi_entanglement.entanglement import raw_concurrence_arrays, \
    concurrence_closed_form, concurrence_wootters, build_density_matrix
from tsi_entanglement.oracle import BesselCase, bessel_reference, \
    build_ring, ring_pair_correlators, DEFAULT_RING
from tsi_entanglement.analysis import time_grid

logger = logging.getLogger(__name__)


class VerifyCase(Enum):
    all = "all"
    alpha_zero = "alpha_zero"
    pure_tsi = "pure_tsi"


@dataclass(frozen=True)
class VerificationSettings:
    case: VerifyCase = VerifyCase.all
    n_k: int = DEFAULT_NK
    ring: int = DEFAULT_RING
    alphas: Tuple[float, ...] = (0.0, 1.0, 2.0)
    t_max: float = 40.0
    oracle_t_max: float = 30.0
    dt: float = 0.01
    random_sets: int = 10000
    seed: int = 0
    convention: DispersionConvention = DispersionConvention.fermionized

    def state(self, alpha: Optional[float], n_k: int = None) -> QuenchState:
        n_k = n_k or self.n_k
        if alpha is None:
            return QuenchState.pure_tsi(n_k=n_k, convention=self.convention)
        return QuenchState.for_alpha(alpha, n_k=n_k,
                                     convention=self.convention)


COLUMNS = ["oracle_alpha_0", "oracle_alpha_1", "oracle_alpha_2",
           "bessel_alpha_zero", "bessel_pure_tsi", "convergence", "x_plus",
           "wootters", "normalisation"]


def _system_concurrence(state: QuenchState, times: np.ndarray) -> np.ndarray:
    correlators = pair_correlator_arrays(state.m, times, state)
    return np.maximum(raw_concurrence_arrays(correlators), 0.0)


def oracle_deviation(alpha: float, settings: VerificationSettings) -> float:
    """
    Largest difference between quadrature and ring concurrence of the
    system pair on [0, oracle_t_max]
    """
    state = settings.state(alpha)
    times = time_grid(0.0, min(settings.oracle_t_max, settings.t_max),
                      settings.dt)
    ring = build_ring(settings.ring, state.params)
    ring_values = np.maximum(
        raw_concurrence_arrays(ring_pair_correlators(ring, state, times)),
        0.0
    )
    return float(np.max(np.abs(_system_concurrence(state, times)
                               - ring_values)))


def bessel_deviation(case: BesselCase,
                     settings: VerificationSettings) -> float:
    """
    Largest difference between the quadrature and the Bessel closed form
    on [0, t_max]
    """
    case = BesselCase(case)
    alpha = 0.0 if case == BesselCase.alpha_zero else None
    state = settings.state(alpha)
    times = time_grid(0.0, settings.t_max, settings.dt)
    reference = bessel_reference(case, times)
    return float(np.max(np.abs(_system_concurrence(state, times)
                               - reference)))


def convergence_deviation(settings: VerificationSettings) -> float:
    """
    Largest change of the system concurrence when n_k is doubled, over all
    alphas and the pure-TSI limit
    """
    times = time_grid(0.0, settings.t_max, settings.dt)
    worst = 0.0
    for alpha in list(settings.alphas) + [None]:
        coarse = _system_concurrence(settings.state(alpha), times)
        fine = _system_concurrence(settings.state(alpha, 2 * settings.n_k),
                                   times)
        worst = max(worst, float(np.max(np.abs(coarse - fine))))
    return worst


def x_plus_deviation(settings: VerificationSettings) -> float:
    times = time_grid(0.0, settings.t_max, settings.dt)
    worst = 0.0
    for alpha in list(settings.alphas) + [None]:
        state = settings.state(alpha)
        for offset in range(3):
            correlators = pair_correlator_arrays(state.m + offset, times,
                                                 state)
            worst = max(worst, float(np.max(np.abs(correlators["x_plus"]))))
    return worst


def _random_amplitudes(rng: np.random.Generator, size: int):
    """
    Pairs (psi_i, psi_j) of random normalized single-excitation states:
    the remaining weight sits on other sites
    """
    raw = rng.normal(size=(size, 3)) + 1j * rng.normal(size=(size, 3))
    raw /= np.linalg.norm(raw, axis=1)[:, None]
    return raw[:, 0], raw[:, 1]


def wootters_deviation(settings: VerificationSettings) -> float:
    """
    Largest difference between the closed form and the Wootters
    concurrence on random correlator sets and on every evolved time point
    """
    rng = np.random.default_rng(settings.seed)
    psi_i, psi_j = _random_amplitudes(rng, settings.random_sets)
    pairs = list(zip(psi_i, psi_j))

    times = time_grid(0.0, settings.t_max, settings.dt)
    for alpha in settings.alphas:
        state = settings.state(alpha)
        for offset in range(3):
            psi = _pair_amplitudes(state, offset, times)
            pairs.extend(zip(psi[:, 0], psi[:, 1]))

    worst = 0.0
    for a, b in pairs:
        c = correlators_from_amplitudes(a, b)
        deviation = abs(concurrence_closed_form(c)
                        - concurrence_wootters(build_density_matrix(c)))
        worst = max(worst, deviation)
    return worst


def _pair_amplitudes(state: QuenchState, offset: int, times: np.ndarray):
    i = state.m + offset
    return site_amplitudes([i, i + 1], times, state)


def normalisation_deviation(settings: VerificationSettings) -> float:
    times = np.linspace(0.0, settings.t_max, 5)
    worst = 0.0
    for alpha in list(settings.alphas) + [None]:
        norms = norm_in_window(times, settings.state(alpha))
        worst = max(worst, float(np.max(np.abs(norms - 1.0))))
    return worst


def build_verification_frame(settings: VerificationSettings = None) \
        -> pd.DataFrame:
    """
    One-row frame of deviations, one column per verification check.
    Checks outside the selected case are NaN.

    :param settings: what to verify and at which resolution
    :return: pandas DataFrame with the columns listed in ``COLUMNS``
    """
    settings = settings or VerificationSettings()
    case = VerifyCase(settings.case)
    row = {column: np.nan for column in COLUMNS}

    if case in (VerifyCase.all, VerifyCase.alpha_zero):
        row["bessel_alpha_zero"] = bessel_deviation(BesselCase.alpha_zero,
                                                    settings)
        logger.info("Bessel reference, alpha = 0: max deviation %.3e",
                    row["bessel_alpha_zero"])
    if case in (VerifyCase.all, VerifyCase.pure_tsi):
        row["bessel_pure_tsi"] = bessel_deviation(BesselCase.pure_tsi,
                                                  settings)
        logger.info("Bessel reference, pure TSI: max deviation %.3e",
                    row["bessel_pure_tsi"])
    if case == VerifyCase.all:
        for alpha in settings.alphas:
            column = "oracle_alpha_{:g}".format(alpha)
            row[column] = oracle_deviation(alpha, settings)
            logger.info("Ring oracle, alpha = %g: max deviation %.3e",
                        alpha, row[column])
        row["convergence"] = convergence_deviation(settings)
        logger.info("n_k = %d vs %d: max deviation %.3e", settings.n_k,
                    2 * settings.n_k, row["convergence"])
        row["x_plus"] = x_plus_deviation(settings)
        logger.info("Single-excitation identity: max |X+| %.3e",
                    row["x_plus"])
        row["wootters"] = wootters_deviation(settings)
        logger.info("Closed form vs Wootters: max deviation %.3e",
                    row["wootters"])
        row["normalisation"] = normalisation_deviation(settings)
        logger.info("Normalisation: max deviation %.3e",
                    row["normalisation"])
    return pd.DataFrame([row], columns=list(row.keys()))
