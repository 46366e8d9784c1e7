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
Scans over the TSI ratio at fixed times, first death times per alpha and
the comparison of the system pair with its environment.
"""

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from tsi_entanglement.model import ParameterError, DispersionConvention, \
    DEFAULT_NK
from tsi_entanglement.dynamics import QuenchState, pair_correlator_arrays
from tsi_entanglement.entanglement import raw_concurrence_arrays
from .esd import EsdEvents, esd_times, DEFAULT_REFINE_TOL, DEFAULT_ZERO_TOL
from .series import ConcurrenceSeries, PairKind, concurrence_series, \
    DEFAULT_T0, DEFAULT_TMAX, DEFAULT_DT
from .sweep import SweepSettings, check_alpha_grid, sweep

logger = logging.getLogger(__name__)

FLAT_TOL = 1e-12


def _static_for_alpha(alpha: float, settings: SweepSettings,
                      pair: PairKind, times: np.ndarray, dt: float,
                      refine_tol: float, zero_tol: float):
    state = settings.state(alpha)
    correlators = pair_correlator_arrays(pair.left_site(state), times, state)
    values = np.maximum(raw_concurrence_arrays(correlators), 0.0)
    first_death = None
    horizon = float(times.max())
    if horizon > 0:
        series = concurrence_series(pair, state, 0.0, horizon, dt)
        first_death = esd_times(series, refine_tol, zero_tol).first_death
    return values, first_death


@dataclass
class StaticScan:
    """
    C of the observed pair as a function of alpha, one curve per time
    """

    alphas: np.ndarray
    times: np.ndarray
    values: np.ndarray
    '''Array of shape (len(alphas), len(times))'''
    first_death: List[Optional[float]] = field(default_factory=list)
    '''First death time per alpha inside [0, max(times)], or None'''

    def is_flat(self, j: int) -> bool:
        return float(np.ptp(self.values[:, j])) < FLAT_TOL

    def argmax(self, j: int) -> Optional[float]:
        """
        alpha maximizing C at the j-th time; None for a flat curve
        """
        if self.is_flat(j):
            return None
        return float(self.alphas[int(np.argmax(self.values[:, j]))])

    def argmax_per_time(self) -> Dict[float, Optional[float]]:
        return {float(t): self.argmax(j) for j, t in enumerate(self.times)}

    @property
    def alpha_c_estimate(self) -> Optional[float]:
        """
        Mean of the argmax over all non-flat times
        """
        peaks = [a for a in self.argmax_per_time().values() if a is not None]
        if not peaks:
            return None
        return float(np.mean(peaks))

    def beyond_death(self) -> np.ndarray:
        """
        Boolean mask, True where a time lies past that alpha's first death
        """
        mask = np.zeros(self.values.shape, dtype=bool)
        for i, death in enumerate(self.first_death):
            if death is not None:
                mask[i] = self.times > death
        return mask

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"alpha": self.alphas})
        for j, t in enumerate(self.times):
            frame["C(t={:g})".format(t)] = self.values[:, j]
        beyond = self.beyond_death()
        warnings = []
        for i, death in enumerate(self.first_death):
            late = self.times[beyond[i]]
            if late.size:
                warnings.append("t={} beyond first death {:.4f}".format(
                    ",".join("{:g}".format(t) for t in late), death))
            else:
                warnings.append("")
        frame["warning"] = warnings
        return frame


def static_concurrence_scan(alpha_grid: Sequence[float],
                            times: Sequence[float],
                            pair: PairKind = PairKind.system,
                            phi: float = 0.0, n_k: int = DEFAULT_NK,
                            convention: DispersionConvention =
                            DispersionConvention.fermionized,
                            dt: float = DEFAULT_DT,
                            refine_tol: float = DEFAULT_REFINE_TOL,
                            zero_tol: float = DEFAULT_ZERO_TOL,
                            workers: int = 1) -> StaticScan:
    """
    Concurrence at fixed times as a function of alpha

    :param alpha_grid: TSI ratios
    :param times: non-empty list of non-negative times
    :param dt: step of the series used to locate first death times
    :return: StaticScan; times past an alpha's first death time are
        reported and flagged, not dropped
    """
    grid = check_alpha_grid(alpha_grid)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if times.size == 0:
        raise ParameterError("No times given for the static scan")
    if np.any(times < 0) or not np.all(np.isfinite(times)):
        raise ParameterError("Static scan times must be finite and "
                             "non-negative")

    settings = SweepSettings(phi=phi, n_k=n_k, convention=convention)
    func = partial(_static_for_alpha, settings=settings,
                   pair=PairKind(pair), times=times, dt=dt,
                   refine_tol=refine_tol, zero_tol=zero_tol)
    rows = sweep(func, [float(a) for a in grid], workers)
    scan = StaticScan(grid, times, np.array([r[0] for r in rows]),
                      [r[1] for r in rows])

    beyond = scan.beyond_death()
    for i in np.flatnonzero(beyond.any(axis=1)):
        logger.warning("alpha=%g: times %s lie beyond the first death "
                       "time %.4f", grid[i], times[beyond[i]].tolist(),
                       scan.first_death[i])
    for t, peak in scan.argmax_per_time().items():
        if peak is None:
            logger.info("t=%g: concurrence is flat in alpha", t)
        else:
            logger.info("t=%g: concurrence peaks at alpha = %g", t, peak)
    return scan


def _first_death_for_alpha(alpha: float, settings: SweepSettings,
                           pair: PairKind, t0: float, t_max: float,
                           dt: float, refine_tol: float,
                           zero_tol: float) -> Optional[float]:
    series = concurrence_series(pair, settings.state(alpha), t0, t_max, dt)
    return esd_times(series, refine_tol, zero_tol).first_death


def death_time_scan(alpha_grid: Sequence[float], t0: float = DEFAULT_T0,
                    t_max: float = DEFAULT_TMAX, dt: float = DEFAULT_DT,
                    pair: PairKind = PairKind.system,
                    phi: float = 0.0, n_k: int = DEFAULT_NK,
                    convention: DispersionConvention =
                    DispersionConvention.fermionized,
                    refine_tol: float = DEFAULT_REFINE_TOL,
                    zero_tol: float = DEFAULT_ZERO_TOL,
                    workers: int = 1) -> pd.DataFrame:
    """
    First death time of a pair for every alpha of a grid

    :return: DataFrame with columns alpha and t_r (NaN without ESD)
    """
    grid = check_alpha_grid(alpha_grid)
    settings = SweepSettings(phi=phi, n_k=n_k, convention=convention)
    func = partial(_first_death_for_alpha, settings=settings,
                   pair=PairKind(pair), t0=t0, t_max=t_max, dt=dt,
                   refine_tol=refine_tol, zero_tol=zero_tol)
    deaths = sweep(func, [float(a) for a in grid], workers)
    return pd.DataFrame({
        "alpha": grid,
        "t_r": [np.nan if d is None else d for d in deaths]
    })


@dataclass
class EnvironmentComparison:
    """
    Series and ESD events of the system, edge and environment pairs
    """

    series: Dict[PairKind, ConcurrenceSeries]
    events: Dict[PairKind, EsdEvents]

    @property
    def system_revival_peak(self) -> Optional[float]:
        """
        Time of the maximum of the system concurrence between its first
        revival and the following death (or the end of the window)
        """
        events = self.events[PairKind.system]
        revival = events.first_revival
        if revival is None:
            return None
        series = self.series[PairKind.system]
        later = [d for d in events.death_times if d > revival]
        end = later[0] if later else series.t_max
        mask = (series.t_grid > revival) & (series.t_grid <= end)
        if not mask.any():
            return None
        t = series.t_grid[mask]
        return float(t[int(np.argmax(series.c_values[mask]))])

    @property
    def environment_first_death(self) -> Optional[float]:
        return self.events[PairKind.environment].first_death

    @property
    def gap(self) -> Optional[float]:
        """
        Environment first death minus the system revival peak
        """
        peak = self.system_revival_peak
        death = self.environment_first_death
        if peak is None or death is None:
            return None
        return death - peak

    def summary(self) -> dict:
        return {
            "system_first_death": self.events[PairKind.system].first_death,
            "environment_first_death": self.environment_first_death,
            "system_revival_peak": self.system_revival_peak,
            "revival_peak_gap": self.gap
        }

    def to_frame(self) -> pd.DataFrame:
        t = self.series[PairKind.system].t_grid
        frame = pd.DataFrame({"t": t})
        for pair in PairKind:
            frame["C_" + pair.value] = self.series[pair].c_values
        return frame


def environment_comparison(state: QuenchState, t0: float = DEFAULT_T0,
                           t_max: float = DEFAULT_TMAX,
                           dt: float = DEFAULT_DT,
                           refine_tol: float = DEFAULT_REFINE_TOL,
                           zero_tol: float = DEFAULT_ZERO_TOL) \
        -> EnvironmentComparison:
    """
    Evolves the system, edge and environment pairs of one quench and
    detects ESD in each of them

    :param state: the quench
    :return: EnvironmentComparison
    """
    series = {}
    events = {}
    for pair in PairKind:
        series[pair] = concurrence_series(pair, state, t0, t_max, dt)
        events[pair] = esd_times(series[pair], refine_tol, zero_tol)
        logger.info("alpha=%s, %s pair: %d deaths, %d revivals",
                    state.params.label, pair.value,
                    len(events[pair].death_times),
                    len(events[pair].revival_times))
    comparison = EnvironmentComparison(series, events)
    if comparison.gap is not None:
        logger.info("System revival peak at t=%.4f, environment first death "
                    "at t=%.4f, gap %.4f", comparison.system_revival_peak,
                    comparison.environment_first_death, comparison.gap)
    return comparison
