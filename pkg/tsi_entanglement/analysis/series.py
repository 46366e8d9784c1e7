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

# Concurrence time series of one nearest-neighbour pair

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
import pandas as pd

from tsi_entanglement.model import ParameterError
from tsi_entanglement.dynamics import QuenchState, pair_correlators, \
    pair_correlator_arrays
from tsi_entanglement.entanglement import raw_concurrence, \
    raw_concurrence_arrays

logger = logging.getLogger(__name__)

DEFAULT_T0 = 0.0
DEFAULT_TMAX = 40.0
DEFAULT_DT = 0.01
GRID_TOL = 1e-12


class PairKind(Enum):
    """
    Which nearest-neighbour pair is observed, relative to the initially
    entangled pair (m, m+1)
    """

    system = "system"
    '''(m, m+1), the initially entangled pair'''
    edge = "edge"
    '''(m+1, m+2), the system spin next to the environment'''
    environment = "environment"
    '''(m+2, m+3), the first environment pair'''

    @property
    def offset(self) -> int:
        return {"system": 0, "edge": 1, "environment": 2}[self.value]

    def left_site(self, state: QuenchState) -> int:
        return state.m + self.offset


def time_grid(t0: float, t_max: float, dt: float) -> np.ndarray:
    """
    Uniform grid t0, t0 + dt, ... ending at the last point not beyond t_max

    :raises ParameterError: unless dt > 0 and t_max > t0 >= 0
    """
    if not dt > 0:
        raise ParameterError("dt must be positive, got {}".format(dt))
    if not t0 >= 0:
        raise ParameterError("t0 must be non-negative, got {}".format(t0))
    if not t_max > t0:
        raise ParameterError("t_max ({}) must exceed t0 ({})"
                             .format(t_max, t0))
    steps = (t_max - t0) / dt
    n = int(round(steps))
    if abs(n - steps) > 1e-9 * max(1.0, steps):
        n = int(math.floor(steps))
    return t0 + dt * np.arange(n + 1)


@dataclass(frozen=True, eq=False)
class ConcurrenceSeries:
    """
    Concurrence of one pair on a uniform time grid. ``raw_values`` are
    2(|Z| - sqrt(X+ X-)) before clamping, ``c_values`` = max(0, raw).
    When ``state`` is set the raw concurrence can be re-evaluated at any
    time, which is what the ESD refinement uses.
    """

    pair: PairKind
    alpha: Optional[float]
    t_grid: np.ndarray
    c_values: np.ndarray
    raw_values: np.ndarray
    state: Optional[QuenchState] = None

    @classmethod
    def from_raw(cls, t_grid, raw_values, pair: PairKind = PairKind.system,
                 alpha: Optional[float] = None) -> "ConcurrenceSeries":
        """
        Builds a series from precomputed raw values, e.g. tabulated data
        """
        t_grid = np.asarray(t_grid, dtype=float)
        raw_values = np.asarray(raw_values, dtype=float)
        if t_grid.shape != raw_values.shape or t_grid.size < 2:
            raise ParameterError("Time grid and values must be 1-D arrays "
                                 "of the same length (at least 2)")
        steps = np.diff(t_grid)
        if np.any(steps <= 0):
            raise ParameterError("Time grid must be strictly increasing")
        if np.ptp(steps) > GRID_TOL * max(1.0, abs(t_grid[-1])):
            raise ParameterError("Time grid must be uniform, steps vary by "
                                 "{:.3e}".format(np.ptp(steps)))
        return cls(pair, alpha, t_grid, np.maximum(raw_values, 0.0),
                   raw_values)

    @property
    def t0(self) -> float:
        return float(self.t_grid[0])

    @property
    def t_max(self) -> float:
        return float(self.t_grid[-1])

    @property
    def label(self) -> str:
        if self.state is not None:
            return self.state.params.label
        if self.alpha is None:
            return "n/a"
        return "{:g}".format(self.alpha)

    def raw_at(self, t: float) -> float:
        """
        Raw concurrence at an arbitrary time inside the grid: exact when
        the series knows its quench, linear interpolation otherwise
        """
        if self.state is None:
            return float(np.interp(t, self.t_grid, self.raw_values))
        i = self.pair.left_site(self.state)
        return raw_concurrence(pair_correlators(i, t, self.state))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "t": self.t_grid,
            "C_raw": self.raw_values,
            "C": self.c_values
        })


def concurrence_series(pair: PairKind, state: QuenchState,
                       t0: float = DEFAULT_T0,
                       t_max: float = DEFAULT_TMAX,
                       dt: float = DEFAULT_DT) -> ConcurrenceSeries:
    """
    Concurrence of a pair at every point of a uniform time grid

    :param pair: which pair to observe
    :param state: the quench (carries alpha, phi and the quadrature)
    :param t0: first time
    :param t_max: last time
    :param dt: grid step
    :return: ConcurrenceSeries
    """
    pair = PairKind(pair)
    grid = time_grid(t0, t_max, dt)
    correlators = pair_correlator_arrays(pair.left_site(state), grid, state)
    raw = raw_concurrence_arrays(correlators)
    logger.debug("Series %s pair, alpha=%s: %d points", pair.value,
                 state.params.label, grid.size)
    return ConcurrenceSeries(pair, state.params.alpha, grid,
                             np.maximum(raw, 0.0), raw, state)


def decay_exponent(series: ConcurrenceSeries, t_min: float = 20.0,
                   t_max: float = 40.0) -> float:
    """
    Slope of log C against log t on [t_min, t_max]; -1 for the Markovian
    1/t tail

    :raises ParameterError: if the window holds fewer than two positive
        values
    """
    t = series.t_grid
    c = series.c_values
    mask = (t >= t_min) & (t <= t_max) & (c > 0) & (t > 0)
    if np.count_nonzero(mask) < 2:
        raise ParameterError("Not enough positive values in [{}, {}]"
                             .format(t_min, t_max))
    slope, _ = np.polyfit(np.log(t[mask]), np.log(c[mask]), 1)
    return float(slope)
