"""
Entanglement sudden death (ESD) and revival detection.

A death is recorded when the raw concurrence crosses zero from above and a
revival when it crosses back from below; both are refined by bisection on
the continuous-time raw concurrence. For single-excitation states the raw
concurrence is 2|Z| and never goes negative, so its zeros are touching
zeros. Interior local minima are refined by bounded minimisation; those
whose refined value is at or below ``zero_tol`` count as a death
immediately followed by a revival, even when the sampled minimum lies
above it (up to twice ``zero_tol``).
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
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Callable

import numpy as np
from scipy import optimize

from tsi_entanglement.model import ParameterError
from .series import ConcurrenceSeries

logger = logging.getLogger(__name__)

DEFAULT_REFINE_TOL = 1e-4
DEFAULT_ZERO_TOL = 1e-2


class EventKind(Enum):
    death = "death"
    revival = "revival"
    touch = "touch"


@dataclass
class EsdEvents:
    """
    Death and revival times of one series, sorted and interleaved
    (death, revival, death, ...)
    """

    death_times: List[float] = field(default_factory=list)
    revival_times: List[float] = field(default_factory=list)

    @property
    def first_death(self) -> Optional[float]:
        if self.death_times:
            return self.death_times[0]
        return None

    @property
    def first_revival(self) -> Optional[float]:
        if self.revival_times:
            return self.revival_times[0]
        return None

    def __bool__(self):
        return len(self.death_times) > 0


def _refine_root(f: Callable, a: float, b: float, fa: float, fb: float,
                 tol: float) -> float:
    """
    Root of f in [a, b] given grid values of opposite sign. Falls back to
    linear interpolation when the re-evaluated endpoints do not bracket
    (grid values that are zero within round-off).
    """
    ea, eb = f(a), f(b)
    if ea == 0:
        return a
    if eb == 0:
        return b
    if ea * eb > 0:
        if fa == fb:
            return b
        return a + (b - a) * fa / (fa - fb)
    root = optimize.bisect(f, a, b, xtol=tol)
    logger.debug("Bisection in [%.4f, %.4f] -> %.6f", a, b, root)
    return float(root)


def _refine_minimum(series: ConcurrenceSeries, a: float, b: float,
                    t_grid_point: float, c_grid_point: float,
                    tol: float) -> tuple:
    """
    Time and value of the local minimum of the raw concurrence in [a, b].
    Tabulated series cannot be re-evaluated and keep the grid point.
    """
    if series.state is None:
        return t_grid_point, c_grid_point
    result = optimize.minimize_scalar(series.raw_at, bounds=(a, b),
                                      method="bounded",
                                      options={"xatol": tol})
    if result.fun > c_grid_point:
        return t_grid_point, c_grid_point
    return float(result.x), float(result.fun)


def _candidates(series: ConcurrenceSeries, refine_tol: float,
                zero_tol: float) -> list:
    t = series.t_grid
    raw = series.raw_values
    c = series.c_values
    n = t.size
    out = []
    for i in range(n - 1):
        a, b = raw[i], raw[i + 1]
        if a > 0 >= b:
            root = _refine_root(series.raw_at, t[i], t[i + 1], a, b,
                                refine_tol)
            out.append((root, EventKind.death))
        elif a <= 0 < b:
            root = _refine_root(series.raw_at, t[i], t[i + 1], a, b,
                                refine_tol)
            out.append((root, EventKind.revival))
    for i in range(1, n - 1):
        if raw[i] <= 0 or c[i] > 2 * zero_tol:
            continue
        if not (c[i] < c[i - 1] and c[i] <= c[i + 1]):
            continue
        tmin, cmin = _refine_minimum(series, t[i - 1], t[i + 1], t[i], c[i],
                                     refine_tol)
        if cmin > zero_tol / 2:
            logger.debug("Dip near threshold at t=%.6f: C=%.3e, zero_tol=%g",
                         tmin, cmin, zero_tol)
        if cmin <= zero_tol:
            out.append((tmin, EventKind.touch))
    out.sort(key=lambda e: e[0])
    return out


def esd_times(series: ConcurrenceSeries,
              refine_tol: float = DEFAULT_REFINE_TOL,
              zero_tol: float = DEFAULT_ZERO_TOL) -> EsdEvents:
    """
    Finds the death and revival times of a concurrence series

    :param series: the series
    :param refine_tol: time resolution of the refined events
    :param zero_tol: largest local minimum of C treated as a touching zero;
        0 restricts detection to sign changes of the raw values
    :return: EsdEvents, empty when the pair never disentangles
    :raises ParameterError: if refine_tol is not positive or zero_tol is
        negative
    """
    if not refine_tol > 0:
        raise ParameterError("refine_tol must be positive, got {}"
                             .format(refine_tol))
    if not zero_tol >= 0:
        raise ParameterError("zero_tol must be non-negative, got {}"
                             .format(zero_tol))

    events = EsdEvents()
    alive = True
    t_end = series.t_max
    for t, kind in _candidates(series, refine_tol, zero_tol):
        if kind == EventKind.death and alive:
            events.death_times.append(t)
            alive = False
        elif kind == EventKind.revival and not alive:
            events.revival_times.append(t)
            alive = True
        elif kind == EventKind.touch and alive:
            events.death_times.append(t)
            if t < t_end:
                events.revival_times.append(t)
            else:
                alive = False
    if events:
        logger.debug("%s pair, alpha=%s: %d deaths, first at %.4f",
                     series.pair.value, series.label,
                     len(events.death_times), events.first_death)
    return events
