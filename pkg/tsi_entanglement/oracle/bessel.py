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
Closed-form concurrences of the two limits with Bessel propagators.

For alpha = 0 the single-fermion propagator is (-i)^d J_d(t), which gives
C(t) = J0(t)^2 + J1(t)^2 for the system pair. In the pure-TSI limit the two
sublattices decouple, the propagator is (-i)^(d/2) J_(d/2)(t/2) and
C(t) = J0(t/2)^2. Bessel functions are evaluated here by Miller's downward
recurrence normalized with J0 + 2 (J2 + J4 + ...) = 1.
"""

import logging
import math
from enum import Enum

import numpy as np

logger = logging.getLogger(__name__)

RESCALE_ABOVE = 1e250


class BesselCase(Enum):
    alpha_zero = "alpha_zero"
    pure_tsi = "pure_tsi"


def _start_order(n_max: int, x: float) -> int:
    order = max(n_max, int(x)) + 20 + int(6.0 * math.sqrt(x))
    return order + order % 2


def bessel_j(n_max: int, x: float) -> np.ndarray:
    """
    J_0(x) ... J_n_max(x) for x >= 0

    :param n_max: highest order
    :param x: argument
    :return: array of n_max + 1 values
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative, got {}".format(n_max))
    x = float(x)
    if x < 0 or not math.isfinite(x):
        raise ValueError("Argument must be finite and non-negative, got {}"
                         .format(x))
    out = np.zeros(n_max + 1)
    if x == 0:
        out[0] = 1.0
        return out

    order = _start_order(n_max, x)
    upper, current = 0.0, 1.0
    norm = 2.0 * current
    for k in range(order, 0, -1):
        lower = 2.0 * k / x * current - upper
        upper, current = current, lower
        if k - 1 <= n_max:
            out[k - 1] = current
        if k - 1 > 0 and (k - 1) % 2 == 0:
            norm += 2.0 * current
        if abs(current) > RESCALE_ABOVE:
            upper /= RESCALE_ABOVE
            current /= RESCALE_ABOVE
            norm /= RESCALE_ABOVE
            out /= RESCALE_ABOVE
    norm += current
    return out / norm


def _reference_at(case: BesselCase, t: float) -> float:
    if case == BesselCase.alpha_zero:
        j = bessel_j(1, t)
        return float(j[0] ** 2 + j[1] ** 2)
    return float(bessel_j(0, t / 2.0)[0] ** 2)


def bessel_reference(case: BesselCase, t):
    """
    Concurrence of the system pair for phi = 0 in one of the two limits

    :param case: alpha_zero or pure_tsi
    :param t: time >= 0, scalar or array
    :return: float for a scalar time, array otherwise
    """
    case = BesselCase(case)
    if np.ndim(t) == 0:
        return _reference_at(case, float(t))
    times = np.asarray(t, dtype=float)
    return np.array([_reference_at(case, x) for x in times.ravel()]) \
        .reshape(times.shape)
