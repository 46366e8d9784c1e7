"""
Time evolution of a Bell pair embedded in the infinite chain.

The initial state (|up down> + e^{i phi} |down up>)/sqrt(2) on sites m and
m+1, with every other spin down, is a single Jordan-Wigner fermion in the
superposition (a_m^+ + e^{i phi} a_{m+1}^+)|0>/sqrt(2). Each momentum mode
evolves with the phase exp(-i epsilon(k) t), so the real-space amplitude at
any time is one Fourier integral over the Brillouin zone, evaluated here
with the n_k-point trapezoidal rule. There is no time stepping.
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
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from tsi_entanglement.model import ModelParams, Dispersion, momentum_grid, \
    max_group_velocity, validate_params

logger = logging.getLogger(__name__)

# Rows of the (time x momentum) phase matrix evaluated at once. Fixed, so
# that every time point goes through the same arithmetic however a sweep
# is split between workers.
TIME_CHUNK = 256


@dataclass(frozen=True)
class QuenchState:
    """
    Initially entangled nearest-neighbour pair (m, m+1) with Bell phase phi
    """

    params: ModelParams = field(default_factory=ModelParams)
    m: int = 0
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "params", validate_params(self.params))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "phi", float(self.phi))

    @classmethod
    def for_alpha(cls, alpha: float, m: int = 0, phi: float = 0.0,
                  **kwargs) -> "QuenchState":
        return cls(ModelParams.from_alpha(alpha, **kwargs), m, phi)

    @classmethod
    def pure_tsi(cls, m: int = 0, phi: float = 0.0,
                 **kwargs) -> "QuenchState":
        return cls(ModelParams.pure_tsi_limit(**kwargs), m, phi)


def momentum_amplitude(k, t: float, state: QuenchState):
    """
    f(k) = exp(i (k m - epsilon(k) t)) (1 + exp(i (k + phi)))

    :param k: momentum, scalar or array
    :param t: time
    :param state: the quench
    :return: complex amplitude, same shape as k
    """
    k = np.asarray(k, dtype=float)
    eps = Dispersion(state.params)(k)
    value = np.exp(1j * (k * state.m - eps * t)) \
        * (1.0 + np.exp(1j * (k + state.phi)))
    if value.ndim == 0:
        return complex(value)
    return value


def _site_basis(sites: np.ndarray, state: QuenchState) -> np.ndarray:
    """
    (n_k x n_sites) matrix with entries f(k, 0) exp(-i k j) / (sqrt(2) n_k):
    the quadrature weights and the t = 0 amplitude folded together
    """
    n_k = state.params.n_k
    k = momentum_grid(n_k)
    f0 = momentum_amplitude(k, 0.0, state)
    return np.exp(-1j * np.outer(k, sites)) * f0[:, None] \
        / (math.sqrt(2.0) * n_k)


def site_amplitudes(sites: Sequence[int], times, state: QuenchState) \
        -> np.ndarray:
    """
    Real-space amplitudes psi_j(t) for several sites and times

    :param sites: site indices
    :param times: times, scalar or 1-D array
    :param state: the quench
    :return: complex array of shape (len(times), len(sites))
    """
    sites = np.atleast_1d(np.asarray(sites, dtype=float))
    times = np.atleast_1d(np.asarray(times, dtype=float))
    eps = Dispersion(state.params).on_grid()
    basis = _site_basis(sites, state)

    out = np.empty((times.size, sites.size), dtype=complex)
    for start in range(0, times.size, TIME_CHUNK):
        stop = min(start + TIME_CHUNK, times.size)
        phase = np.exp(-1j * np.outer(times[start:stop], eps))
        out[start:stop] = phase @ basis
    return out


def site_amplitude(j: int, t: float, state: QuenchState) -> complex:
    """
    psi_j(t), the overlap of the evolved state with a single fermion at
    site j, by trapezoidal quadrature over [-pi, pi)
    """
    return complex(site_amplitudes([j], [t], state)[0, 0])


def light_cone_sites(t_max: float, state: QuenchState, margin: int = 12) \
        -> np.ndarray:
    """
    Sites that can carry weight up to time t_max
    """
    reach = int(math.ceil(max_group_velocity(state.params) * t_max)) + margin
    return np.arange(state.m - reach, state.m + 1 + reach + 1)


def norm_in_window(times, state: QuenchState) -> np.ndarray:
    """
    Sum of |psi_j(t)|^2 over a window that grows with the light cone

    :return: array of norms, one per time
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    sites = light_cone_sites(float(times.max()), state)
    if sites.size > state.params.n_k:
        logger.warning("Light cone (%d sites) is wider than the quadrature "
                       "ring (%d); the norm is taken over the full ring",
                       sites.size, state.params.n_k)
        sites = np.arange(state.m - state.params.n_k // 2,
                          state.m + state.params.n_k // 2)
    psi = site_amplitudes(sites, times, state)
    return np.sum(np.abs(psi) ** 2, axis=1)
