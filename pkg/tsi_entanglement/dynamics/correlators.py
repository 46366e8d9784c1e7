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
Two-site correlators of the evolved state for a nearest-neighbour pair
(i, i+1): Z = <a_i^+ a_{i+1}>, the occupations and the four diagonal
entries X+, X-, Y+, Y- of the reduced density matrix.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from tsi_entanglement.model import momentum_grid
from .quench import QuenchState, site_amplitudes, momentum_amplitude

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


class CorrelatorConsistencyError(ValueError):
    """
    Error for correlators that cannot come from a physical state
    """
    pass


class CorrelatorMethod(Enum):
    """
    ``factorized`` uses Z = conj(psi_i) psi_{i+1}, <n_i> = |psi_i|^2;
    ``integral`` evaluates the double momentum integrals as written.
    """

    factorized = "factorized"
    integral = "integral"


@dataclass(frozen=True)
class PairCorrelators:
    """
    Correlators of sites i and j = i + 1 at one time point
    """

    z: complex
    n_i: float
    n_j: float
    x_plus: float
    x_minus: float
    y_plus: float
    y_minus: float

    @classmethod
    def from_moments(cls, z: complex, n_i: float, n_j: float) \
            -> "PairCorrelators":
        """
        X+ = <n_i><n_j> - |Z|^2, X- = 1 - <n_i> - <n_j> + X+,
        Y+ = <n_i> - X+, Y- = <n_j> - X+
        """
        z = complex(z)
        x_plus = n_i * n_j - abs(z) ** 2
        return cls(z=z, n_i=float(n_i), n_j=float(n_j),
                   x_plus=float(x_plus),
                   x_minus=float(1.0 - n_i - n_j + x_plus),
                   y_plus=float(n_i - x_plus),
                   y_minus=float(n_j - x_plus))

    def violations(self, tol: float = TOLERANCE) -> list:
        """
        :return: list of human readable invariant violations, empty if none
        """
        out = []
        trace = self.x_plus + self.y_plus + self.y_minus + self.x_minus
        z2 = abs(self.z) ** 2
        if abs(trace - 1.0) > tol:
            out.append("trace {:.3e} != 1".format(trace))
        if self.x_plus < -tol:
            out.append("X+ = {:.3e} < 0".format(self.x_plus))
        if self.x_minus < -tol:
            out.append("X- = {:.3e} < 0".format(self.x_minus))
        if z2 > self.y_plus * self.y_minus + tol:
            out.append("|Z|^2 = {:.3e} > Y+ Y-".format(z2))
        if z2 > self.n_i * self.n_j + tol:
            out.append("|Z|^2 = {:.3e} > n_i n_j".format(z2))
        return out

    def check(self, tol: float = TOLERANCE) -> "PairCorrelators":
        problems = self.violations(tol)
        if problems:
            raise CorrelatorConsistencyError("; ".join(problems))
        return self


def correlators_from_amplitudes(psi_i: complex, psi_j: complex) \
        -> PairCorrelators:
    """
    Correlators of a single-excitation state from the two site amplitudes
    """
    return PairCorrelators.from_moments(
        np.conj(psi_i) * psi_j, abs(psi_i) ** 2, abs(psi_j) ** 2
    )


def correlator_arrays(psi_i: np.ndarray, psi_j: np.ndarray) -> dict:
    """
    Vectorised :func:`correlators_from_amplitudes` over a time grid

    :return: dictionary of arrays keyed by PairCorrelators field names
    """
    z = np.conj(psi_i) * psi_j
    n_i = np.abs(psi_i) ** 2
    n_j = np.abs(psi_j) ** 2
    x_plus = n_i * n_j - np.abs(z) ** 2
    return {
        "z": z,
        "n_i": n_i,
        "n_j": n_j,
        "x_plus": x_plus,
        "x_minus": 1.0 - n_i - n_j + x_plus,
        "y_plus": n_i - x_plus,
        "y_minus": n_j - x_plus
    }


def _integral_moments(i: int, t: float, state: QuenchState):
    """
    Z = 1/(8 pi^2) int int conj(f(k)) f(k') exp(i[(k - k') i - k']) dk dk'
    <n_i> = 1/(8 pi^2) int int conj(f(k)) f(k') exp(i (k - k') i) dk dk'

    The integrand separates into a k and a k' factor, so each double
    integral is the product of two single trapezoidal sums.
    """
    n_k = state.params.n_k
    k = momentum_grid(n_k)
    dk = 2.0 * np.pi / n_k
    f = momentum_amplitude(k, t, state)
    prefactor = 1.0 / (8.0 * np.pi ** 2)

    left_i = np.sum(np.conj(f) * np.exp(1j * k * i)) * dk
    right_i = np.sum(f * np.exp(-1j * k * i)) * dk
    right_j = np.sum(f * np.exp(-1j * k * (i + 1))) * dk
    left_j = np.sum(np.conj(f) * np.exp(1j * k * (i + 1))) * dk

    z = prefactor * left_i * right_j
    n_i = (prefactor * left_i * right_i).real
    n_j = (prefactor * left_j * right_j).real
    return z, n_i, n_j


def pair_correlators(i: int, t: float, state: QuenchState,
                     method: CorrelatorMethod = CorrelatorMethod.factorized) \
        -> PairCorrelators:
    """
    All correlators of the nearest-neighbour pair (i, i+1) at time t

    :param i: left site of the pair
    :param t: time
    :param state: the quench
    :param method: factorized (fast) or integral (definition)
    :return: PairCorrelators
    """
    method = CorrelatorMethod(method)
    if method == CorrelatorMethod.integral:
        return PairCorrelators.from_moments(*_integral_moments(i, t, state))
    psi = site_amplitudes([i, i + 1], [t], state)[0]
    return correlators_from_amplitudes(psi[0], psi[1])


def pair_correlator_arrays(i: int, times, state: QuenchState) -> dict:
    """
    Factorized correlators of the pair (i, i+1) on a time grid
    """
    psi = site_amplitudes([i, i + 1], times, state)
    return correlator_arrays(psi[:, 0], psi[:, 1])
