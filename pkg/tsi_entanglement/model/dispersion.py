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

# Single-fermion band of the chain

import numpy as np

from .params import ModelParams, validate_params


def momentum_grid(n_k: int) -> np.ndarray:
    """
    Uniform quadrature nodes k_q = -pi + 2 pi q / n_k, q = 0 .. n_k - 1.
    The trapezoidal rule on this grid is exact for trigonometric
    polynomials of degree below n_k and coincides with a ring of n_k sites.
    """
    return -np.pi + 2.0 * np.pi * np.arange(n_k) / n_k


def reduce_angle(k):
    """Maps k into [-pi, pi)"""
    return np.mod(np.asarray(k, dtype=float) + np.pi, 2.0 * np.pi) - np.pi


def max_group_velocity(params: ModelParams) -> float:
    """
    Upper bound |J| + |J'| on max |d epsilon / dk|, i.e. the light-cone
    speed in sites per unit time
    """
    return abs(params.j_nn) + abs(params.j_tsi)


class Dispersion:
    """
    epsilon(k) = J cos(k) + s (J'/2) cos(2k), where s is fixed by the
    dispersion convention. In units of J this is cos(k) + s (alpha/2) cos(2k);
    in the pure-TSI limit it is s (1/2) cos(2k).
    """

    def __init__(self, params: ModelParams):
        self.params = params
        self.nn = params.j_nn
        self.nnn = params.convention.nnn_sign * params.j_tsi / 2.0

    def __call__(self, k):
        k = reduce_angle(k)
        return self.nn * np.cos(k) + self.nnn * np.cos(2.0 * k)

    def on_grid(self) -> np.ndarray:
        return self(momentum_grid(self.params.n_k))


def dispersion_eval(k, params: ModelParams):
    """
    Evaluates the dispersion relation

    :param k: momentum (radians), scalar or array; reduced mod 2 pi
    :param params: model parameters, validated before use
    :return: energy, float for scalar input
    :raises ParameterError: for invalid params
    """
    params = validate_params(params)
    value = Dispersion(params)(k)
    if np.ndim(value) == 0:
        return float(value)
    return value
