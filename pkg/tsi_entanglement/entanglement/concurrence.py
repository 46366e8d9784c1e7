"""
Two-spin reduced density matrix and its concurrence.

The reduced state of a nearest-neighbour pair is an X-state in the basis
{up-up, up-down, down-up, down-down}::

    | X+   0    0    0  |
    | 0    Y+   Z*   0  |
    | 0    Z    Y-   0  |
    | 0    0    0    X- |

Its concurrence has the closed form max(0, 2(|Z| - sqrt(X+ X-))). The
generic Wootters recipe is kept next to it for arbitrary two-qubit states
and as a cross-check of the closed form.
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
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from tsi_entanglement.dynamics import PairCorrelators, \
    CorrelatorConsistencyError

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-9
PSD_TOL = 1e-9
CLAMP_TOL = 1e-9

# Eigenvalues of rho (and X+, X- in the closed form) below this are exact
# zeros polluted by round-off; their square roots would otherwise leak ~1e-8
# into the concurrence.
EIGEN_FLOOR = 1e-12

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)


class DensityMatrixError(ValueError):
    """
    Error for matrices that are not valid two-qubit density matrices
    """
    pass


@dataclass(frozen=True)
class TwoSpinDensityMatrix:
    """
    4 x 4 density matrix in the basis {up-up, up-down, down-up, down-down}
    """

    rho: np.ndarray

    @classmethod
    def from_matrix(cls, matrix) -> "TwoSpinDensityMatrix":
        """
        Wraps an arbitrary matrix after checking that it is a valid state
        """
        rho = np.array(matrix, dtype=complex)
        out = cls(rho)
        out.check()
        return out

    def eigenvalues(self) -> np.ndarray:
        return scipy.linalg.eigvalsh(self.rho)

    def check(self) -> "TwoSpinDensityMatrix":
        """
        Hermitian within 1e-12, trace one within 1e-9, eigenvalues above
        -1e-9

        :raises DensityMatrixError: on the first violated condition
        """
        rho = self.rho
        if rho.shape != (4, 4):
            raise DensityMatrixError("Expected a 4x4 matrix, got shape {}"
                                     .format(rho.shape))
        if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
            raise DensityMatrixError("Matrix is not Hermitian")
        trace = np.trace(rho).real
        if abs(trace - 1.0) > TRACE_TOL:
            raise DensityMatrixError("Trace is {:.12g}, expected 1"
                                     .format(trace))
        smallest = self.eigenvalues().min()
        if smallest < -PSD_TOL:
            raise DensityMatrixError("Matrix is not positive semi-definite, "
                                     "smallest eigenvalue {:.3e}"
                                     .format(smallest))
        return self


def build_density_matrix(c: PairCorrelators) -> TwoSpinDensityMatrix:
    """
    Populates the X-state matrix from the pair correlators; no
    renormalization is applied

    :param c: correlators of the pair
    :return: TwoSpinDensityMatrix
    :raises CorrelatorConsistencyError: if the correlators violate their
        invariants beyond tolerance
    """
    c.check()
    rho = np.diag([c.x_plus, c.y_plus, c.y_minus, c.x_minus]).astype(complex)
    rho[1, 2] = np.conj(c.z)
    rho[2, 1] = c.z
    return TwoSpinDensityMatrix(rho)


def _floored(x):
    return np.where(x < EIGEN_FLOOR, 0.0, x)


def _clamped_products(c: PairCorrelators) -> float:
    if c.x_plus < -CLAMP_TOL or c.x_minus < -CLAMP_TOL:
        raise CorrelatorConsistencyError(
            "Negative X+ ({:.3e}) or X- ({:.3e}) beyond tolerance"
            .format(c.x_plus, c.x_minus)
        )
    return float(np.sqrt(_floored(c.x_plus) * _floored(c.x_minus)))


def raw_concurrence(c: PairCorrelators) -> float:
    """
    2(|Z| - sqrt(X+ X-)) before clamping at zero
    """
    return 2.0 * (abs(c.z) - _clamped_products(c))


def concurrence_closed_form(c: PairCorrelators) -> float:
    """
    Concurrence of the X-state, max(0, 2(|Z| - sqrt(X+ X-))).
    X+ and X- slightly below zero (within 1e-9) or below 1e-12 are treated
    as zero.

    :raises CorrelatorConsistencyError: if X+ or X- < -1e-9
    """
    return max(0.0, raw_concurrence(c))


def raw_concurrence_arrays(correlators: dict) -> np.ndarray:
    """
    Vectorised :func:`raw_concurrence` over arrays produced by
    :func:`tsi_entanglement.dynamics.correlator_arrays`
    """
    x_plus = correlators["x_plus"]
    x_minus = correlators["x_minus"]
    if np.any(x_plus < -CLAMP_TOL) or np.any(x_minus < -CLAMP_TOL):
        raise CorrelatorConsistencyError(
            "Negative X+ ({:.3e}) or X- ({:.3e}) beyond tolerance"
            .format(x_plus.min(), x_minus.min())
        )
    products = _floored(x_plus) * _floored(x_minus)
    return 2.0 * (np.abs(correlators["z"]) - np.sqrt(products))


def _square_root(rho: np.ndarray) -> np.ndarray:
    values, vectors = scipy.linalg.eigh(rho)
    values = np.where(values < EIGEN_FLOOR, 0.0, values)
    return (vectors * np.sqrt(values)) @ vectors.conj().T


def concurrence_wootters(rho: TwoSpinDensityMatrix) -> float:
    """
    Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the
    square roots of the eigenvalues of R = rho rho~ in decreasing order and
    rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).

    The eigenvalues of R equal those of sqrt(rho) rho~ sqrt(rho), so l_i are
    the singular values of sqrt(rho) (sigma_y x sigma_y) sqrt(rho)*, which
    avoids taking square roots of tiny, noisy eigenvalues of R.

    :raises DensityMatrixError: for non-Hermitian or non-PSD input
    """
    rho.check()
    root = _square_root(rho.rho)
    lambdas = scipy.linalg.svdvals(root @ SIGMA_YY @ root.conj())
    lambdas = np.sort(lambdas)[::-1]
    return max(0.0, float(lambdas[0] - lambdas[1:].sum()))
