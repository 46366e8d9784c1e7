"""
Exact single-particle propagation on a finite periodic ring.

The fermion hopping matrix of the chain is circulant; its eigenvalues are
the dispersion sampled at k = 2 pi q / n_sites. Evolution is done through
the eigendecomposition, e^{-iHt} = V e^{-iEt} V^T, with no time stepping
and no momentum quadrature, so it is independent of the dynamics package.
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
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from tsi_entanglement.dynamics import QuenchState, correlator_arrays
from tsi_entanglement.model import ModelParams, validate_params, \
    max_group_velocity

logger = logging.getLogger(__name__)

MIN_RING = 16
DEFAULT_RING = 4096
LIGHT_CONE_MARGIN = 8
NORM_TOL = 1e-10
TIME_CHUNK = 128


class OracleRangeError(ValueError):
    """
    Error for a ring that is too small, or an input the ring oracle
    cannot propagate faithfully
    """
    pass


@dataclass(eq=False)
class RingHamiltonian:
    """
    Hopping matrix of one fermion on a ring of n_sites sites
    """

    n_sites: int
    hop_nn: float
    '''Amplitude of the nearest-neighbour hop'''
    hop_nnn: float
    '''Amplitude of the next-nearest-neighbour hop'''
    matrix: np.ndarray
    _eigen: Optional[Tuple[np.ndarray, np.ndarray]] = \
        field(default=None, init=False, repr=False)

    def diagonalize(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Eigenvalues and orthonormal eigenvectors, computed once
        """
        if self._eigen is None:
            logger.debug("Diagonalizing %d-site ring", self.n_sites)
            self._eigen = scipy.linalg.eigh(self.matrix)
        return self._eigen

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.diagonalize()[0]

    def site(self, j: int) -> int:
        """
        Ring index of chain site j
        """
        return int(j) % self.n_sites


def build_ring(n_sites: int, params: ModelParams) -> RingHamiltonian:
    """
    Circulant hopping matrix reproducing the dispersion of ``params``:
    hop_nn = J/2 and hop_nnn = +-J'/4, so that the eigenvalues are
    2 hop_nn cos k + 2 hop_nnn cos 2k

    :param n_sites: even ring size, at least 16
    :param params: model parameters
    :return: RingHamiltonian
    :raises OracleRangeError: for an odd or tiny ring
    """
    if int(n_sites) != n_sites or n_sites < MIN_RING or n_sites % 2:
        raise OracleRangeError("Ring size must be even and at least {:d}, "
                               "got {}".format(MIN_RING, n_sites))
    n_sites = int(n_sites)
    params = validate_params(params)
    hop_nn = params.j_nn / 2.0
    hop_nnn = params.convention.nnn_sign * params.j_tsi / 4.0

    column = np.zeros(n_sites)
    column[1] = column[-1] = hop_nn
    column[2] = column[-2] = hop_nnn
    return RingHamiltonian(n_sites, hop_nn, hop_nnn,
                           scipy.linalg.circulant(column))


def check_light_cone(params: ModelParams, t: float, n_sites: int):
    """
    Refuses times at which the fastest mode could wrap around the ring

    :raises OracleRangeError: if (|J| + |J'|) t > n_sites/2 - 8
    """
    reach = max_group_velocity(params) * float(t)
    limit = n_sites / 2.0 - LIGHT_CONE_MARGIN
    if reach > limit:
        logger.warning("Light cone %.1f exceeds the safe range %.1f of a "
                       "%d-site ring at t=%g", reach, limit, n_sites, t)
        raise OracleRangeError("t={} is too long for a {}-site ring"
                               .format(t, n_sites))


def ring_propagate(h: RingHamiltonian, initial, t,
                   sites: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    Exact amplitudes e^{-iHt} psi(0)

    :param h: ring Hamiltonian
    :param initial: normalized amplitudes on all ring sites
    :param t: time, scalar or 1-D array
    :param sites: ring indices to return; all sites when None
    :return: array of shape (n_sites_returned,) for scalar t, otherwise
        (len(t), n_sites_returned)
    :raises OracleRangeError: for a wrongly sized or non-normalized input
    """
    psi0 = np.asarray(initial, dtype=complex)
    if psi0.shape != (h.n_sites,):
        raise OracleRangeError("Expected {} amplitudes, got shape {}"
                               .format(h.n_sites, psi0.shape))
    norm = float(np.vdot(psi0, psi0).real)
    if abs(norm - 1.0) > NORM_TOL:
        raise OracleRangeError("Initial amplitudes are not normalized: "
                               "norm {:.12g}".format(norm))

    energies, vectors = h.diagonalize()
    coefficients = vectors.T @ psi0
    rows = vectors if sites is None else vectors[np.asarray(sites) %
                                                 h.n_sites]
    scalar = np.ndim(t) == 0
    times = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty((times.size, rows.shape[0]), dtype=complex)
    for start in range(0, times.size, TIME_CHUNK):
        stop = min(start + TIME_CHUNK, times.size)
        phases = np.exp(-1j * np.outer(times[start:stop], energies))
        out[start:stop] = (phases * coefficients) @ rows.T
    if scalar:
        return out[0]
    return out


def ring_energy(h: RingHamiltonian, amplitudes) -> np.ndarray:
    """
    <psi|H|psi> for one amplitude vector or a stack of them (one per row)
    """
    psi = np.asarray(amplitudes, dtype=complex)
    energy = np.einsum("...i,ij,...j->...", psi.conj(), h.matrix, psi).real
    if energy.ndim == 0:
        return float(energy)
    return energy


def bell_amplitudes(h: RingHamiltonian, m: int = 0,
                    phi: float = 0.0) -> np.ndarray:
    """
    (|m> + e^{i phi} |m+1>)/sqrt(2) as amplitudes on the ring
    """
    psi = np.zeros(h.n_sites, dtype=complex)
    psi[h.site(m)] = 1.0 / np.sqrt(2.0)
    psi[h.site(m + 1)] = np.exp(1j * phi) / np.sqrt(2.0)
    return psi


def single_site_amplitudes(h: RingHamiltonian, j: int = 0) -> np.ndarray:
    psi = np.zeros(h.n_sites, dtype=complex)
    psi[h.site(j)] = 1.0
    return psi


def ring_pair_correlators(h: RingHamiltonian, state: QuenchState, times,
                          offset: int = 0) -> dict:
    """
    Correlators of the pair (m + offset, m + offset + 1) after the Bell pair
    of ``state`` is released on the ring

    :param h: ring built for ``state.params``
    :param state: the quench
    :param times: times, scalar or 1-D array
    :param offset: 0 for the system pair, 1 for the edge, 2 for the
        environment
    :return: dictionary of arrays as from
        :func:`tsi_entanglement.dynamics.correlator_arrays`
    :raises OracleRangeError: if the latest time violates the light-cone
        guard
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    check_light_cone(state.params, float(times.max()), h.n_sites)
    i = state.m + offset
    psi = ring_propagate(h, bell_amplitudes(h, state.m, state.phi), times,
                         sites=[h.site(i), h.site(i + 1)])
    return correlator_arrays(psi[:, 0], psi[:, 1])
