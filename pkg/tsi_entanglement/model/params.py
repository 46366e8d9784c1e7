"""
Model parameters of the extended cluster XX chain with three-spin
interaction (TSI) and their validation.

The chain couples nearest neighbours with the XX exchange ``J`` and
next-nearest neighbours through the TSI strength ``J'``. After the
Jordan-Wigner transformation it is a chain of free spinless fermions, so
everything downstream needs only the couplings, the unit convention and
the momentum quadrature resolution collected here.
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

import dataclasses
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULT_NK = 4096
MIN_NK = 64
ALPHA_RTOL = 1e-12


class ParameterError(ValueError):
    """
    Error for model or run parameters that cannot describe a valid chain
    """
    pass


class EnergyUnit(Enum):
    """
    Which coupling is set to one to fix the time scale
    """

    j_unit = "J"
    jprime_unit = "Jprime"


class DispersionConvention(Enum):
    """
    Relative sign of the next-nearest-neighbour term in the dispersion.

    ``fermionized`` is the band of the fermion Hamiltonian obtained by the
    Jordan-Wigner transformation, J cos(k) - (J'/2) cos(2k).
    ``printed`` is cos(k) + (alpha/2) cos(2k). The two give identical
    concurrences once the Bell phase is shifted by pi.
    """

    fermionized = "fermionized"
    printed = "printed"

    @property
    def nnn_sign(self) -> float:
        if self == DispersionConvention.printed:
            return 1.0
        return -1.0


@dataclass(frozen=True)
class ModelParams:
    """
    Couplings and resolution of the chain. Instances are immutable,
    use :func:`validate_params` (or the ``from_alpha`` and
    ``pure_tsi_limit`` constructors) to obtain a normalized copy.
    """

    j_nn: float = 1.0
    '''Nearest-neighbour XX coupling J'''

    j_tsi: float = 0.0
    '''Three-spin coupling J' '''

    alpha: Optional[float] = None
    '''Ratio J'/J; None in the pure-TSI limit'''

    pure_tsi: bool = False
    '''J = 0 limit, J' is the energy unit'''

    energy_unit: Optional[EnergyUnit] = None
    '''Unit convention; inferred by validation when not given'''

    n_k: int = DEFAULT_NK
    '''Number of momentum quadrature points'''

    convention: DispersionConvention = DispersionConvention.fermionized

    @classmethod
    def from_alpha(cls, alpha: float, n_k: int = DEFAULT_NK,
                   convention: DispersionConvention =
                   DispersionConvention.fermionized) -> "ModelParams":
        """
        Parameters in units of J for a given ratio alpha = J'/J
        """
        return validate_params(cls(j_nn=1.0, j_tsi=float(alpha),
                                   n_k=n_k, convention=convention))

    @classmethod
    def pure_tsi_limit(cls, n_k: int = DEFAULT_NK,
                       convention: DispersionConvention =
                       DispersionConvention.fermionized) -> "ModelParams":
        """
        The J = 0 limit with J' = 1 as the energy unit
        """
        return validate_params(cls(j_nn=0.0, j_tsi=1.0, pure_tsi=True,
                                   n_k=n_k, convention=convention))

    @property
    def label(self) -> str:
        if self.pure_tsi:
            return "pure_tsi"
        return "{:g}".format(self.alpha)

    def describe(self) -> dict:
        """
        Flat description used in result metadata
        """
        return {
            "J": self.j_nn,
            "Jprime": self.j_tsi,
            "alpha": self.label,
            "pure_tsi": self.pure_tsi,
            "energy_unit": self.energy_unit.value if self.energy_unit else None,
            "n_k": self.n_k,
            "convention": self.convention.value
        }


def _is_unit(value: float) -> bool:
    return math.isclose(abs(value), 1.0, rel_tol=0, abs_tol=1e-12)


def validate_params(params: ModelParams) -> ModelParams:
    """
    Checks the parameters and returns a normalized copy: alpha is
    recomputed from the couplings (unless in the pure-TSI limit) and the
    energy unit is inferred when it is not given.

    :param params: parameters to check
    :return: validated ModelParams
    :raises ParameterError: if the couplings, the unit convention or the
        quadrature resolution are inconsistent
    """

    n_k = params.n_k
    if isinstance(n_k, bool) or int(n_k) != n_k:
        raise ParameterError("n_k must be an integer, got {}".format(n_k))
    n_k = int(n_k)
    if n_k < MIN_NK or n_k % 2 != 0:
        raise ParameterError(
            "n_k must be even and at least {:d}, got {:d}".format(MIN_NK, n_k)
        )
    if not isinstance(params.convention, DispersionConvention):
        raise ParameterError("Unknown dispersion convention: {}"
                             .format(params.convention))

    j_nn = float(params.j_nn)
    j_tsi = float(params.j_tsi)
    if not (math.isfinite(j_nn) and math.isfinite(j_tsi)):
        raise ParameterError("Couplings must be finite: J={}, J'={}"
                             .format(j_nn, j_tsi))

    if params.pure_tsi:
        if j_nn != 0:
            raise ParameterError("Pure TSI limit requires J = 0, got {}"
                                 .format(j_nn))
        if params.energy_unit not in (None, EnergyUnit.jprime_unit):
            raise ParameterError("Pure TSI limit is measured in units of J'")
        if not _is_unit(j_tsi):
            raise ParameterError("Pure TSI limit requires |J'| = 1, got {}"
                                 .format(j_tsi))
        return dataclasses.replace(params, j_nn=0.0, j_tsi=j_tsi, alpha=None,
                                   energy_unit=EnergyUnit.jprime_unit,
                                   n_k=n_k)

    if j_nn == 0:
        raise ParameterError("J = 0 is only allowed with the pure_tsi flag")

    alpha = j_tsi / j_nn
    if params.alpha is not None and not math.isclose(
            params.alpha, alpha, rel_tol=ALPHA_RTOL, abs_tol=ALPHA_RTOL):
        raise ParameterError("alpha={} is inconsistent with J'/J={}"
                             .format(params.alpha, alpha))

    unit = params.energy_unit
    if unit is None:
        if _is_unit(j_nn):
            unit = EnergyUnit.j_unit
        elif _is_unit(j_tsi):
            unit = EnergyUnit.jprime_unit
        else:
            raise ParameterError(
                "Either |J| or |J'| must be 1 to fix the time scale, "
                "got J={}, J'={}".format(j_nn, j_tsi)
            )
        logger.debug("Inferred energy unit %s for J=%g, J'=%g",
                     unit.value, j_nn, j_tsi)
    elif unit == EnergyUnit.j_unit and not _is_unit(j_nn):
        raise ParameterError("J_unit requires |J| = 1, got {}".format(j_nn))
    elif unit == EnergyUnit.jprime_unit and not _is_unit(j_tsi):
        raise ParameterError("Jprime_unit requires |J'| = 1, got {}"
                             .format(j_tsi))

    return dataclasses.replace(params, j_nn=j_nn, j_tsi=j_tsi, alpha=alpha,
                               energy_unit=unit, n_k=n_k)
