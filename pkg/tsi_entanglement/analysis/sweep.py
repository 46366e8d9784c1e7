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

# Shared helpers for sweeps over the TSI ratio alpha

import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Sequence, Optional

import numpy as np

from tsi_entanglement.model import ParameterError, DispersionConvention, \
    DEFAULT_NK
from tsi_entanglement.dynamics import QuenchState

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSettings:
    """
    Everything a worker needs to rebuild a quench for one alpha
    """

    phi: float = 0.0
    n_k: int = DEFAULT_NK
    convention: DispersionConvention = DispersionConvention.fermionized
    m: int = 0

    def state(self, alpha: Optional[float]) -> QuenchState:
        """
        :param alpha: TSI ratio, or None for the pure-TSI limit
        """
        if alpha is None:
            return QuenchState.pure_tsi(self.m, self.phi, n_k=self.n_k,
                                       convention=self.convention)
        return QuenchState.for_alpha(alpha, self.m, self.phi, n_k=self.n_k,
                                     convention=self.convention)


def alpha_range(alpha_min: float, alpha_max: float, step: float) \
        -> np.ndarray:
    """
    alpha_min, alpha_min + step, ... up to alpha_max inclusive (within
    round-off); the values are rounded to 12 digits so that grids print
    cleanly

    :raises ParameterError: for a non-positive step or an empty range
    """
    if not step > 0:
        raise ParameterError("alpha step must be positive, got {}"
                             .format(step))
    if alpha_max < alpha_min:
        raise ParameterError("Empty alpha range [{}, {}]"
                             .format(alpha_min, alpha_max))
    n = int(np.floor((alpha_max - alpha_min) / step + 1e-9))
    return np.round(alpha_min + step * np.arange(n + 1), 12)


def check_alpha_grid(alpha_grid: Sequence[float]) -> np.ndarray:
    grid = np.atleast_1d(np.asarray(alpha_grid, dtype=float))
    if grid.size == 0:
        raise ParameterError("alpha grid is empty")
    if not np.all(np.isfinite(grid)):
        raise ParameterError("alpha grid contains non-finite values")
    return grid


def sweep(func: Callable, items: Sequence, workers: int = 1,
          what: str = "alpha") -> list:
    """
    Applies a picklable top-level function to every item, in order.
    Results do not depend on the number of workers.
    """
    items = list(items)
    if workers is None or workers < 1:
        raise ParameterError("workers must be at least 1, got {}"
                             .format(workers))
    if workers == 1 or len(items) < 2:
        results = []
        for n, item in enumerate(items):
            if n % 10 == 0 or n == len(items) - 1:
                logger.info("Scanning %s %d of %d", what, n + 1, len(items))
            results.append(func(item))
        return results
    logger.info("Scanning %d values of %s with %d workers", len(items), what,
                workers)
    with Pool(workers) as pool:
        return pool.map(func, items)
