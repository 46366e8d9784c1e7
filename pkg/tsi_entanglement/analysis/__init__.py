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

from .series import PairKind, ConcurrenceSeries, concurrence_series, \
    decay_exponent, time_grid, DEFAULT_T0, DEFAULT_TMAX, DEFAULT_DT
from .esd import EsdEvents, esd_times, DEFAULT_REFINE_TOL, DEFAULT_ZERO_TOL
from .witness import WitnessResult, WitnessScan, witness, witness_scan, \
    DEFAULT_ONSET_THRESHOLD
from .scans import StaticScan, EnvironmentComparison, \
    static_concurrence_scan, environment_comparison, death_time_scan
from .sweep import SweepSettings, alpha_range, sweep

## handle log set up. the tsi_entanglement.analysis logger made here can be used to control all logging for all analysis
import logging

logger = logging.getLogger(__name__)
del logging
