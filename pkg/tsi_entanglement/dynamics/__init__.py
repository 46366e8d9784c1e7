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

from .quench import QuenchState, momentum_amplitude, site_amplitude, \
    site_amplitudes, norm_in_window, light_cone_sites
from .correlators import PairCorrelators, CorrelatorMethod, \
    CorrelatorConsistencyError, pair_correlators, pair_correlator_arrays, \
    correlators_from_amplitudes, correlator_arrays

## handle log set up. the tsi_entanglement.dynamics logger made here can be used to control all logging for the dynamics
import logging

logger = logging.getLogger(__name__)
del logging
