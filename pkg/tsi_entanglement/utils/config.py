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

import math
from enum import Enum

from tsi_entanglement.model import ParameterError, DispersionConvention, \
    ModelParams, DEFAULT_NK, MIN_NK
from tsi_entanglement.analysis import PairKind, SweepSettings, alpha_range, \
    DEFAULT_T0, DEFAULT_TMAX, DEFAULT_DT, DEFAULT_REFINE_TOL, \
    DEFAULT_ZERO_TOL
from tsi_entanglement.oracle import DEFAULT_RING, MIN_RING
from tsi_entanglement.qc import VerifyCase
from tsi_entanglement.utils.context import Context, Argument, Cardinality
from tsi_entanglement.utils.io_utils import OutputFormat


class Command(Enum):
    series = "series"
    witness_scan = "witness-scan"
    static_scan = "static-scan"
    environment_compare = "environment-compare"
    verify = "verify"


class RunConfig(Context):
    """
    Entanglement dynamics of a Bell pair in the extended cluster XX chain
    with three-spin interaction: concurrence series, ESD and revival,
    non-Markovianity witness scans and verification against exact
    references
    """

    _command = Argument("command",
                        help="What to compute",
                        positional=True,
                        valid_values=[c.value for c in Command])
    _alpha = Argument("alpha",
                      help="TSI ratio J'/J (series, environment-compare)",
                      type=float,
                      required=False)
    _pure_tsi = Argument("pure_tsi",
                         help="Use the pure-TSI limit J = 0 instead of alpha",
                         type=bool)
    _phi = Argument("phi",
                    help="Phase of the initial Bell pair",
                    type=float,
                    default=0.0)
    _t0 = Argument("t0",
                   help="First time of the window",
                   type=float,
                   default=DEFAULT_T0)
    _tmax = Argument("tmax",
                     help="Last time of the window",
                     type=float,
                     default=DEFAULT_TMAX)
    _dt = Argument("dt",
                   help="Time step",
                   type=float,
                   default=DEFAULT_DT)
    _pair = Argument("pair",
                     help="Observed nearest-neighbour pair",
                     default=PairKind.system.value,
                     valid_values=[p.value for p in PairKind])
    _nk = Argument("nk",
                   help="Number of momentum quadrature points",
                   type=int,
                   default=DEFAULT_NK)
    _alpha_min = Argument("alpha_min",
                          help="Smallest alpha of a scan",
                          type=float,
                          default=0.0)
    _alpha_max = Argument("alpha_max",
                          help="Largest alpha of a scan",
                          type=float,
                          default=2.5)
    _alpha_step = Argument("alpha_step",
                           help="Step of the alpha grid",
                           type=float,
                           default=0.02)
    _times = Argument("times",
                      help="Fixed times of the static scan",
                      type=float,
                      cardinality=Cardinality.multiple,
                      default=[1.0, 2.0, 3.0])
    _out = Argument("out",
                    help="Output file; standard output when omitted",
                    aliases=["o"],
                    required=False)
    _format = Argument("format",
                       help="Output format",
                       default=OutputFormat.csv.value,
                       valid_values=[f.value for f in OutputFormat])
    _convention = Argument("convention",
                           help="Sign convention of the next-nearest-neighbour"
                                " term of the dispersion",
                           default=DispersionConvention.fermionized.value,
                           valid_values=[c.value
                                         for c in DispersionConvention])
    _workers = Argument("workers",
                        help="Number of processes for alpha scans",
                        type=int,
                        default=1)
    _case = Argument("case",
                     help="Which references the verify command checks",
                     default=VerifyCase.all.value,
                     valid_values=[c.value for c in VerifyCase])
    _ring = Argument("ring",
                     help="Number of sites of the oracle ring",
                     type=int,
                     default=DEFAULT_RING)
    _zero_tol = Argument("zero_tol",
                         help="Largest local minimum of C counted as a "
                              "touching zero (ESD)",
                         type=float,
                         default=DEFAULT_ZERO_TOL)
    _refine_tol = Argument("refine_tol",
                           help="Time resolution of refined ESD events",
                           type=float,
                           default=DEFAULT_REFINE_TOL)

    def __init__(self, doc = None):
        self.command = None
        '''Command to run'''
        self.alpha = None
        '''TSI ratio J'/J'''
        self.pure_tsi = None
        '''Pure-TSI limit flag'''
        self.phi = None
        '''Bell phase'''
        self.t0 = None
        self.tmax = None
        self.dt = None
        self.pair = None
        '''Observed pair'''
        self.nk = None
        '''Momentum quadrature points'''
        self.alpha_min = None
        self.alpha_max = None
        self.alpha_step = None
        self.times = None
        '''Times of the static scan'''
        self.out = None
        '''Output path'''
        self.format = None
        self.convention = None
        self.workers = None
        self.case = None
        self.ring = None
        self.zero_tol = None
        self.refine_tol = None
        super().__init__(RunConfig, doc)

    def validate(self, attr, value):
        value = super().validate(attr, value)

        if attr == "command":
            return self.enum(Command, value)
        if attr == "pair":
            return self.enum(PairKind, value)
        if attr == "format":
            return self.enum(OutputFormat, value)
        if attr == "convention":
            return self.enum(DispersionConvention, value)
        if attr == "case":
            return self.enum(VerifyCase, value)
        if attr == "pure_tsi":
            return bool(value)
        if attr in ("alpha", "phi", "t0", "tmax", "dt", "alpha_min",
                    "alpha_max", "alpha_step", "zero_tol", "refine_tol"):
            if value is None:
                return None
            value = _as_float(attr, value)
        if attr in ("nk", "workers", "ring"):
            value = _as_int(attr, value)
        if attr == "times":
            if isinstance(value, (int, float)):
                value = [value]
            value = [_as_float(attr, v) for v in value]
            if not value:
                raise ParameterError("--times needs at least one time")
            if any(v < 0 for v in value):
                raise ParameterError("--times must be non-negative")
        if attr == "dt" and not value > 0:
            raise ParameterError("--dt must be positive, got {}".format(value))
        if attr == "t0" and value < 0:
            raise ParameterError("--t0 must be non-negative, got {}"
                                 .format(value))
        if attr == "alpha_step" and not value > 0:
            raise ParameterError("--alpha-step must be positive, got {}"
                                 .format(value))
        if attr == "nk" and (value < MIN_NK or value % 2):
            raise ParameterError("--nk must be even and at least {}, got {}"
                                 .format(MIN_NK, value))
        if attr == "ring" and (value < MIN_RING or value % 2):
            raise ParameterError("--ring must be even and at least {}, got {}"
                                 .format(MIN_RING, value))
        if attr == "workers" and value < 1:
            raise ParameterError("--workers must be at least 1")
        if attr == "zero_tol" and value < 0:
            raise ParameterError("--zero-tol must be non-negative")
        if attr == "refine_tol" and not value > 0:
            raise ParameterError("--refine-tol must be positive")
        return value

    def validate_all(self):
        if not self.tmax > self.t0:
            raise ParameterError("--tmax ({}) must exceed --t0 ({})"
                                 .format(self.tmax, self.t0))
        if self.command in (Command.witness_scan, Command.static_scan):
            self.alpha_grid()
        if self.command in (Command.series, Command.environment_compare):
            if self.pure_tsi and self.alpha is not None:
                raise ParameterError("--alpha and --pure-tsi are exclusive")
            if not self.pure_tsi and self.alpha is None:
                raise ParameterError("Either --alpha or --pure-tsi is "
                                     "required for " + self.command.value)
            self.model_params()

    def alpha_grid(self):
        return alpha_range(self.alpha_min, self.alpha_max, self.alpha_step)

    def model_params(self) -> ModelParams:
        if self.pure_tsi:
            return ModelParams.pure_tsi_limit(self.nk, self.convention)
        return ModelParams.from_alpha(self.alpha, self.nk, self.convention)

    def sweep_settings(self) -> SweepSettings:
        return SweepSettings(phi=self.phi, n_k=self.nk,
                             convention=self.convention)

    def metadata(self) -> dict:
        """
        Every parameter of the run, recorded in the output header
        """
        return {
            "command": self.command.value,
            "alpha": "pure_tsi" if self.pure_tsi else self.alpha,
            "pure_tsi": self.pure_tsi,
            "phi": self.phi,
            "t0": self.t0,
            "t_max": self.tmax,
            "dt": self.dt,
            "pair": self.pair.value,
            "n_k": self.nk,
            "convention": self.convention.value,
            "alpha_min": self.alpha_min,
            "alpha_max": self.alpha_max,
            "alpha_step": self.alpha_step,
            "times": self.times,
            "zero_tol": self.zero_tol,
            "refine_tol": self.refine_tol
        }


def _as_float(attr, value) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ParameterError("{} must be a number, got {!r}"
                             .format(attr, value))
    if not math.isfinite(value):
        raise ParameterError("{} must be finite".format(attr))
    return value


def _as_int(attr, value) -> int:
    try:
        valid = not isinstance(value, bool) and int(value) == value
    except (TypeError, ValueError):
        valid = False
    if not valid:
        raise ParameterError("{} must be an integer, got {!r}"
                             .format(attr, value))
    return int(value)
