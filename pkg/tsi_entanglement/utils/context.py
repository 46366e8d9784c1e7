"""
Utilities to create context and configuration objects
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

import argparse
import logging
from enum import Enum
from typing import List, Sequence

import yaml

from tsi_entanglement.model import ParameterError
from tsi_entanglement.utils.io_utils import as_dict

logger = logging.getLogger(__name__)


class Cardinality(Enum):
    """
    Cardinality of a configuration parameter: multiple or singular
    """

    single = "single"
    multiple = "multiple"


class ContextArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that reports usage errors as
    :class:`~tsi_entanglement.model.ParameterError` instead of exiting
    """

    def error(self, message):
        raise ParameterError(message)


class Argument:
    """
    A wrapper class to describe a command-line arguments
    This is practically, a more rigid format for
    :func ArgumentParser.add_argument:
    """

    def __init__(self, name,
                 help: str,
                 type = str,
                 aliases: List = None,
                 default = None,
                 cardinality: Cardinality = Cardinality.single,
                 valid_values = None,
                 required = True,
                 positional = False
                 ):
        """
        All arguments are passed to Argparser

        :param name: attribute name; the option is spelled with dashes,
            e.g. ``alpha_min`` becomes ``--alpha-min``
        :param help:
        :param type:
        :param aliases:
        :param default:
        :param cardinality:
        :param valid_values:
        :param positional: a positional argument (e.g. a command name)
            rather than an option
        """

        if aliases is None:
            aliases = []
        self.name = name
        self.type = type
        self.aliases = aliases
        if self.type == bool and default is None:
            self.default = False
        else:
            self.default = default
        self.cardinality = cardinality
        self.description = help
        self.choices = valid_values
        self.positional = positional
        self.required_flag = self.default is None and required

        return

    @property
    def flag(self) -> str:
        return "--" + self.name.replace('_', '-')

    def get_action(self):
        if self.type == bool:
            if not self.default:
                return 'store_true'
            return 'store_false'
        return None

    def get_nargs(self):
        if self.cardinality == Cardinality.single:
            return None
        if self.default:
            return '*'
        return '+'

    def get_help(self):
        if not self.is_required():
            h = self.description
            if h.strip() and h.strip()[-1] not in {'.', ','}:
                h += ', '
            h += "default: " + str(self.default)
            return h
        return self.description

    def is_required(self):
        return self.required_flag

    def add_to(self, parser):
        if self.positional:
            parser.add_argument(self.name, choices=self.choices,
                                help=self.get_help())
            return

        args = [self.flag]
        for alias in self.aliases:
            if len(alias) == 1:
                args.append("-" + alias)
            else:
                args.append("--" + alias)

        action = self.get_action()
        nargs = self.get_nargs()
        # Values not given on the command line are absent from the parsed
        # namespace; defaults are applied after the configuration file
        kwargs = {
            "dest": self.name,
            "default": argparse.SUPPRESS,
            "help": self.get_help(),
            "required": False
        }
        if action:
            kwargs['action'] = action
        else:
            kwargs["type"] = self.type
        if nargs:
            kwargs['nargs'] = nargs
        if self.choices:
            kwargs["choices"] = self.choices
        parser.add_argument(*args, **kwargs)

    def __str__(self):
        return self.flag


class Context:
    """
    Generic class allowing to build context and configuration objects
    and initialize them using command line arguments and, optionally, a
    YAML or JSON configuration file
    """

    _config = Argument("config",
                       help="YAML or JSON file with parameter values; "
                            "command line values take precedence",
                       default=None,
                       required=False)

    def __init__(self, subclass,
                 description = None,
                 include_default: bool = True):
        """
        Creates a new object

        :param subclass: A concrete class containing configuration information
            Configuration options must be defined as class memebers with names,
            starting with one '_' characters and values be instances of
            :class Argument:
        :param description: Optional text to use as description.
            If not specified, then it is extracted from subclass documentation
        """

        self.arguments = None
        if include_default:
            self.config = None
            '''Optional configuration file'''

        if description:
            self.description = description
        else:
            self.description = subclass.__doc__

        self._attrs = [
            attr[1:] for attr in subclass.__dict__
            if attr[0] == '_' and attr[1] != '_'
            and isinstance(subclass.__dict__[attr], Argument)
        ]

        if include_default:
            self._attrs += [
                attr[1:] for attr in Context.__dict__
                if attr[0] == '_' and attr[1] != '_'
                and isinstance(Context.__dict__[attr], Argument)
                and attr[1:] not in self._attrs
            ]

    def instantiate(self, argv: Sequence[str] = None):
        """
        Parses the command line (``sys.argv`` unless ``argv`` is given)

        :raises ParameterError: on usage errors and invalid values
        """
        self.arguments = [getattr(self, '_'+attr) for attr in self._attrs]
        return self._instantiate(argv)

    def _parser(self):
        parser = ContextArgumentParser(description=self.description)
        for arg in self.arguments:
            arg.add_to(parser)
        return parser

    def _instantiate(self, argv = None):
        args = vars(self._parser().parse_args(argv))
        from_file = {}
        config = args.get("config")
        if config:
            try:
                from_file = as_dict(config)
            except (OSError, ValueError, yaml.YAMLError) as e:
                raise ParameterError("Cannot read configuration {}: {}"
                                     .format(config, e))
            if not isinstance(from_file, dict):
                raise ParameterError("Configuration {} must be a mapping"
                                     .format(config))
            unknown = set(from_file) - set(self._attrs)
            if unknown:
                raise ParameterError("Unknown parameters in {}: {}"
                                     .format(config, sorted(unknown)))
            logger.info("Read %d parameter values from %s",
                        len(from_file), config)

        for attr in self._attrs:
            arg: Argument = getattr(self, '_'+attr)
            if attr in args:
                value = args[attr]
            elif attr in from_file:
                value = from_file[attr]
            elif arg.is_required():
                raise ParameterError("Missing required argument " + str(arg))
            else:
                value = arg.default
            setattr(self, attr, self.validate(attr, value))
        self.validate_all()
        return self

    def default(self):
        for attr in self._attrs:
            arg: Argument = getattr(self, '_'+attr)
            setattr(self, attr, arg.default)

    def __str__(self):
        return "; ".join([
            "{}: {}".format(attr, getattr(self, attr)) for attr in self._attrs
        ])

    def validate(self, attr, value):
        """
        Subclasses can override this method to implement custom handling
        of command line arguments

        :param attr: Command line argument name
        :param value: Value returned by argparse
        :return: value to use
        """

        return value

    def validate_all(self):
        """
        Subclasses can override this method to check constraints between
        several arguments; called once every attribute is set
        """

        pass

    @classmethod
    def enum(cls, enum_cls, s: str):
        """
        A helper method to return Enum value by its name

        :param cls: Enum class
        :param s: name of a member in Enum class
        :return: value of the member
        """

        if isinstance(s, enum_cls):
            return s
        d = {e.name: e for e in enum_cls}
        d.update({str(e.value): e for e in enum_cls})
        if s not in d:
            raise ParameterError("Invalid value {} for {}; expected one of {}"
                                 .format(s, enum_cls.__name__,
                                         sorted(e.name for e in enum_cls)))
        return d[s]
