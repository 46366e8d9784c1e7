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

import codecs
import csv
import gzip
import io
import json
import logging
import math
import os
import sys
from abc import ABC, abstractmethod
from enum import Enum
from typing import List

import numpy as np
import pandas as pd
import yaml

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


class OutputFormat(Enum):
    csv = "csv"
    json = "json"


def fopen(path: str, mode: str):
    """
    A wrapper to open various types of files

    :param path: Path to file
    :param mode: Opening mode
    :return: file-like object
    """
    if isinstance(path, io.BufferedReader):
        return codecs.getreader("utf-8")(path)
    if path.lower().endswith(".gz"):
        if 'b' in mode:
            return gzip.open(path, mode)
        return gzip.open(path, mode.replace('t', '') + 't', encoding="utf-8")
    if 'b' in mode:
        return open(path, mode)
    return open(path, mode, encoding="utf-8", newline='')


def format_value(value) -> str:
    """
    Text form of a table cell: floats with 12 significant digits, empty
    string for None
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "{:.{}g}".format(float(value), SIGNIFICANT_DIGITS)
    return str(value)


def json_value(value):
    """
    JSON form of a table cell, rounded the same way as the CSV output;
    NaN becomes null
    """
    if value is None:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return None
        return float(format_value(value))
    if isinstance(value, (list, tuple, np.ndarray)):
        return [json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    return str(value)


class Collector(ABC):
    def __init__(self):
        pass

    @abstractmethod
    def writerow(self, data: List):
        pass

    def flush(self):
        pass


class CSVWriter(Collector):
    """
    Writes ``#``-prefixed metadata lines, then a header row, then data
    rows
    """

    def __init__(self, out_stream, metadata: dict = None):
        super().__init__()
        self.out = out_stream
        self.writer = csv.writer(out_stream,
                                 delimiter=',',
                                 quoting=csv.QUOTE_MINIMAL,
                                 lineterminator='\n')
        for key, value in (metadata or {}).items():
            self.out.write("# {}: {}\n".format(key, _metadata_text(value)))

    def writeheader(self, columns: List):
        self.writer.writerow(columns)

    def writerow(self, row: List):
        self.writer.writerow([format_value(v) for v in row])

    def flush(self):
        self.out.flush()


class JSONCollector(Collector):
    """
    Collects rows as objects keyed by column name and writes them, with a
    metadata object, on flush
    """

    def __init__(self, out_stream, columns: List, metadata: dict = None):
        super().__init__()
        self.out = out_stream
        self.columns = list(columns)
        self.metadata = metadata or {}
        self.rows = []

    def writerow(self, data: List):
        self.rows.append({
            column: json_value(value)
            for column, value in zip(self.columns, data)
        })

    def flush(self):
        json.dump({"metadata": json_value(self.metadata), "rows": self.rows},
                  self.out, indent=2)
        self.out.write("\n")
        self.out.flush()


def _metadata_text(value) -> str:
    if isinstance(value, (list, tuple, np.ndarray)):
        return " ".join(format_value(v) for v in value)
    if isinstance(value, dict):
        return "; ".join("{}={}".format(k, _metadata_text(v))
                         for k, v in value.items())
    return format_value(value)


def write_table(frame: pd.DataFrame, metadata: dict, out_stream,
                output_format: OutputFormat = OutputFormat.csv):
    """
    Writes a result table with its metadata block in one pass

    :param frame: the table
    :param metadata: parameters and summary values of the run
    :param out_stream: open text stream
    :param output_format: csv or json
    """
    output_format = OutputFormat(output_format)
    columns = [str(c) for c in frame.columns]
    if output_format == OutputFormat.csv:
        collector = CSVWriter(out_stream, metadata)
        collector.writeheader(columns)
    else:
        collector = JSONCollector(out_stream, columns, metadata)
    for row in frame.itertuples(index=False, name=None):
        collector.writerow(list(row))
    collector.flush()


def save_table(frame: pd.DataFrame, metadata: dict, path: str = None,
               output_format: OutputFormat = OutputFormat.csv):
    """
    Writes the table to a file, or to standard output when no path is
    given

    :raises OSError: if the file cannot be written
    """
    if not path or path == '-':
        write_table(frame, metadata, sys.stdout, output_format)
        return
    with fopen(path, "wt") as output:
        write_table(frame, metadata, output, output_format)
    logger.info("Wrote %d rows to %s", len(frame.index), path)


def as_dict(json_or_yaml_file: str) -> dict:
    if isinstance(json_or_yaml_file, str) and os.path.isfile(json_or_yaml_file):
        with open(json_or_yaml_file) as f:
            ff = json_or_yaml_file.lower()
            if ff.endswith(".json"):
                content = json.load(f)
            elif ff.endswith(".yml") or ff.endswith(".yaml"):
                content = yaml.safe_load(f)
            else:
                raise ValueError("Unsupported format for configuration: {}"
                                 .format(json_or_yaml_file) +
                                 ". Supported formats are: JSON, YAML")
    elif isinstance(json_or_yaml_file, dict):
        content = json_or_yaml_file
    elif isinstance(json_or_yaml_file, str):
        raise FileNotFoundError("No such file: {}".format(json_or_yaml_file))
    else:
        t = str(type(json_or_yaml_file))
        raise ValueError("Unsupported type of the configuration: {}"
                         .format(t))
    return content
