#  Licensed to the lecturehall developers under one or more contributor
#  license agreements. See the NOTICE file distributed with
#  this work for additional information regarding copyright
#  ownership. The lecturehall developers license this file to you under
#  the Apache License, Version 2.0 (the "License"); you may
#  not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
# 	http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing,
#  software distributed under the License is distributed on an
#  "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
#  KIND, either express or implied.  See the License for the
#  specific language governing permissions and limitations
#  under the License.

import json
from enum import Enum
from typing import Any, List, Optional, Sequence

import pandas as pd  # type: ignore

from lecturehall.common import InvalidInputError


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"

    @staticmethod
    def from_string(name: str) -> "OutputFormat":
        try:
            return OutputFormat(name.lower())
        except ValueError:
            raise InvalidInputError(
                f"Unknown output format '{name}', expected one of "
                f"{[f.value for f in OutputFormat]}"
            ) from None

    @staticmethod
    def choices() -> List[str]:
        return [f.value for f in OutputFormat]


def parse_int_list(text: str, what: str = "value") -> List[int]:
    """
    Parses a comma separated list of integers.

    >>> lh.utils.parse_int_list("1, 3,5")
    [1, 3, 5]
    """
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(part == "" for part in parts):
        raise InvalidInputError(
            f"Expected a comma separated list for {what}, got '{text}'"
        )
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise InvalidInputError(
            f"Expected integers for {what} (e.g. 1,2,3), got '{text}'"
        ) from None


def dump_json(data: Any) -> str:
    return json.dumps(data)


def points_frame(rows: Sequence[Sequence[int]], prefix: str = "x") -> pd.DataFrame:
    """One column per coordinate, named x1, x2, ..."""
    width = len(rows[0]) if rows else 0
    return pd.DataFrame(
        [list(r) for r in rows], columns=[f"{prefix}{i}" for i in range(1, width + 1)]
    )


def render(
    data: Any,
    frame: Optional[pd.DataFrame],
    fmt: OutputFormat,
    text: Optional[str] = None,
) -> str:
    """
    Renders a command result.

    JSON always serializes ``data``. CSV needs a tabular ``frame``; text mode
    prefers the prepared ``text`` and falls back to the frame.
    """
    if fmt == OutputFormat.JSON:
        return dump_json(data)
    if fmt == OutputFormat.TEXT and text is not None:
        return text
    if frame is None:
        raise InvalidInputError(
            f"This result has no {fmt.value} rendering, use --format json"
        )
    if fmt == OutputFormat.CSV:
        return str(frame.to_csv(index=False)).rstrip("\n")
    return str(frame.to_string(index=False))
