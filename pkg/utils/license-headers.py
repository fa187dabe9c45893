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


"""Checks or adds the Apache license header of every Python source file.

Usage: python utils/license-headers.py {check,fix} PATH [PATH ...]
"""

import argparse
import os
import sys
from typing import Iterator, List

# Lines that may legally precede the header
PREAMBLE = ("#!/usr/bin/env python\n", "# -*- coding: utf-8 -*-\n")
HEADER = [
    "#  Licensed to the lecturehall developers under one or more contributor\n",
    "#  license agreements. See the NOTICE file distributed with\n",
    "#  this work for additional information regarding copyright\n",
    "#  ownership. The lecturehall developers license this file to you under\n",
    '#  the Apache License, Version 2.0 (the "License"); you may\n',
    "#  not use this file except in compliance with the License.\n",
    "#  You may obtain a copy of the License at\n",
    "#\n",
    "# 	http://www.apache.org/licenses/LICENSE-2.0\n",
    "#\n",
    "#  Unless required by applicable law or agreed to in writing,\n",
    "#  software distributed under the License is distributed on an\n",
    '#  "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY\n',
    "#  KIND, either express or implied.  See the License for the\n",
    "#  specific language governing permissions and limitations\n",
    "#  under the License.\n",
]


def iter_python_files(sources: List[str]) -> Iterator[str]:
    for source in sources:
        if os.path.isfile(source):
            yield source
        for root, _, filenames in os.walk(source):
            for filename in sorted(filenames):
                yield os.path.join(root, filename)


def split_preamble(lines: List[str]) -> int:
    idx = 0
    while idx < len(lines) and lines[idx] in PREAMBLE:
        idx += 1
    return idx


def has_header(filepath: str) -> bool:
    with open(filepath, mode="r") as f:
        lines = list(f)
    start = split_preamble(lines)
    return lines[start : start + len(HEADER)] == HEADER


def add_header(filepath: str) -> None:
    with open(filepath, mode="r") as f:
        lines = list(f)
    start = split_preamble(lines)
    body = lines[start:]
    if body and body[0] != "\n":
        body = ["\n"] + body
    with open(filepath, mode="w") as f:
        f.write("".join(lines[:start] + HEADER + body))
    print(f"Fixed {os.path.relpath(filepath, os.getcwd())}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("mode", choices=["check", "fix"])
    parser.add_argument("paths", nargs="+")
    args = parser.parse_args()

    missing = [
        path
        for path in iter_python_files([os.path.abspath(p) for p in args.paths])
        if path.endswith(".py") and not has_header(path)
    ]
    if args.mode == "fix":
        for path in missing:
            add_header(path)
    elif missing:
        print("No license header found in:")
        for path in missing:
            print(f" - {os.path.relpath(path, os.getcwd())}")
        sys.exit(1)
    else:
        print("All files had license header")


if __name__ == "__main__":
    main()
