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


import os
import subprocess
from pathlib import Path

import nox

BASE_DIR = Path(__file__).parent
SOURCE_FILES = (
    "setup.py",
    "noxfile.py",
    "lecturehall/",
    "docs/",
    "utils/",
)

# Files checked by mypy --strict. Tests are exempt.
TYPED_FILES = (
    "lecturehall/common.py",
    "lecturehall/core.py",
    "lecturehall/ehrhart.py",
    "lecturehall/idp.py",
    "lecturehall/alcove.py",
    "lecturehall/groebner.py",
    "lecturehall/triangulation.py",
    "lecturehall/utils.py",
    "lecturehall/verify.py",
    "lecturehall/cli.py",
)


@nox.session(reuse_venv=True)
def format(session):
    session.install("black")
    session.run("python", "utils/license-headers.py", "fix", *SOURCE_FILES)
    session.run("black", "--target-version=py38", *SOURCE_FILES)
    lint(session)


@nox.session(reuse_venv=True)
def lint(session):
    session.install("black", "flake8", "mypy")
    session.run("python", "utils/license-headers.py", "check", *SOURCE_FILES)
    session.run("black", "--check", "--target-version=py38", *SOURCE_FILES)
    session.run("flake8", "--ignore=E501,W503,E402,E712,E203", *SOURCE_FILES)

    session.log("mypy --strict " + " ".join(TYPED_FILES))
    for typed_file in TYPED_FILES:
        if not os.path.isfile(typed_file):
            session.error(f"The file {typed_file!r} couldn't be found")
        popen = subprocess.Popen(
            f"mypy --strict {typed_file}",
            env=session.env,
            shell=True,
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
        )
        popen.wait()
        errors = [
            line
            for line in popen.stdout.read().decode().split("\n")
            if line.partition(":")[0] in TYPED_FILES
        ]
        if errors:
            session.error("\n" + "\n".join(sorted(set(errors))))


@nox.session(python=["3.8", "3.9"])
def test(session):
    session.install("-r", "requirements-dev.txt")
    session.install(".")
    session.run("pytest", "--doctest-modules", *(session.posargs or ("lecturehall/",)))
    # the installed console script must behave like the module entry point
    session.run(
        "lecturehall", "verify", "--s", "1,2,3", "--kmax", "2", "--format", "text"
    )


@nox.session(reuse_venv=True)
def docs(session):
    session.install("-r", "docs/requirements-docs.txt")
    session.install(".")
    session.run("sphinx-build", "-b", "html", "docs/source", "docs/build/html")
