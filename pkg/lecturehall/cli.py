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

"""
Command line front end.

Every subcommand prints its result on stdout in the selected ``--format``;
diagnostics go to stderr. Exit codes: 0 success, 1 verification failure or
internal inconsistency, 2 bad input, 3 budget exceeded.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd  # type: ignore

from lecturehall._version import __version__
from lecturehall.alcove import Collection, parse_multiset, render_multiset
from lecturehall.common import (
    DEFAULT_CONFLUENCE_SCHEDULES,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_RANDOM_SEED,
    BudgetExceededError,
    ConsistencyError,
    InvalidInputError,
)
from lecturehall.core import (
    LabeledPoset,
    LatticePoint,
    SSequence,
    enumerate_dilate_points,
)
from lecturehall.ehrhart import hstar, lecture_hall_gf, odd_product_gf
from lecturehall.groebner import groebner_basis, normal_form
from lecturehall.idp import decomposition_report
from lecturehall.triangulation import build_triangulation, triangulation_report
from lecturehall.utils import OutputFormat, parse_int_list, points_frame, render
from lecturehall.verify import run_suite, suite_frame, suite_passed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one invocation."""

    command: str
    s: Optional[SSequence] = None
    poset: Optional[LabeledPoset] = None
    k: int = 1
    kmax: int = 3
    format: OutputFormat = OutputFormat.JSON
    budget: int = DEFAULT_ENUMERATION_BUDGET
    seed: int = DEFAULT_RANDOM_SEED
    schedules: int = DEFAULT_CONFLUENCE_SCHEDULES
    verbose: bool = False
    lam: Optional[LatticePoint] = None
    n: Optional[int] = None
    max_weight: Optional[int] = None
    collection: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        s = SSequence.parse(args.s) if getattr(args, "s", None) else None
        poset = None
        if getattr(args, "poset", None):
            poset = LabeledPoset.from_json(args.poset)
            if s is not None and poset.n != s.n:
                raise InvalidInputError(
                    f"Poset has {poset.n} elements but s has length {s.n}"
                )
        lam = None
        if getattr(args, "lam", None):
            lam = LatticePoint(tuple(parse_int_list(args.lam, "--lambda")))
        return cls(
            command=args.command,
            s=s,
            poset=poset,
            k=getattr(args, "k", 1),
            kmax=getattr(args, "kmax", 3),
            format=OutputFormat.from_string(args.format),
            budget=args.budget,
            seed=args.seed,
            schedules=getattr(args, "schedules", DEFAULT_CONFLUENCE_SCHEDULES),
            verbose=args.verbose,
            lam=lam,
            n=getattr(args, "n", None),
            max_weight=getattr(args, "max", None),
            collection=getattr(args, "collection", None),
        )

    def require_s(self) -> SSequence:
        if self.s is None:
            raise InvalidInputError(f"'{self.command}' needs --s")
        return self.s

    def poset_or_chain(self) -> LabeledPoset:
        s = self.require_s()
        return self.poset if self.poset is not None else LabeledPoset.chain(s.n)


# (data for json, table for csv/text, prepared text, verification ok)
Outcome = Tuple[Any, Optional[pd.DataFrame], Optional[str], bool]


def _points(config: RunConfig) -> Outcome:
    s = config.require_s()
    points = enumerate_dilate_points(
        config.poset_or_chain(), s, config.k, budget=config.budget
    )
    rows = [p.to_list() for p in points]
    return rows, points_frame(rows), None, True


def _hstar(config: RunConfig) -> Outcome:
    s = config.require_s()
    poly = hstar(config.poset_or_chain(), s, budget=config.budget)
    frame = pd.DataFrame(
        {"degree": range(len(poly.coeffs)), "coefficient": poly.to_list()}
    )
    return poly.to_list(), frame, str(poly), True


def _bme(config: RunConfig) -> Outcome:
    if config.n is None or config.max_weight is None:
        raise InvalidInputError("'bme' needs --n and --max")
    left = lecture_hall_gf(config.n, config.max_weight, budget=config.budget)
    right = odd_product_gf(config.n, config.max_weight)
    data = {"lecture_hall": left, "odd_product": right, "equal": left == right}
    frame = pd.DataFrame(
        {"weight": range(len(left)), "lecture_hall": left, "odd_product": right}
    )
    return data, frame, None, left == right


def _idp(config: RunConfig) -> Outcome:
    s = config.require_s()
    if config.lam is None:
        raise InvalidInputError("'idp' needs --lambda")
    report = decomposition_report(
        config.poset_or_chain(),
        s,
        config.lam,
        config.k,
        enumeration_budget=config.budget,
    )
    frame = points_frame(report["chain"])
    frame.insert(0, "part", range(1, len(report["chain"]) + 1))
    text = "\n".join(
        [f"lambda = {report['lambda']}, k = {report['k']}"]
        + [f"  part {i}: {part}" for i, part in enumerate(report["chain"], start=1)]
        + [f"unique: {report['unique']}", f"brute_ok: {report['brute_ok']}"]
    )
    return report, frame, text, bool(report["unique"] and report["brute_ok"])


def _collection_text(collection: Collection) -> str:
    return " ".join(render_multiset(e.z) for e in collection)


def _groebner(config: RunConfig) -> Outcome:
    basis = groebner_basis(config.require_s(), budget=config.budget)
    data = [b.to_dict() for b in basis]
    frame = pd.DataFrame(
        [[_collection_text(b.lead), _collection_text(b.trail)] for b in basis],
        columns=["lead", "trail"],
    )
    text = "\n".join(
        f"{_collection_text(b.lead)} -> {_collection_text(b.trail)}" for b in basis
    )
    return data, frame, text, True


def _read_collection(path: str, s: SSequence) -> Collection:
    with open(path, mode="r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidInputError(
                f"Collection file {path} is not JSON: {e}"
            ) from None
    if not isinstance(data, list):
        raise InvalidInputError("A collection file holds a JSON list of multisets")
    rows: List[Tuple[Any, ...]] = []
    for row in data:
        if isinstance(row, str):
            rows.append(parse_multiset(row, s.n + 1))
        elif isinstance(row, list):
            rows.append(tuple(row))
        else:
            raise InvalidInputError(
                f"Expected a multiplicity vector or a '{{1^a 2^b}}' string, got {row!r}"
            )
    return Collection.of(*rows)


def _nf(config: RunConfig) -> Outcome:
    if config.collection is None:
        raise InvalidInputError("'nf' needs --collection")
    s = config.require_s()
    result = normal_form(
        _read_collection(config.collection, s), s, budget=config.budget
    )
    rows = result.to_list()
    return rows, points_frame(rows, prefix="z"), _collection_text(result), True


def _triangulate(config: RunConfig) -> Outcome:
    s = config.require_s()
    report = triangulation_report(
        build_triangulation(s, budget=config.budget),
        s,
        config.kmax,
        budget=config.budget,
    )
    frame = pd.DataFrame(
        {
            "face": range(len(report["maximal_faces"])),
            "vertices": [
                " ".join(render_multiset(report["vertices"][i]) for i in face)
                for face in report["maximal_faces"]
            ],
        }
    )
    text = "\n".join(
        [f"f-vector: {report['f_vector']}", f"h-vector: {report['h_vector']}"]
        + [f"  face {i}: {v}" for i, v in enumerate(frame["vertices"])]
    )
    return report, frame, text, bool(report["unimodular"] and report["cover_ok"])


def _verify(config: RunConfig) -> Outcome:
    s = config.require_s()
    records = run_suite(
        s,
        kmax=config.kmax,
        poset=config.poset,
        seed=config.seed,
        schedules=config.schedules,
        budget=config.budget,
    )
    frame = suite_frame(records)
    return [r.to_dict() for r in records], frame, None, suite_passed(records)


COMMANDS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "points": _points,
    "hstar": _hstar,
    "bme": _bme,
    "idp": _idp,
    "groebner": _groebner,
    "nf": _nf,
    "triangulate": _triangulate,
    "verify": _verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", default=OutputFormat.JSON.value, choices=OutputFormat.choices()
    )
    common.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    common.add_argument("--seed", type=int, default=DEFAULT_RANDOM_SEED)
    common.add_argument("--verbose", "-v", action="store_true")

    with_s = argparse.ArgumentParser(add_help=False)
    with_s.add_argument(
        "--s", required=True, help="comma separated sequence, e.g. 1,2,3"
    )

    with_poset = argparse.ArgumentParser(add_help=False)
    with_poset.add_argument(
        "--poset", help='JSON file {"n": int, "covers": [[i, j], ...]}'
    )

    parser = argparse.ArgumentParser(
        prog="lecturehall",
        description=(
            "Lattice points, Gröbner bases and triangulations "
            "of s-lecture hall polytopes"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    points = sub.add_parser("points", parents=[common, with_s, with_poset])
    points.add_argument("--k", type=int, default=1)

    sub.add_parser("hstar", parents=[common, with_s, with_poset])

    bme = sub.add_parser("bme", parents=[common])
    bme.add_argument("--n", type=int, required=True)
    bme.add_argument("--max", type=int, required=True)

    idp = sub.add_parser("idp", parents=[common, with_s, with_poset])
    idp.add_argument("--lambda", dest="lam", required=True)
    idp.add_argument("--k", type=int, required=True)

    sub.add_parser("groebner", parents=[common, with_s])

    nf = sub.add_parser("nf", parents=[common, with_s])
    nf.add_argument(
        "--collection",
        required=True,
        help='JSON list of multiplicity vectors or "{1^a 2^b}" strings',
    )

    triangulate = sub.add_parser("triangulate", parents=[common, with_s])
    triangulate.add_argument("--kmax", type=int, default=3)

    verify = sub.add_parser("verify", parents=[common, with_s, with_poset])
    verify.add_argument("--kmax", type=int, default=3)
    verify.add_argument("--schedules", type=int, default=DEFAULT_CONFLUENCE_SCHEDULES)
    return parser


def run(config: RunConfig) -> int:
    data, frame, text, ok = COMMANDS[config.command](config)
    print(render(data, frame, config.format, text=text))
    if not ok:
        logger.error("%s: verification failed", config.command)
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(RunConfig.from_args(args))
    except BudgetExceededError as e:
        logger.error("%s", e)
        return EXIT_BUDGET
    except ConsistencyError as e:
        logger.error("internal consistency check failed: %s", e)
        return EXIT_VERIFICATION_FAILED
    except (ValueError, OverflowError, OSError) as e:
        logger.error("%s", e)
        return EXIT_BAD_INPUT
