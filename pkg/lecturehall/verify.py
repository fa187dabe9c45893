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
The property suite behind ``lecturehall verify``.

Each check recomputes one invariant from independent brute-force data.
Checks that only make sense for weakly increasing sequences with
0,1-differences are reported as skipped for other sequences.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np  # type: ignore
import pandas as pd  # type: ignore

from lecturehall.alcove import (
    Collection,
    dilate_mask,
    enumerate_alcove_dilate,
    enumerate_multisets,
    from_alcove,
    lemma_mask,
    to_alcove,
)
from lecturehall.common import (
    DEFAULT_CONFLUENCE_SCHEDULES,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_RANDOM_SEED,
    MAX_EULERIAN_ORDER,
    CheckResult,
    ConsistencyError,
    InvalidInputError,
)
from lecturehall.core import (
    LabeledPoset,
    SSequence,
    enumerate_dilate_points,
    is_partition,
    iter_box_slices,
    join,
    meet,
    order_polytope_contains,
    simplex_contains,
    translation_window_check,
)
from lecturehall.ehrhart import (
    IntPolynomial,
    ehrhart_counts,
    eulerian_oracle,
    hstar,
    linear_extension_oracle,
)
from lecturehall.groebner import (
    greedy_minimize_pair,
    groebner_basis,
    is_standard,
    lemma_sp_check,
    minimal_collection,
    minimize_pair,
    normal_form,
    standard_collections,
)
from lecturehall.idp import (
    find_chains,
    idp_brute_oracle,
    idp_decompose,
    sandwich_check,
    verify_chain,
)
from lecturehall.triangulation import (
    build_triangulation,
    h_vector,
    verify_cover,
    verify_unimodular,
)

logger = logging.getLogger(__name__)

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str
    reason: Optional[str] = None
    detail: Any = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"name": self.name, "status": self.status}
        if self.reason is not None:
            result["reason"] = self.reason
        if self.detail is not None:
            result["detail"] = self.detail
        return result


@dataclass
class SuiteContext:
    s: SSequence
    kmax: int
    poset: LabeledPoset
    seed: int = DEFAULT_RANDOM_SEED
    schedules: int = DEFAULT_CONFLUENCE_SCHEDULES
    budget: int = DEFAULT_ENUMERATION_BUDGET
    gated: bool = field(init=False)

    def __post_init__(self) -> None:
        self.gated = self.s.weakly_increasing and self.s.zero_one_diff

    @property
    def chain(self) -> LabeledPoset:
        return LabeledPoset.chain(self.s.n)


Check = Callable[[SuiteContext], Optional[CheckResult]]


def _fail_unless(ok: bool, reason: str, detail: Any = None) -> CheckResult:
    return CheckResult.passed() if ok else CheckResult.failed(reason, detail)


def _checked_hstar(
    ctx: SuiteContext, poset: LabeledPoset
) -> Tuple[Optional[IntPolynomial], CheckResult]:
    """h* of (poset, s), or the failure raised while recovering it."""
    try:
        return hstar(poset, ctx.s, budget=ctx.budget), CheckResult.passed()
    except InvalidInputError as e:
        return None, CheckResult.failed("hstar", str(e))


def check_enumeration_order(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        points = enumerate_dilate_points(ctx.poset, ctx.s, k, budget=ctx.budget)
        for a, b in zip(points, points[1:]):
            if not a < b:
                return CheckResult.failed(
                    "order", {"k": k, "pair": [a.to_list(), b.to_list()]}
                )
    return CheckResult.passed()


def check_chain_is_simplex(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        upper = [k * v for v in ctx.s]
        for chunk in iter_box_slices(upper):
            for row in chunk.tolist():
                in_order = order_polytope_contains(ctx.chain, ctx.s, row, k)
                if in_order != simplex_contains(ctx.s, row, k):
                    return CheckResult.failed("membership", {"k": k, "lambda": row})
    return CheckResult.passed()


def check_lattice_closure(ctx: SuiteContext) -> CheckResult:
    for k in range(1, min(ctx.kmax, 2) + 1):
        points = enumerate_dilate_points(ctx.poset, ctx.s, k, budget=ctx.budget)
        for a, b in itertools.combinations(points, 2):
            for c in (meet(a, b), join(a, b)):
                if not is_partition(ctx.poset, ctx.s, c):
                    return CheckResult.failed("closure", [a.to_list(), b.to_list()])
    return CheckResult.passed()


def check_translation(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        result = translation_window_check(ctx.poset, ctx.s, k)
        if not result:
            return result
    return CheckResult.passed()


def check_hstar_nonnegative(ctx: SuiteContext) -> CheckResult:
    # recovery rejects negative coefficients
    _, result = _checked_hstar(ctx, ctx.poset)
    return result


def check_chain_volume(ctx: SuiteContext) -> CheckResult:
    poly, result = _checked_hstar(ctx, ctx.chain)
    if poly is None:
        return result
    return _fail_unless(poly(1) == ctx.s.product(), "volume", poly(1))


def check_eulerian(ctx: SuiteContext) -> Optional[CheckResult]:
    n = ctx.s.n
    if ctx.s != SSequence.lecture_hall(n) or n > MAX_EULERIAN_ORDER:
        return None
    poly, result = _checked_hstar(ctx, ctx.chain)
    if poly is None:
        return result
    return _fail_unless(poly == eulerian_oracle(n), "eulerian", poly.to_list())


def check_linear_extensions(ctx: SuiteContext) -> Optional[CheckResult]:
    if ctx.s != SSequence.ones(ctx.s.n):
        return None
    poly, result = _checked_hstar(ctx, ctx.poset)
    if poly is None:
        return result
    volume = poly(1)
    return _fail_unless(volume == linear_extension_oracle(ctx.poset), "volume", volume)


def check_idp_chains(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        for lam in enumerate_dilate_points(ctx.poset, ctx.s, k, budget=ctx.budget):
            chain = idp_decompose(ctx.poset, ctx.s, lam, k)
            verdict = verify_chain(chain, ctx.poset, ctx.s, lam)
            if not verdict:
                return verdict
            if find_chains(ctx.poset, ctx.s, lam, k) != [chain]:
                return CheckResult.failed("unique", {"k": k, "lambda": lam.to_list()})
            if chain.parts[-1] != meet(lam, ctx.s.s):
                return CheckResult.failed("top", {"k": k, "lambda": lam.to_list()})
    return CheckResult.passed()


def check_sandwich(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        for lam in enumerate_dilate_points(ctx.poset, ctx.s, k, budget=ctx.budget):
            result = sandwich_check(ctx.poset, ctx.s, lam, k)
            if not result:
                return result
    return CheckResult.passed()


def check_idp_oracle(ctx: SuiteContext) -> CheckResult:
    for k in range(1, ctx.kmax + 1):
        if not idp_brute_oracle(ctx.poset, ctx.s, k, budget=ctx.budget):
            return CheckResult.failed("idp", {"k": k})
    return CheckResult.passed()


def check_lemma_equivalence(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    s = ctx.s
    # every coordinate in [-1, s_ext + 1], the last one fixed by the sum
    offsets = [s.s_ext + 2] * s.n
    for chunk in iter_box_slices(offsets):
        head = chunk - 1
        last = s.s_ext - head.sum(axis=1, keepdims=True)
        points = np.hstack([head, last])
        points = points[(last[:, 0] >= -1) & (last[:, 0] <= s.s_ext + 1)]
        disagree = lemma_mask(s, points) != dilate_mask(s, points, 1)
        if disagree.any():
            return CheckResult.failed("lemma", points[disagree][0].tolist())
    return CheckResult.passed()


def check_round_trip(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    s = ctx.s
    for k in range(1, ctx.kmax + 1):
        points = enumerate_dilate_points(ctx.chain, s, k, budget=ctx.budget)
        images = [to_alcove(s, x, k) for x in points]
        for x, z in zip(points, images):
            if from_alcove(s, z) != x:
                return CheckResult.failed("round-trip", x.to_list())
        expected = sorted(
            enumerate_alcove_dilate(s, k, budget=ctx.budget), key=lambda p: p.z
        )
        if sorted(images, key=lambda p: p.z) != expected:
            return CheckResult.failed("count", {"k": k})
    return CheckResult.passed()


def check_greedy_agreement(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    points = enumerate_multisets(ctx.s, budget=ctx.budget)
    for a, b in itertools.combinations_with_replacement(points, 2):
        if greedy_minimize_pair(a, b, ctx.s) != minimize_pair(a, b, ctx.s):
            return CheckResult.failed("greedy", [a.to_list(), b.to_list()])
    return CheckResult.passed()


def check_basis(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    for binomial in groebner_basis(ctx.s, budget=ctx.budget):
        if not is_standard(binomial.trail, ctx.s):
            return CheckResult.failed("reduced", binomial.to_dict())
    return CheckResult.passed()


def check_bijection(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    counts = ehrhart_counts(ctx.chain, ctx.s, ctx.kmax, budget=ctx.budget)
    for k in range(1, ctx.kmax + 1):
        found = len(standard_collections(ctx.s, k, budget=ctx.budget))
        if found != counts[k]:
            return CheckResult.failed(
                "bijection", {"k": k, "standard": found, "points": counts[k]}
            )
    return CheckResult.passed()


def check_confluence(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    points = enumerate_multisets(ctx.s, budget=ctx.budget)
    rng = np.random.default_rng(ctx.seed)
    samples = [
        Collection.of(a, b)
        for a, b in itertools.combinations_with_replacement(points, 2)
    ]
    for _ in range(20):
        picks = rng.integers(len(points), size=3)
        samples.append(Collection(tuple(points[i] for i in picks)))
    for collection in samples:
        expected = normal_form(collection, ctx.s, budget=ctx.budget)
        oracle = minimal_collection(collection.total(), len(collection), ctx.s)
        if expected != oracle:
            return CheckResult.failed("minimality", collection.to_list())
        for _ in range(ctx.schedules if len(collection) > 2 else 1):
            if normal_form(collection, ctx.s, rng=rng, budget=ctx.budget) != expected:
                return CheckResult.failed("confluence", collection.to_list())
    return CheckResult.passed()


def check_lemma_sp(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated or ctx.s != SSequence.lecture_hall(ctx.s.n):
        return None
    for k in range(1, min(ctx.kmax, 3) + 1):
        for collection in standard_collections(ctx.s, k, budget=ctx.budget):
            result = lemma_sp_check(collection, ctx.s)
            if not result:
                return result
    return CheckResult.passed()


def check_triangulation(ctx: SuiteContext) -> Optional[CheckResult]:
    if not ctx.gated:
        return None
    complex_ = build_triangulation(ctx.s, budget=ctx.budget)
    for result in (
        verify_unimodular(complex_, ctx.s),
        verify_cover(complex_, ctx.s, ctx.kmax, budget=ctx.budget),
    ):
        if not result:
            return result
    expected, result = _checked_hstar(ctx, ctx.chain)
    if expected is None:
        return result
    h = h_vector(complex_)
    return _fail_unless(h == expected, "h-vector", h.to_list())


SUITE: List[Tuple[str, Check]] = [
    ("core.enumeration_order", check_enumeration_order),
    ("core.chain_is_simplex", check_chain_is_simplex),
    ("core.lattice_closure", check_lattice_closure),
    ("core.translation", check_translation),
    ("ehrhart.hstar_nonnegative", check_hstar_nonnegative),
    ("ehrhart.chain_volume", check_chain_volume),
    ("ehrhart.eulerian", check_eulerian),
    ("ehrhart.linear_extensions", check_linear_extensions),
    ("idp.chains", check_idp_chains),
    ("idp.sandwich", check_sandwich),
    ("idp.brute_oracle", check_idp_oracle),
    ("alcove.lemma_equivalence", check_lemma_equivalence),
    ("alcove.round_trip", check_round_trip),
    ("groebner.greedy_agreement", check_greedy_agreement),
    ("groebner.reduced_basis", check_basis),
    ("groebner.bijection", check_bijection),
    ("groebner.confluence", check_confluence),
    ("groebner.lemma_sp", check_lemma_sp),
    ("triangulation.flag_unimodular", check_triangulation),
]


def run_suite(
    s: SSequence,
    kmax: int = 3,
    poset: Optional[LabeledPoset] = None,
    seed: int = DEFAULT_RANDOM_SEED,
    schedules: int = DEFAULT_CONFLUENCE_SCHEDULES,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> List[CheckRecord]:
    """
    Runs every check for (poset, s), the chain poset by default.

    A :class:`ConsistencyError` raised inside a check is recorded as a
    failure, as is an h* series that no lattice polytope can have. Budget
    and input errors propagate.
    """
    ctx = SuiteContext(
        s=s,
        kmax=kmax,
        poset=poset if poset is not None else LabeledPoset.chain(s.n),
        seed=seed,
        schedules=schedules,
        budget=budget,
    )
    records = []
    for name, check in SUITE:
        logger.info("running %s", name)
        try:
            result = check(ctx)
        except ConsistencyError as e:
            records.append(CheckRecord(name, FAILED, "consistency", str(e)))
            continue
        if result is None:
            records.append(CheckRecord(name, SKIPPED))
        elif result:
            records.append(CheckRecord(name, PASSED))
        else:
            records.append(CheckRecord(name, FAILED, result.reason, result.detail))
    return records


def suite_passed(records: List[CheckRecord]) -> bool:
    return all(r.status != FAILED for r in records)


def suite_frame(records: List[CheckRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [[r.name, r.status, r.reason or ""] for r in records],
        columns=["check", "status", "reason"],
    )
