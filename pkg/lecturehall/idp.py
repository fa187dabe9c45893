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

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np  # type: ignore

from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    BudgetExceededError,
    CheckResult,
    ConsistencyError,
    InvalidInputError,
    check_budget,
    check_dimensions,
)
from lecturehall.core import (
    LabeledPoset,
    LatticePoint,
    PointLike,
    SSequence,
    as_point,
    enumerate_dilate_points,
    join,
    meet,
    order_polytope_contains,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionChain:
    """k lattice points of O(P,s), bottom part first."""

    k: int
    parts: Tuple[LatticePoint, ...]

    def __post_init__(self) -> None:
        parts = tuple(as_point(p) for p in self.parts)
        if self.k < 1 or len(parts) != self.k:
            raise InvalidInputError(
                f"A chain of length k={self.k} needs exactly {self.k} parts, got {len(parts)}"
            )
        object.__setattr__(self, "parts", parts)

    def total(self) -> LatticePoint:
        result = LatticePoint.zeros(self.parts[0].dim)
        for part in self.parts:
            result = result + part
        return result

    def to_list(self) -> List[List[int]]:
        return [p.to_list() for p in self.parts]


def triangle_leq(a: PointLike, b: PointLike, s: SSequence) -> bool:
    """
    The saturation order: a_i <= b_i everywhere and a_i != 0 forces b_i = s_i.

    >>> s = lh.SSequence((1, 2, 3))
    >>> lh.triangle_leq((0, 1, 2), (1, 2, 3), s), lh.triangle_leq((0, 0, 1), (0, 2, 2), s)
    (True, False)
    """
    a, b = as_point(a), as_point(b)
    check_dimensions(s.n, a, b)
    for ai, bi, si in zip(a, b, s):
        if ai > bi:
            return False
        if ai != 0 and bi != si:
            return False
    return True


def idp_decompose(
    poset: LabeledPoset, s: SSequence, lam: PointLike, k: int
) -> DecompositionChain:
    """
    Writes a lattice point of k*O(P,s) as a chain of k points of O(P,s).

    The top part is lam ∧ s and the rest is obtained from (lam - s) ∨ 0,
    which lies in (k-1)*O(P,s).

    Parameters
    ----------
    poset: LabeledPoset
    s: SSequence
    lam: LatticePoint
        A lattice point of k*O(P,s).
    k: int
        Dilation factor.

    Returns
    -------
    DecompositionChain
        Parts ordered bottom first, each below the next in the saturation
        order.

    Examples
    --------
    >>> chain = lh.idp_decompose(lh.LabeledPoset.chain(3), lh.SSequence((1, 2, 3)), (1, 4, 7), 3)
    >>> chain.to_list()
    [[0, 0, 1], [0, 2, 3], [1, 2, 3]]
    """
    lam = as_point(lam)
    if not order_polytope_contains(poset, s, lam, k):
        raise InvalidInputError(f"{lam.to_list()} is not a lattice point of {k}*O(P,s)")

    zero = LatticePoint.zeros(s.n)
    top = LatticePoint(s.s)
    parts: List[LatticePoint] = [zero] * k
    current = lam
    for idx in reversed(range(k)):
        parts[idx] = meet(current, top)
        current = join(current - top, zero)
    if current != zero:
        raise ConsistencyError(
            f"Decomposing {lam.to_list()} left a nonzero remainder {current.to_list()}"
        )
    return DecompositionChain(k, tuple(parts))


def verify_chain(
    chain: DecompositionChain, poset: LabeledPoset, s: SSequence, lam: PointLike
) -> CheckResult:
    """
    Checks a chain against (P, s, lam).

    Failure reasons are ``"dimension"``, ``"membership"`` (a part outside
    O(P,s)), ``"order"`` (consecutive parts not in saturation order) and
    ``"sum"``.
    """
    lam = as_point(lam)
    if lam.dim != s.n or poset.n != s.n or any(p.dim != s.n for p in chain.parts):
        return CheckResult.failed("dimension")
    for part in chain.parts:
        if not order_polytope_contains(poset, s, part, 1):
            return CheckResult.failed("membership", part.to_list())
    for lower, upper in zip(chain.parts, chain.parts[1:]):
        if not triangle_leq(lower, upper, s):
            return CheckResult.failed("order", [lower.to_list(), upper.to_list()])
    if chain.total() != lam:
        return CheckResult.failed("sum", chain.total().to_list())
    return CheckResult.passed()


class _NodeCounter:
    def __init__(self, budget: int, what: str) -> None:
        self.budget = budget
        self.what = what
        self.visited = 0

    def tick(self) -> None:
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceededError(
                f"{self.what} visited more than {self.budget} search nodes"
            )


def _candidate_parts(
    poset: LabeledPoset, s: SSequence, lam: LatticePoint
) -> List[LatticePoint]:
    # degree-1 points fitting under lam, in lex order for reproducible searches
    return [
        p
        for p in enumerate_dilate_points(poset, s, 1)
        if all(a <= b for a, b in zip(p, lam))
    ]


def find_chains(
    poset: LabeledPoset,
    s: SSequence,
    lam: PointLike,
    k: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> List[DecompositionChain]:
    """All chains of k points of O(P,s) in saturation order summing to lam."""
    lam = as_point(lam)
    if not order_polytope_contains(poset, s, lam, k):
        raise InvalidInputError(f"{lam.to_list()} is not a lattice point of {k}*O(P,s)")
    candidates = _candidate_parts(poset, s, lam)
    counter = _NodeCounter(budget, "Chain search")
    found: List[DecompositionChain] = []

    def extend(prefix: List[LatticePoint], remaining: LatticePoint) -> None:
        counter.tick()
        slots = k - len(prefix)
        if slots == 1:
            last = remaining
            if order_polytope_contains(poset, s, last, 1) and (
                not prefix or triangle_leq(prefix[-1], last, s)
            ):
                found.append(DecompositionChain(k, tuple(prefix + [last])))
            return
        for part in candidates:
            if prefix and not triangle_leq(prefix[-1], part, s):
                continue
            rest = remaining - part
            # every later part is bounded by s
            if all(0 <= r <= (slots - 1) * si for r, si in zip(rest, s)):
                extend(prefix + [part], rest)

    extend([], lam)
    return found


def _sum_decompositions(
    candidates: Sequence[LatticePoint],
    target: LatticePoint,
    m: int,
    bound: LatticePoint,
    counter: _NodeCounter,
) -> List[Tuple[LatticePoint, ...]]:
    """
    Multisets of m candidates summing to target, indices nondecreasing.
    Every candidate is at most ``bound`` componentwise.
    """
    results: List[Tuple[LatticePoint, ...]] = []
    position = {p: idx for idx, p in enumerate(candidates)}

    def extend(start: int, chosen: List[LatticePoint], remaining: LatticePoint) -> None:
        counter.tick()
        slots = m - len(chosen)
        if slots == 1:
            if position.get(remaining, -1) >= start:
                results.append(tuple(chosen + [remaining]))
            return
        for idx in range(start, len(candidates)):
            rest = remaining - candidates[idx]
            if all(0 <= r <= (slots - 1) * b for r, b in zip(rest, bound)):
                extend(idx, chosen + [candidates[idx]], rest)

    extend(0, [], target)
    return results


def sandwich_check(
    poset: LabeledPoset,
    s: SSequence,
    lam: PointLike,
    k: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> CheckResult:
    """
    Every decomposition of lam into m <= k points of O(P,s) has all of its
    summands between the bottom and top parts of the canonical chain.
    """
    lam = as_point(lam)
    chain = idp_decompose(poset, s, lam, k)
    lower, upper = chain.parts[0], chain.parts[-1]
    top = LatticePoint(s.s)
    candidates = _candidate_parts(poset, s, lam)
    counter = _NodeCounter(budget, "Sandwich search")
    for m in range(1, k + 1):
        for summands in _sum_decompositions(candidates, lam, m, top, counter):
            for gamma in summands:
                if not all(lo <= g <= hi for lo, g, hi in zip(lower, gamma, upper)):
                    return CheckResult.failed(
                        "sandwich", {"m": m, "summand": gamma.to_list()}
                    )
    logger.debug(
        "sandwich search for %s visited %d nodes", lam.to_list(), counter.visited
    )
    return CheckResult.passed()


def idp_brute_oracle(
    poset: LabeledPoset,
    s: SSequence,
    k: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> bool:
    """
    Decides IDP at level k by iterated Minkowski sums of the degree-1 points.

    >>> lh.idp_brute_oracle(lh.LabeledPoset.chain(3), lh.SSequence((1, 2, 3)), 2)
    True
    """
    generators = np.array(
        [p.to_list() for p in enumerate_dilate_points(poset, s, 1, budget=budget)],
        dtype=np.int64,
    ).reshape(-1, s.n)
    sums = generators
    for level in range(2, k + 1):
        check_budget(
            sums.shape[0] * generators.shape[0],
            budget,
            f"Minkowski sum at level {level}",
        )
        sums = np.unique(
            (sums[:, None, :] + generators[None, :, :]).reshape(-1, s.n), axis=0
        )
    target = np.array(
        [p.to_list() for p in enumerate_dilate_points(poset, s, k, budget=budget)],
        dtype=np.int64,
    ).reshape(-1, s.n)
    # np.unique sorts rows lexicographically, as does the dilate scan
    sums = np.unique(sums, axis=0)
    return bool(sums.shape == target.shape and np.array_equal(sums, target))


def decomposition_report(
    poset: LabeledPoset,
    s: SSequence,
    lam: PointLike,
    k: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Dict[str, Any]:
    """
    >>> report = lh.decomposition_report(lh.LabeledPoset.chain(3), lh.SSequence((1, 2, 3)), (1, 3, 5), 2)
    >>> report["chain"], report["unique"], report["brute_ok"]
    ([[0, 1, 2], [1, 2, 3]], True, True)
    """
    lam = as_point(lam)
    chain = idp_decompose(poset, s, lam, k)
    verdict = verify_chain(chain, poset, s, lam)
    if not verdict:
        raise ConsistencyError(
            f"Canonical chain for {lam.to_list()} fails verification: {verdict.reason}"
        )
    chains = find_chains(poset, s, lam, k, budget=budget)
    return {
        "lambda": lam.to_list(),
        "k": k,
        "chain": chain.to_list(),
        "unique": chains == [chain],
        "brute_ok": idp_brute_oracle(poset, s, k, budget=enumeration_budget),
    }
