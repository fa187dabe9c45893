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
Pair minimization, the quadratic Gröbner basis of the toric ideal of
P_n^s, and normal forms of collections under its reduction relation.

Binomials are carried as marked pairs of collections; no polynomial ring is
built. Reducing a collection means repeatedly replacing a non-minimal pair
by the minimal pair with the same multiunion.
"""

import functools
import itertools
import logging
import warnings
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np  # type: ignore

from lecturehall.alcove import (
    AlcoveLike,
    AlcovePoint,
    Collection,
    as_alcove,
    collection_compare,
    diff_support,
    enumerate_multisets,
    is_in_dilate,
    require_gate,
)
from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    BudgetExceededError,
    CheckResult,
    ConsistencyError,
    InvalidInputError,
    Ordering,
    check_dimensions,
)
from lecturehall.core import SSequence

logger = logging.getLogger(__name__)


def alpha(y: Sequence[int], r: int, s: SSequence) -> Optional[int]:
    """
    Smallest index i with y_i >= r and y_j >= r for every later j in A(s).

    >>> s = lh.SSequence((1, 2, 3))
    >>> lh.alpha((1, 1, 1, 5), 1, s), lh.alpha((1, 1, 1, 5), 2, s), lh.alpha((0, 0, 4, 8), 3, s)
    (1, 4, 3)
    """
    y = list(y)
    check_dimensions(s.n + 1, y)
    support = diff_support(s)
    for i in range(1, s.n + 2):
        if y[i - 1] >= r and all(y[j - 1] >= r for j in support if j > i):
            return i
    return None


def ell(x: Sequence[int]) -> int:
    """1-based index of the first nonzero entry."""
    for i, value in enumerate(x, start=1):
        if value != 0:
            return i
    raise InvalidInputError("ell is undefined for the zero vector")


def _key(c: Collection) -> Tuple[Tuple[int, ...], ...]:
    # tuple order on the sorted elements is the collection order
    return tuple(e.z for e in c)


def _checked_degree_one(s: SSequence, *points: AlcoveLike) -> List[AlcovePoint]:
    result = []
    for p in points:
        p = as_alcove(p)
        if p.degree != 1 or not is_in_dilate(s, p.z, 1):
            raise InvalidInputError(f"{p.to_list()} is not an s-lecture hall multiset")
        result.append(p)
    return result


@functools.lru_cache(maxsize=64)
def _point_set(s: SSequence, budget: int) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(p.z for p in enumerate_multisets(s, budget=budget))


def minimize_pair(
    first: AlcoveLike,
    second: AlcoveLike,
    s: SSequence,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Collection:
    """
    The minimal pair with the same multiunion, by exhaustive split search.

    Every degree-1 point u below y = first + second with y - u again a
    degree-1 point is a split; the collection-minimal split wins.

    Examples
    --------
    >>> lh.minimize_pair((0, 0, 3, 1), (0, 0, 1, 3), lh.SSequence((1, 2, 3))).to_list()
    [[0, 0, 2, 2], [0, 0, 2, 2]]
    """
    require_gate(s)
    first, second = _checked_degree_one(s, first, second)
    y = tuple(a + b for a, b in zip(first.z, second.z))
    points = _point_set(s, budget)
    best: Optional[Collection] = None
    for u in points:
        v = tuple(a - b for a, b in zip(y, u))
        if v not in points:
            continue
        candidate = Collection.of(u, v)
        if best is None or _key(candidate) < _key(best):
            best = candidate
    if best is None:
        raise ConsistencyError(f"No split of {list(y)} found, not even the input pair")
    return best


def _split_reachability(y: Sequence[int], s: SSequence) -> List[Set[int]]:
    """
    reach[j] holds the prefix sums p = v_1 + ... + v_j from which the split
    of y into two degree-1 points (v, y - v) can still be completed.
    """
    n = s.n
    prefix = np.cumsum(y).tolist()
    reach: List[Set[int]] = [set() for _ in range(n + 2)]
    if prefix[n] == 2 * s.s_ext:
        reach[n + 1] = {s.s_ext}
    for j in range(n, -1, -1):
        if j == 0:
            candidates = [0]
        else:
            lo = max(0, prefix[j - 1] - s.at(j))
            candidates = list(range(lo, min(s.at(j), prefix[j - 1]) + 1))
        for p in candidates:
            q = prefix[j - 1] - p if j else 0
            if any(
                _step_ok(s, j, p, q, t, y[j]) and p + t in reach[j + 1]
                for t in range(y[j] + 1)
            ):
                reach[j].add(p)
    return reach


def _step_ok(s: SSequence, j: int, p: int, q: int, t: int, y_next: int) -> bool:
    """Whether v_{j+1} = t is allowed after prefix sums p (for v) and q (for u)."""
    n = s.n
    p_next, q_next = p + t, q + y_next - t
    if j + 1 <= n and not (0 <= p_next <= s.at(j + 1) and 0 <= q_next <= s.at(j + 1)):
        return False
    if 1 <= j <= n - 1:
        step = s.at(j + 1) - s.at(j)
        if step * p > s.at(j) * t or step * q > s.at(j) * (y_next - t):
            return False
    return True


def greedy_minimize_pair(
    first: AlcoveLike, second: AlcoveLike, s: SSequence
) -> Collection:
    """
    The minimal pair via the lexicographically largest smaller element.

    Among all splits y = u + v with v <= u the minimal pair is the one whose
    v is lex-largest, so v is built left to right taking the largest entry
    that still admits a completion. While v and u agree on a prefix the next
    entry of v is capped at half of y's. Swapping u and v maps completions
    of a tied prefix onto each other, so the reachability table needs no
    extra state for the cap.
    """
    require_gate(s)
    first, second = _checked_degree_one(s, first, second)
    y = [a + b for a, b in zip(first.z, second.z)]
    reach = _split_reachability(y, s)
    if 0 not in reach[0]:
        raise ConsistencyError(f"No split of {y} is reachable, not even the input pair")

    prefix = np.cumsum(y).tolist()
    v: List[int] = []
    p = 0
    tied = True
    for j in range(s.n + 1):
        q = prefix[j - 1] - p if j else 0
        cap = y[j] // 2 if tied else y[j]
        t = max(
            t
            for t in range(cap + 1)
            if _step_ok(s, j, p, q, t, y[j]) and p + t in reach[j + 1]
        )
        tied = tied and 2 * t == y[j]
        v.append(t)
        p += t
    u = [a - b for a, b in zip(y, v)]
    if not (is_in_dilate(s, u, 1) and is_in_dilate(s, v, 1)):
        raise ConsistencyError(
            f"Greedy split {u} + {v} of {y} is not a pair of multisets"
        )
    return Collection.of(u, v)


def is_minimal_pair(
    first: AlcoveLike, second: AlcoveLike, s: SSequence
) -> bool:
    pair = Collection.of(first, second)
    return minimize_pair(pair[0], pair[1], s) == pair


@dataclass(frozen=True)
class Binomial:
    """A marked binomial: ``lead`` is the non-minimal pair, ``trail`` its minimizer."""

    lead: Collection
    trail: Collection

    def __post_init__(self) -> None:
        if len(self.lead) != 2 or len(self.trail) != 2:
            raise InvalidInputError("Both terms of a quadratic binomial are pairs")
        if self.lead.total() != self.trail.total():
            raise InvalidInputError(
                f"Terms {self.lead.to_list()} and {self.trail.to_list()} differ in multiunion"
            )
        if collection_compare(self.lead, self.trail) != Ordering.GREATER:
            raise InvalidInputError(
                f"Leading term {self.lead.to_list()} must exceed {self.trail.to_list()}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {"lead": self.lead.to_list(), "trail": self.trail.to_list()}


def groebner_basis(
    s: SSequence, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[Binomial]:
    """
    The reduced quadratic Gröbner basis of the toric ideal of P_n^s.

    One binomial per non-minimal pair of multisets (repeats allowed), sorted
    by leading term, largest first.

    >>> len(lh.groebner_basis(lh.SSequence((1,))))
    0
    """
    require_gate(s)
    points = enumerate_multisets(s, budget=budget)
    basis = []
    for first, second in itertools.combinations_with_replacement(points, 2):
        pair = Collection.of(first, second)
        trail = minimize_pair(first, second, s, budget=budget)
        if trail != pair:
            basis.append(Binomial(pair, trail))
    basis.sort(key=lambda b: _key(b.lead), reverse=True)
    logger.debug("groebner basis for s=%s has %d binomials", s, len(basis))
    return basis


def normal_form(
    collection: Collection,
    s: SSequence,
    rng: Optional[np.random.Generator] = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Collection:
    """
    Reduces a collection until every pair in it is minimal.

    Parameters
    ----------
    collection: Collection
        Degree-1 multisets.
    s: SSequence
    rng: numpy.random.Generator, optional
        When given, each step reduces a randomly chosen non-minimal pair.
        Otherwise the lex-greatest non-minimal pair is reduced first.
    budget: int
        Enumeration budget for the multiset scan.

    Returns
    -------
    Collection
        The minimal collection with the same multiunion.

    Examples
    --------
    >>> c = lh.Collection.of((0, 0, 3, 1), (0, 0, 1, 3), (0, 0, 0, 4))
    >>> lh.normal_form(c, lh.SSequence((1, 2, 3))).to_list()
    [[0, 0, 2, 2], [0, 0, 1, 3], [0, 0, 1, 3]]
    """
    require_gate(s)
    _checked_degree_one(s, *collection)
    points = enumerate_multisets(s, budget=budget)
    cap = max(1, len(collection) ** 2 * len(points))
    cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Collection] = {}

    def reduced(a: AlcovePoint, b: AlcovePoint) -> Collection:
        key = (a.z, b.z)
        if key not in cache:
            cache[key] = minimize_pair(a, b, s, budget=budget)
        return cache[key]

    current = collection
    for step in range(cap + 1):
        eligible = []
        for i, j in current.pairs():
            pair = Collection.of(current[i], current[j])
            if reduced(current[i], current[j]) != pair:
                eligible.append((pair, i, j))
        if not eligible:
            logger.debug("normal form reached after %d reductions", step)
            return current
        if rng is None:
            pair, i, j = max(eligible, key=lambda e: _key(e[0]))
        else:
            pair, i, j = eligible[int(rng.integers(len(eligible)))]
        current = current.replace(i, j, reduced(current[i], current[j]))
    raise ConsistencyError(
        f"Reduction of {collection.to_list()} did not terminate within {cap} steps"
    )


def is_standard(collection: Collection, s: SSequence) -> bool:
    """
    True iff every pair in the collection is minimal.

    >>> lh.is_standard(lh.Collection.of((1, 1, 1, 1), (0, 0, 0, 4)), lh.SSequence((1, 2, 3)))
    True
    """
    require_gate(s)
    return all(
        is_minimal_pair(collection[i], collection[j], s) for i, j in collection.pairs()
    )


def lemma_sp_check(collection: Collection, s: SSequence) -> CheckResult:
    """
    For a pairwise minimal collection, compares the first nonzero position of
    its i-th element with alpha_i of the multiunion.

    The identity is known to hold for strictly increasing s; for s with
    repeated entries it can fail, e.g. s=(1,1,2) and the minimal pair
    {(1,0,1,1), (0,1,1,1)}.
    """
    if not is_standard(collection, s):
        raise InvalidInputError(f"{collection.to_list()} is not pairwise minimal")
    if len(set(s)) < s.n:
        warnings.warn(
            f"s={s.to_list()} has repeated entries; ell and alpha need not agree",
            UserWarning,
        )
    y = collection.total()
    for i, x in enumerate(collection, start=1):
        expected = alpha(y, i, s)
        if ell(x.z) != expected:
            return CheckResult.failed(
                "ell-alpha", {"position": i, "ell": ell(x.z), "alpha": expected}
            )
    return CheckResult.passed()


def minimal_collection(
    y: Sequence[int],
    k: int,
    s: SSequence,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Optional[Collection]:
    """
    Brute-force minimal collection of k multisets with multiunion y, or None
    if y is not a sum of k multisets.
    """
    require_gate(s)
    y = tuple(y)
    check_dimensions(s.n + 1, y)
    # ascending, so the first complete collection found is the minimum
    points = sorted(enumerate_multisets(s), key=lambda p: p.z)
    visited = 0
    best: Optional[Collection] = None

    def search(
        start: int, chosen: List[AlcovePoint], remaining: Tuple[int, ...]
    ) -> None:
        nonlocal visited, best
        visited += 1
        if visited > budget:
            raise BudgetExceededError(
                f"Minimal collection search visited more than {budget} nodes"
            )
        if len(chosen) == k:
            if not any(remaining):
                candidate = Collection(tuple(chosen))
                if best is None or _key(candidate) < _key(best):
                    best = candidate
            return
        for idx in range(start, len(points)):
            rest = tuple(a - b for a, b in zip(remaining, points[idx].z))
            if min(rest) >= 0:
                search(idx, chosen + [points[idx]], rest)

    search(0, [], y)
    return best


@functools.lru_cache(maxsize=64)
def _minimal_pairs(s: SSequence, budget: int) -> FrozenSet[Tuple[int, int]]:
    points = enumerate_multisets(s, budget=budget)
    return frozenset(
        (i, j)
        for i, j in itertools.combinations_with_replacement(range(len(points)), 2)
        if is_minimal_pair(points[i], points[j], s)
    )


def standard_collections(
    s: SSequence, k: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[Collection]:
    """All pairwise minimal collections of k multisets, repeats allowed."""
    require_gate(s)
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    points = enumerate_multisets(s, budget=budget)
    minimal = _minimal_pairs(s, budget)
    result = []
    for combo in itertools.combinations_with_replacement(range(len(points)), k):
        if all((i, j) in minimal for i, j in itertools.combinations(combo, 2)):
            result.append(Collection(tuple(points[i] for i in combo)))
    return result
