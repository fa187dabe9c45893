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
The alcoved form of the s-lecture hall simplex.

Successive differences plus a homogenizing last coordinate map P_n^s onto a
polytope whose lattice points are multiplicity vectors of multisets on
{1, ..., n+1}. Every function taking ``s`` here requires a weakly increasing
sequence with 0,1-differences and raises :class:`GateError` otherwise,
except :func:`diff_support`.
"""

import functools
import itertools
import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Sequence, Tuple, Union

import numpy as np  # type: ignore

from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    DimensionMismatchError,
    GateError,
    InvalidInputError,
    Ordering,
    check_budget,
    check_dimensions,
    check_int64,
    checked_mul,
)
from lecturehall.core import (
    LatticePoint,
    PointLike,
    SSequence,
    _as_int,
    as_point,
    box_size,
    iter_box_slices,
    simplex_contains,
)

logger = logging.getLogger(__name__)


def require_gate(s: SSequence) -> None:
    if not (s.weakly_increasing and s.zero_one_diff):
        raise GateError(
            f"s={s.to_list()} must be weakly increasing with 0,1-differences "
            f"starting from s_0 = 0 (so s_1 = 1)"
        )


@dataclass(frozen=True, order=True)
class AlcovePoint:
    """
    A lattice point of k*A_n^s, read as the multiplicity vector of a multiset
    on {1, ..., n+1}. ``degree`` is k.
    """

    z: Tuple[int, ...]
    degree: int = 1

    def __post_init__(self) -> None:
        values = tuple(_as_int(v, "multiplicity") for v in self.z)
        check_int64(*values)
        if _as_int(self.degree, "degree") < 1:
            raise InvalidInputError(f"degree must be at least 1, got {self.degree}")
        object.__setattr__(self, "z", values)

    def to_list(self) -> List[int]:
        return list(self.z)

    def __len__(self) -> int:
        return len(self.z)

    def __iter__(self) -> Iterator[int]:
        return iter(self.z)

    def __getitem__(self, item: int) -> int:
        return self.z[item]

    def __str__(self) -> str:
        return render_multiset(self.z)


AlcoveLike = Union[AlcovePoint, Sequence[int]]


def as_alcove(value: AlcoveLike, degree: int = 1) -> AlcovePoint:
    if isinstance(value, AlcovePoint):
        return value
    return AlcovePoint(tuple(value), degree)


def lex_compare(a: Sequence[int], b: Sequence[int]) -> Ordering:
    """
    Lexicographic order: a > b iff the leftmost nonzero entry of a - b is
    positive.

    >>> lh.lex_compare((0, 0, 3, 1), (0, 0, 2, 2))
    <Ordering.GREATER: 1>
    """
    a, b = list(a), list(b)
    check_dimensions(len(a), b)
    for x, y in zip(a, b):
        if x != y:
            return Ordering.from_int(x - y)
    return Ordering.EQUAL


@dataclass(frozen=True)
class Collection:
    """
    A multiset of alcove points of one degree, stored lex-decreasing.

    Examples
    --------
    >>> c = lh.Collection.of([0, 0, 1, 3], [0, 0, 3, 1])
    >>> c.to_list()
    [[0, 0, 3, 1], [0, 0, 1, 3]]
    >>> c.total()
    (0, 0, 4, 4)
    """

    elems: Tuple[AlcovePoint, ...] = ()

    def __post_init__(self) -> None:
        elems = tuple(as_alcove(e) for e in self.elems)
        if len({e.degree for e in elems}) > 1:
            raise InvalidInputError(
                "A collection cannot mix points of different degrees"
            )
        if len({len(e) for e in elems}) > 1:
            raise DimensionMismatchError(
                "All points of a collection need the same length"
            )
        object.__setattr__(
            self, "elems", tuple(sorted(elems, key=lambda e: e.z, reverse=True))
        )

    @classmethod
    def of(cls, *points: AlcoveLike) -> "Collection":
        return cls(tuple(as_alcove(p) for p in points))

    def total(self) -> Tuple[int, ...]:
        """The multiunion as a multiplicity vector."""
        if not self.elems:
            return ()
        return tuple(int(v) for v in np.sum([e.z for e in self.elems], axis=0))

    def pairs(self) -> List[Tuple[int, int]]:
        """Index pairs (i, j), i < j, of the stored order."""
        return list(itertools.combinations(range(len(self.elems)), 2))

    def replace(self, i: int, j: int, pair: "Collection") -> "Collection":
        kept = [e for idx, e in enumerate(self.elems) if idx not in (i, j)]
        return Collection(tuple(kept) + pair.elems)

    def to_list(self) -> List[List[int]]:
        return [e.to_list() for e in self.elems]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[AlcovePoint]:
        return iter(self.elems)

    def __getitem__(self, item: int) -> AlcovePoint:
        return self.elems[item]

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.elems) + "]"


def collection_compare(a: Collection, b: Collection) -> Ordering:
    """Compares two sorted collections at their first differing element."""
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"Cannot compare collections of sizes {len(a)} and {len(b)}"
        )
    for x, y in zip(a, b):
        order = lex_compare(x.z, y.z)
        if order != Ordering.EQUAL:
            return order
    return Ordering.EQUAL


def diff_support(s: SSequence) -> FrozenSet[int]:
    """
    Indices i in 1..n+1 with s_{i-1} < s_i.

    >>> sorted(lh.diff_support(lh.SSequence((1, 1, 2))))
    [1, 3, 4]
    """
    return frozenset(i for i in range(1, s.n + 2) if s.at(i - 1) < s.at(i))


def _rows(s: SSequence, z: Sequence[int]) -> np.ndarray:
    z = list(z)
    check_dimensions(s.n + 1, z)
    check_int64(*z)
    return np.array([z], dtype=np.int64)


def lemma_mask(s: SSequence, points: np.ndarray) -> np.ndarray:
    """
    Vectorized combinatorial characterization of the degree-1 lattice points.

    Rows of ``points`` have length n+1.
    """
    n = s.n
    prefix = np.cumsum(points, axis=1)
    bounds = np.array([s.at(j) for j in range(1, n + 2)], dtype=np.int64)
    mask = prefix[:, n] == s.s_ext
    mask &= np.all((prefix >= 0) & (prefix <= bounds), axis=1)
    seen_nonzero = np.zeros(points.shape[0], dtype=bool)
    for i in range(n + 1):
        if s.at(i + 1) == s.at(i):
            mask &= points[:, i] >= 0
        else:
            mask &= ~seen_nonzero | (points[:, i] >= 1)
        seen_nonzero |= points[:, i] != 0
    return mask


def dilate_mask(s: SSequence, points: np.ndarray, k: int) -> np.ndarray:
    """Vectorized inequality description of k*A_n^s."""
    n = s.n
    prefix = np.cumsum(points, axis=1)
    mask = prefix[:, n] == k * s.s_ext
    for j in range(1, n + 1):
        mask &= (prefix[:, j - 1] >= 0) & (prefix[:, j - 1] <= k * s.at(j))
    for j in range(1, n):
        step = s.at(j + 1) - s.at(j)
        lhs = step * prefix[:, j - 1]
        mask &= (lhs >= 0) & (lhs <= s.at(j) * points[:, j])
    return mask


def lemma_conditions(s: SSequence, z: Sequence[int]) -> bool:
    """
    Combinatorial test for membership in A_n^s.

    With s_0 = 0 and s_{n+1} = s_n + 1, z qualifies iff

    1. its entries sum to s_{n+1},
    2. 0 <= z_1 + ... + z_j <= s_j for every j in 1..n+1,
    3. z_{i+1} >= 0 whenever s_{i+1} = s_i,
    4. z_{i+1} >= 1 whenever s_{i+1} > s_i and some earlier z is nonzero,

    with 3. and 4. ranging over i = 0..n.

    Examples
    --------
    >>> s = lh.SSequence((1, 2, 3))
    >>> lh.lemma_conditions(s, (0, 0, 2, 2)), lh.lemma_conditions(s, (0, 2, 0, 2))
    (True, False)
    """
    require_gate(s)
    return bool(lemma_mask(s, _rows(s, z))[0])


def is_in_dilate(s: SSequence, z: Sequence[int], k: int = 1) -> bool:
    """
    Membership in k*A_n^s by its linear inequalities.

    >>> lh.is_in_dilate(lh.SSequence((1, 2, 3)), (0, 0, 2, 6), 2)
    True
    """
    require_gate(s)
    if k < 1:
        raise InvalidInputError(f"The dilation factor k must be at least 1, got {k}")
    check_int64(checked_mul(k, s.s_ext) * max(s))
    return bool(dilate_mask(s, _rows(s, z), k)[0])


def to_alcove(s: SSequence, x: PointLike, k: int = 1) -> AlcovePoint:
    """
    Maps a lattice point of k*P_n^s to k*A_n^s.

    >>> lh.to_alcove(lh.SSequence((1, 2, 3)), (0, 1, 3)).z
    (0, 1, 2, 1)
    """
    require_gate(s)
    x = as_point(x)
    if not simplex_contains(s, x, k):
        raise InvalidInputError(f"{x.to_list()} is not a lattice point of {k}*P_n^s")
    padded = (0,) + x.coords
    diffs = tuple(b - a for a, b in zip(padded, padded[1:]))
    return AlcovePoint(diffs + (k * s.s_ext - x[s.n - 1],), k)


def from_alcove(s: SSequence, z: AlcoveLike) -> LatticePoint:
    """
    Partial sums with the homogenizing coordinate dropped.

    >>> lh.from_alcove(lh.SSequence((1, 2, 3)), (0, 2, 1, 1))
    LatticePoint((0, 2, 3))
    """
    z = as_alcove(z)
    if not is_in_dilate(s, z.z, z.degree):
        raise InvalidInputError(
            f"{z.to_list()} is not a lattice point of {z.degree}*A_n^s"
        )
    return LatticePoint(tuple(int(v) for v in np.cumsum(z.z[: s.n])))


def _scan(s: SSequence, k: int, budget: int, lemma: bool) -> List[AlcovePoint]:
    require_gate(s)
    upper = [checked_mul(k, v) for v in s]
    check_int64(checked_mul(k, s.s_ext) * max(s))
    check_budget(box_size(upper), budget, f"Scanning {k}*A_n^s")
    found: List[AlcovePoint] = []
    for chunk in iter_box_slices(upper):
        last = k * s.s_ext - chunk.sum(axis=1, keepdims=True)
        points = np.hstack([chunk, last])
        mask = lemma_mask(s, points) if lemma else dilate_mask(s, points, k)
        found.extend(
            AlcovePoint(tuple(int(v) for v in row), k) for row in points[mask]
        )
    found.sort(key=lambda p: p.z, reverse=True)
    logger.debug("found %d lattice points of %d*A_n^s for s=%s", len(found), k, s)
    return found


@functools.lru_cache(maxsize=64)
def _multisets(s: SSequence, budget: int) -> Tuple[AlcovePoint, ...]:
    return tuple(_scan(s, 1, budget, lemma=True))


def enumerate_multisets(
    s: SSequence, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[AlcovePoint]:
    """
    All s-lecture hall multisets as degree-1 alcove points, lex-decreasing.

    >>> [p.to_list() for p in lh.enumerate_multisets(lh.SSequence((1,)))]
    [[1, 1], [0, 2]]
    """
    return list(_multisets(s, budget))


def enumerate_alcove_dilate(
    s: SSequence, k: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[AlcovePoint]:
    """Lattice points of k*A_n^s, lex-decreasing."""
    if k < 1:
        raise InvalidInputError(f"The dilation factor k must be at least 1, got {k}")
    return _scan(s, k, budget, lemma=False)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def render_multiset(z: Sequence[int]) -> str:
    """
    >>> lh.render_multiset((0, 2, 1, 1))
    '{2^2 3^1 4^1}'
    """
    return "{" + " ".join(f"{i}^{m}" for i, m in enumerate(z, start=1) if m) + "}"


def parse_multiset(text: str, size: int) -> Tuple[int, ...]:
    """Inverse of :func:`render_multiset`; a bare ``i`` counts once."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InvalidInputError(f"Expected a multiset like '{{1^2 3^1}}', got '{text}'")
    counts = [0] * size
    for token in body[1:-1].split():
        match = _TOKEN.match(token)
        if match is None:
            raise InvalidInputError(f"Cannot parse multiset element '{token}'")
        i = int(match.group(1))
        if not 1 <= i <= size:
            raise InvalidInputError(f"Multiset element {i} is outside 1..{size}")
        counts[i - 1] += int(match.group(2) or 1)
    return tuple(counts)
