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
Parameter sequences, labeled posets and exact membership tests for
s-lecture hall cones, simplices and order polytopes.

All predicates work on integers only. Ratios ``a/b <= c/d`` are compared as
``a*d <= c*b`` so that no rational or floating point value is ever formed.
"""

import itertools
import json
import logging
import os
from dataclasses import dataclass
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx  # type: ignore
import numpy as np  # type: ignore

from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    CheckResult,
    DimensionMismatchError,
    InvalidInputError,
    check_budget,
    check_dimensions,
    check_int64,
    checked_mul,
    docstring_parameter,
)

logger = logging.getLogger(__name__)


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InvalidInputError(f"{what} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class SSequence:
    """
    The parameter sequence s = (s_1, ..., s_n) of positive integers.

    ``s0`` is fixed to 0 and ``s_ext`` is s_n + 1, so that differences are
    anchored at 0 and the homogenizing coordinate of the alcove transform
    has a target sum.

    Examples
    --------
    >>> s = lh.SSequence.parse("1,2,3")
    >>> s.n, s.s_ext, s.zero_one_diff
    (3, 4, True)
    >>> lh.SSequence((1, 1, 3)).zero_one_diff
    False
    """

    s: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(_as_int(v, "s entry") for v in self.s)
        if not values:
            raise InvalidInputError("s must contain at least one entry")
        for value in values:
            if value < 1:
                raise InvalidInputError(
                    f"s entries must be positive integers, got {list(values)}"
                )
        check_int64(*values)
        object.__setattr__(self, "s", values)

    @classmethod
    def parse(cls, text: str) -> "SSequence":
        try:
            values = tuple(int(part) for part in text.split(",") if part.strip())
        except ValueError:
            raise InvalidInputError(
                f"Expected a comma separated list of integers (e.g. 1,2,3). Got '{text}'"
            ) from None
        return cls(values)

    @classmethod
    def lecture_hall(cls, n: int) -> "SSequence":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def ones(cls, n: int) -> "SSequence":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def s0(self) -> int:
        return 0

    @property
    def s_ext(self) -> int:
        return self.s[-1] + 1

    @property
    def weakly_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.s, self.s[1:]))

    @property
    def zero_one_diff(self) -> bool:
        padded = (self.s0,) + self.s
        return all(b - a in (0, 1) for a, b in zip(padded, padded[1:]))

    def at(self, i: int) -> int:
        """1-based access, with s_0 = 0 and s_{n+1} = s_n + 1."""
        if i == 0:
            return self.s0
        if 1 <= i <= self.n:
            return self.s[i - 1]
        if i == self.n + 1:
            return self.s_ext
        raise IndexError(f"index {i} outside 0..{self.n + 1}")

    def product(self) -> int:
        result = 1
        for value in self.s:
            result = checked_mul(result, value)
        return result

    def to_list(self) -> List[int]:
        return list(self.s)

    def __len__(self) -> int:
        return len(self.s)

    def __iter__(self) -> Iterator[int]:
        return iter(self.s)

    def __getitem__(self, item: int) -> int:
        return self.s[item]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.s)


@dataclass(frozen=True, order=True)
class LatticePoint:
    """An integer vector; its length is the ambient dimension."""

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(_as_int(v, "coordinate") for v in self.coords)
        check_int64(*values)
        object.__setattr__(self, "coords", values)

    @classmethod
    def zeros(cls, n: int) -> "LatticePoint":
        return cls((0,) * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def to_list(self) -> List[int]:
        return list(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, item: int) -> int:
        return self.coords[item]

    def __add__(self, other: "PointLike") -> "LatticePoint":
        other = as_point(other)
        check_dimensions(self.dim, other)
        return LatticePoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PointLike") -> "LatticePoint":
        other = as_point(other)
        check_dimensions(self.dim, other)
        return LatticePoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __repr__(self) -> str:
        return f"LatticePoint({self.coords!r})"


PointLike = Union[LatticePoint, Sequence[int]]


def as_point(value: PointLike) -> LatticePoint:
    if isinstance(value, LatticePoint):
        return value
    return LatticePoint(tuple(value))


class LabeledPoset:
    """
    A naturally labeled partial order on {1, ..., n}.

    Built from cover relations (i, j) meaning i precedes j; the relation is
    closed transitively and reflexively at construction. Natural labeling
    (i precedes j implies i <= j) is checked eagerly; since every strict
    relation then goes from a smaller to a larger label, antisymmetry holds
    automatically.

    Examples
    --------
    >>> p = lh.LabeledPoset(3, [(1, 3), (2, 3)])
    >>> p.strict_relations
    ((1, 3), (2, 3))
    >>> p.leq(1, 3), p.leq(1, 2)
    (True, False)
    """

    def __init__(self, n: int, covers: Iterable[Sequence[int]] = ()) -> None:
        n = _as_int(n, "n")
        if n < 1:
            raise InvalidInputError(
                f"A poset needs a positive ground set size, got {n}"
            )

        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, n + 1))
        for pair in covers:
            if len(pair) != 2:
                raise InvalidInputError(f"Cover relations are pairs, got {pair!r}")
            i, j = _as_int(pair[0], "cover index"), _as_int(pair[1], "cover index")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInputError(f"Cover ({i}, {j}) is outside 1..{n}")
            if i > j:
                raise InvalidInputError(
                    f"Poset is not naturally labeled: {i} precedes {j} but {i} > {j}"
                )
            if i != j:
                graph.add_edge(i, j)

        closure = nx.transitive_closure_dag(graph)
        self._n = n
        self._graph = closure
        self._strict = tuple(sorted(closure.edges()))
        self._relation: FrozenSet[Tuple[int, int]] = frozenset(
            self._strict + tuple((i, i) for i in range(1, n + 1))
        )

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Sequence[int]]) -> "LabeledPoset":
        return cls(n, covers)

    @classmethod
    def chain(cls, n: int) -> "LabeledPoset":
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> "LabeledPoset":
        return cls(n, [])

    @classmethod
    def from_json(
        cls, source: Union[str, "os.PathLike[str]", Mapping[str, Any]]
    ) -> "LabeledPoset":
        """Reads ``{"n": int, "covers": [[i, j], ...]}`` (1-based, i precedes j)."""
        if isinstance(source, Mapping):
            data = source
        else:
            with open(source, mode="r") as f:
                try:
                    data = json.load(f)
                except json.JSONDecodeError as e:
                    raise InvalidInputError(
                        f"Poset file {source} is not JSON: {e}"
                    ) from None
        if not isinstance(data, Mapping) or "n" not in data:
            raise InvalidInputError(
                'Expected a poset object of the form {"n": int, "covers": [[i, j], ...]}'
            )
        return cls.from_covers(data["n"], data.get("covers", []))

    def to_json(self) -> Dict[str, Any]:
        reduction = nx.transitive_reduction(self._graph)
        return {"n": self._n, "covers": [list(e) for e in sorted(reduction.edges())]}

    @property
    def n(self) -> int:
        return self._n

    @property
    def relation(self) -> FrozenSet[Tuple[int, int]]:
        return self._relation

    @property
    def strict_relations(self) -> Tuple[Tuple[int, int], ...]:
        return self._strict

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self._relation

    def is_chain(self) -> bool:
        return len(self._strict) == self._n * (self._n - 1) // 2

    def linear_extensions(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(order) for order in nx.all_topological_sorts(self._graph))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return self._n == other._n and self._relation == other._relation

    def __hash__(self) -> int:
        return hash((self._n, self._relation))

    def __repr__(self) -> str:
        return f"LabeledPoset(n={self._n}, strict={list(self._strict)})"


def natural_posets(n: int) -> List[LabeledPoset]:
    """All naturally labeled posets on {1, ..., n}, deduplicated."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen: Dict[Tuple[Tuple[int, int], ...], LabeledPoset] = {}
    for mask in range(1 << len(pairs)):
        covers = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
        poset = LabeledPoset(n, covers)
        seen.setdefault(poset.strict_relations, poset)
    return [seen[key] for key in sorted(seen)]


def random_natural_poset(
    n: int, rng: np.random.Generator, density: float = 0.5
) -> LabeledPoset:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = [pair for pair in pairs if rng.random() < density]
    return LabeledPoset(n, chosen)


def _check_k(k: int) -> int:
    k = _as_int(k, "k")
    if k < 1:
        raise InvalidInputError(f"The dilation factor k must be at least 1, got {k}")
    return k


def cone_contains(s: SSequence, lam: PointLike) -> bool:
    """
    True iff 0 <= lam_1/s_1 <= ... <= lam_n/s_n.

    Examples
    --------
    >>> s = lh.SSequence((1, 2, 3))
    >>> lh.cone_contains(s, (0, 1, 2)), lh.cone_contains(s, (2, 1, 0))
    (True, False)
    """
    lam = as_point(lam)
    check_dimensions(s.n, lam)
    if lam[0] < 0:
        return False
    for i in range(s.n - 1):
        if checked_mul(lam[i], s[i + 1]) > checked_mul(lam[i + 1], s[i]):
            return False
    return True


def simplex_contains(s: SSequence, lam: PointLike, k: int = 1) -> bool:
    """
    Membership in the k-th dilate of the s-lecture hall simplex.

    >>> lh.simplex_contains(lh.SSequence((1, 2, 3)), (1, 3, 5), 2)
    True
    """
    k = _check_k(k)
    lam = as_point(lam)
    return cone_contains(s, lam) and lam[s.n - 1] <= checked_mul(k, s[s.n - 1])


def _check_poset_dims(poset: LabeledPoset, s: SSequence, *vectors: PointLike) -> None:
    if poset.n != s.n:
        raise DimensionMismatchError(
            f"Poset has {poset.n} elements but s has length {s.n}"
        )
    check_dimensions(s.n, *vectors)


def is_partition(poset: LabeledPoset, s: SSequence, lam: PointLike) -> bool:
    """
    The (P,s)-partition inequalities: lam_i*s_j <= lam_j*s_i whenever i
    precedes j.
    """
    lam = as_point(lam)
    _check_poset_dims(poset, s, lam)
    for i, j in poset.strict_relations:
        if checked_mul(lam[i - 1], s.at(j)) > checked_mul(lam[j - 1], s.at(i)):
            return False
    return True


def order_polytope_contains(
    poset: LabeledPoset, s: SSequence, lam: PointLike, k: int = 1
) -> bool:
    """
    Membership in k * O(P, s).

    >>> p = lh.LabeledPoset(3, [(1, 3), (2, 3)])
    >>> lh.order_polytope_contains(p, lh.SSequence((1, 1, 2)), (1, 0, 1))
    False
    """
    k = _check_k(k)
    lam = as_point(lam)
    _check_poset_dims(poset, s, lam)
    for value, bound in zip(lam, s):
        if value < 0 or value > checked_mul(k, bound):
            return False
    return is_partition(poset, s, lam)


def meet(a: PointLike, b: PointLike) -> LatticePoint:
    a, b = as_point(a), as_point(b)
    check_dimensions(a.dim, b)
    return LatticePoint(tuple(min(x, y) for x, y in zip(a, b)))


def join(a: PointLike, b: PointLike) -> LatticePoint:
    a, b = as_point(a), as_point(b)
    check_dimensions(a.dim, b)
    return LatticePoint(tuple(max(x, y) for x, y in zip(a, b)))


def iter_box_slices(upper: Sequence[int]) -> Iterator[np.ndarray]:
    """
    Yields the integer points of prod [0, upper_i] as int64 arrays, one slice
    per value of the first coordinate. Concatenating the slices gives the
    points in lexicographic order.
    """
    head, tail = upper[0], list(upper[1:])
    if tail:
        tail_grid = (
            np.indices([u + 1 for u in tail], dtype=np.int64).reshape(len(tail), -1).T
        )
    else:
        tail_grid = np.zeros((1, 0), dtype=np.int64)
    for value in range(head + 1):
        first = np.full((tail_grid.shape[0], 1), value, dtype=np.int64)
        yield np.hstack([first, tail_grid])


def box_size(upper: Sequence[int]) -> int:
    size = 1
    for u in upper:
        size *= u + 1
    return size


def partition_mask(poset: LabeledPoset, s: SSequence, points: np.ndarray) -> np.ndarray:
    """Vectorized is_partition over the rows of ``points``."""
    mask = np.ones(points.shape[0], dtype=bool)
    for i, j in poset.strict_relations:
        mask &= points[:, i - 1] * s.at(j) <= points[:, j - 1] * s.at(i)
    return mask


def _dilate_bounds(poset: LabeledPoset, s: SSequence, k: int, budget: int) -> List[int]:
    _check_poset_dims(poset, s)
    upper = [checked_mul(k, v) for v in s]
    # the largest cross product formed by partition_mask
    check_int64(max(upper) * max(s))
    check_budget(box_size(upper), budget, f"Scanning {k}*O(P,s)")
    return upper


@docstring_parameter(DEFAULT_ENUMERATION_BUDGET)
def enumerate_dilate_points(
    poset: LabeledPoset,
    s: SSequence,
    k: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> List[LatticePoint]:
    """
    All lattice points of k * O(P, s) in lexicographic order.

    The scan covers the box prod [0, k*s_i] which contains every lattice
    point of the dilate, and filters by the (P,s)-partition inequalities.

    Parameters
    ----------
    poset: LabeledPoset
    s: SSequence
    k: int, default 1
        Dilation factor, at least 1.
    budget: int, default {0}
        Maximum number of box points to scan.

    Returns
    -------
    list of LatticePoint

    Examples
    --------
    >>> pts = lh.enumerate_dilate_points(lh.LabeledPoset.chain(3), lh.SSequence((1, 2, 3)))
    >>> len(pts), pts[-1]
    (8, LatticePoint((1, 2, 3)))
    """
    k = _check_k(k)
    upper = _dilate_bounds(poset, s, k, budget)
    points: List[LatticePoint] = []
    for chunk in iter_box_slices(upper):
        for row in chunk[partition_mask(poset, s, chunk)]:
            points.append(LatticePoint(tuple(int(v) for v in row)))
    logger.debug("enumerated %d points of %d*O(P,s) for s=%s", len(points), k, s)
    return points


def count_dilate_points(
    poset: LabeledPoset,
    s: SSequence,
    k: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    k = _check_k(k)
    upper = _dilate_bounds(poset, s, k, budget)
    return sum(
        int(np.count_nonzero(partition_mask(poset, s, chunk)))
        for chunk in iter_box_slices(upper)
    )


def translation_window_check(
    poset: LabeledPoset,
    s: SSequence,
    k: int = 1,
    points: Optional[Sequence[LatticePoint]] = None,
) -> CheckResult:
    """Checks that lam + s and lam - s stay (P,s)-partitions on the window k*O(P,s)."""
    if points is None:
        points = enumerate_dilate_points(poset, s, k)
    shift = LatticePoint(s.s)
    for lam in points:
        for moved in (lam + shift, lam - shift):
            if not is_partition(poset, s, moved):
                return CheckResult.failed("translation", moved.to_list())
    return CheckResult.passed()
