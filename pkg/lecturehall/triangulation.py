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
from typing import Any, Dict, List, Tuple

import networkx as nx  # type: ignore
import numpy as np  # type: ignore
import sympy  # type: ignore

from lecturehall.alcove import (
    AlcovePoint,
    enumerate_multisets,
    from_alcove,
    require_gate,
)
from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    CheckResult,
    ConsistencyError,
    InvalidInputError,
)
from lecturehall.core import LabeledPoset, SSequence
from lecturehall.ehrhart import IntPolynomial, binomial, ehrhart_counts
from lecturehall.groebner import is_minimal_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A flag complex on alcove points given by its maximal faces.

    ``f_vector[i]`` is the number of faces with i vertices, so ``f_vector[0]``
    is the empty face.
    """

    vertices: Tuple[AlcovePoint, ...]
    maximal_faces: Tuple[Tuple[int, ...], ...]
    f_vector: Tuple[int, ...]

    @property
    def is_pure(self) -> bool:
        return len({len(face) for face in self.maximal_faces}) <= 1

    @property
    def dim(self) -> int:
        return max((len(face) for face in self.maximal_faces), default=0) - 1

    def face_points(self, face: Tuple[int, ...]) -> List[AlcovePoint]:
        return [self.vertices[i] for i in face]


def compatibility_graph(
    s: SSequence, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> nx.Graph:
    """Graph on the s-lecture hall multisets joining every minimal pair of distinct points."""
    require_gate(s)
    points = enumerate_multisets(s, budget=budget)
    graph = nx.Graph()
    graph.add_nodes_from(points)
    for i, first in enumerate(points):
        for second in points[i + 1 :]:
            if is_minimal_pair(first, second, s):
                graph.add_edge(first, second)
    return graph


def f_vector_of(graph: nx.Graph) -> Tuple[int, ...]:
    """Face numbers of the clique complex, empty face first."""
    sizes = [len(clique) for clique in nx.enumerate_all_cliques(graph)]
    return tuple([1] + np.bincount(sizes).tolist()[1:])


def build_triangulation(
    s: SSequence, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> SimplicialComplex:
    """
    The flag complex of pairwise minimal multisets.

    Its maximal faces are the maximal cliques of the compatibility graph,
    each expected to have n+1 vertices.

    >>> t = lh.build_triangulation(lh.SSequence((1, 2, 3)))
    >>> len(t.maximal_faces), t.f_vector
    (6, (1, 8, 19, 18, 6))
    """
    graph = compatibility_graph(s, budget=budget)
    vertices = tuple(enumerate_multisets(s, budget=budget))
    index = {p: i for i, p in enumerate(vertices)}
    faces = sorted(
        tuple(sorted(index[p] for p in clique)) for clique in nx.find_cliques(graph)
    )
    for face in faces:
        if len(face) != s.n + 1:
            raise ConsistencyError(
                f"Maximal face {[vertices[i].to_list() for i in face]} has {len(face)} "
                f"vertices, expected {s.n + 1}"
            )
    logger.debug("triangulation of s=%s: %d maximal faces", s, len(faces))
    return SimplicialComplex(vertices, tuple(faces), f_vector_of(graph))


def _determinant(rows: List[List[int]]) -> int:
    return int(sympy.Matrix(rows).det(method="bareiss"))


def verify_unimodular(complex_: SimplicialComplex, s: SSequence) -> CheckResult:
    """Every maximal face, mapped back to P_n^s, has edge determinant ±1."""
    for face in complex_.maximal_faces:
        points = [from_alcove(s, p) for p in complex_.face_points(face)]
        base = points[0]
        det = _determinant([(p - base).to_list() for p in points[1:]])
        if abs(det) != 1:
            return CheckResult.failed("determinant", {"face": list(face), "det": det})
    return CheckResult.passed()


def verify_cover(
    complex_: SimplicialComplex,
    s: SSequence,
    kmax: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> CheckResult:
    """
    Ehrhart certificate that the complex triangulates the simplex: the face
    numbers predict L(k) for k <= kmax and there are s_1...s_n maximal faces.
    """
    expected_volume = s.product()
    if len(complex_.maximal_faces) != expected_volume:
        return CheckResult.failed(
            "volume",
            {"faces": len(complex_.maximal_faces), "expected": expected_volume},
        )
    counts = ehrhart_counts(LabeledPoset.chain(s.n), s, kmax, budget=budget)
    for k in range(1, kmax + 1):
        predicted = sum(
            f * binomial(k - 1, i - 1)
            for i, f in enumerate(complex_.f_vector)
            if i >= 1
        )
        if predicted != counts[k]:
            return CheckResult.failed(
                "count", {"k": k, "predicted": predicted, "actual": counts[k]}
            )
    return CheckResult.passed()


def h_vector(complex_: SimplicialComplex) -> IntPolynomial:
    """
    h-polynomial of a pure complex from its f-vector.

    >>> lh.h_vector(lh.build_triangulation(lh.SSequence((1, 2, 3)))).to_list()
    [1, 4, 1]
    """
    if not complex_.is_pure:
        raise InvalidInputError("The h-vector is only defined here for pure complexes")
    d = complex_.dim + 1
    f = list(complex_.f_vector) + [0] * (d + 1 - len(complex_.f_vector))
    h = [
        sum((-1) ** (j - i) * binomial(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    ]
    return IntPolynomial(tuple(h))


def normalized_volume(complex_: SimplicialComplex) -> int:
    """Number of maximal faces, the normalized volume when they are unimodular."""
    return len(complex_.maximal_faces)


def triangulation_report(
    complex_: SimplicialComplex,
    s: SSequence,
    kmax: int = 3,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Dict[str, Any]:
    unimodular = verify_unimodular(complex_, s)
    cover = verify_cover(complex_, s, kmax, budget=budget)
    return {
        "vertices": [p.to_list() for p in complex_.vertices],
        "maximal_faces": [list(face) for face in complex_.maximal_faces],
        "f_vector": list(complex_.f_vector),
        "h_vector": h_vector(complex_).to_list(),
        "unimodular": unimodular.ok,
        "cover_ok": cover.ok,
        "regular": "by construction",
    }
