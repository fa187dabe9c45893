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

# File called _pytest for PyCharm compatibility

import networkx as nx
import pytest

from lecturehall import (
    AlcovePoint,
    InvalidInputError,
    LabeledPoset,
    SimplicialComplex,
    SSequence,
    build_triangulation,
    compatibility_graph,
    f_vector_of,
    h_vector,
    hstar,
    normalized_volume,
    triangulation_report,
    verify_cover,
    verify_unimodular,
)
from lecturehall.tests.common import TestData


class TestTriangulation(TestData):
    def test_lecture_hall(self):
        t = build_triangulation(self.s123())

        assert t.f_vector == (1, 8, 19, 18, 6)
        assert len(t.maximal_faces) == 6
        assert t.is_pure
        assert t.dim == 3
        assert h_vector(t).to_list() == [1, 4, 1]

    def test_segment(self):
        t = build_triangulation(SSequence((1,)))
        assert t.maximal_faces == ((0, 1),)
        assert t.f_vector == (1, 2, 1)
        assert [p.to_list() for p in t.face_points((0, 1))] == [[1, 1], [0, 2]]

    def test_graph(self):
        graph = compatibility_graph(SSequence((1, 1, 2)))
        assert graph.number_of_nodes() == 5
        # the only non-edge: (0, 0, 2, 1) + (0, 0, 0, 3) reduces to twice (0, 0, 1, 2)
        assert graph.number_of_edges() == 9
        assert not graph.has_edge(AlcovePoint((0, 0, 2, 1)), AlcovePoint((0, 0, 0, 3)))

    def test_f_vector_of(self):
        assert f_vector_of(nx.complete_graph(3)) == (1, 3, 3, 1)
        assert f_vector_of(nx.empty_graph(2)) == (1, 2)

    def test_matches_ehrhart(self):
        for s in self.gated_sequences_with_large():
            t = build_triangulation(s)
            assert verify_unimodular(t, s)
            assert verify_cover(t, s, 3)
            assert normalized_volume(t) == s.product()
            assert h_vector(t) == hstar(LabeledPoset.chain(s.n), s)

    def test_hand_computed_h_vectors(self):
        assert h_vector(build_triangulation(SSequence((1, 1, 2)))).to_list() == [1, 1]
        assert h_vector(build_triangulation(SSequence((1, 2, 2)))).to_list() == [1, 3]

    def test_gate(self):
        with pytest.raises(InvalidInputError):
            build_triangulation(SSequence((1, 3)))


class TestDetectsBrokenComplexes(TestData):
    def test_non_unimodular_face(self):
        s = SSequence((1,))
        broken = SimplicialComplex(
            (AlcovePoint((2, 2), 2), AlcovePoint((0, 2))), ((0, 1),), (1, 2, 1)
        )

        result = verify_unimodular(broken, s)
        assert not result
        assert result.reason == "determinant"
        assert result.detail == {"face": [0, 1], "det": -2}

    def test_missing_face(self):
        t = build_triangulation(self.s123())
        broken = SimplicialComplex(t.vertices, t.maximal_faces[1:], t.f_vector)
        assert verify_cover(broken, self.s123(), 2).reason == "volume"

    def test_wrong_face_numbers(self):
        t = build_triangulation(self.s123())
        f = list(t.f_vector)
        f[2] += 1
        broken = SimplicialComplex(t.vertices, t.maximal_faces, tuple(f))

        result = verify_cover(broken, self.s123(), 3)
        assert result.reason == "count"
        assert result.detail == {"k": 2, "predicted": 28, "actual": 27}

    def test_h_vector_needs_pure_complex(self):
        t = build_triangulation(SSequence((1,)))
        mixed = SimplicialComplex(t.vertices, ((0, 1), (1,)), t.f_vector)
        assert not mixed.is_pure
        with pytest.raises(InvalidInputError):
            h_vector(mixed)


class TestReport(TestData):
    def test_report(self):
        report = triangulation_report(build_triangulation(self.s123()), self.s123())

        assert report["f_vector"] == [1, 8, 19, 18, 6]
        assert report["h_vector"] == [1, 4, 1]
        assert report["unimodular"] is True
        assert report["cover_ok"] is True
        assert len(report["vertices"]) == 8
        assert len(report["maximal_faces"]) == 6
        assert report["regular"] == "by construction"
