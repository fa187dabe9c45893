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

from lecturehall._version import (  # noqa: F401
    __title__,
    __description__,
    __version__,
    __author__,
    __maintainer__,
)
from lecturehall.common import (
    BudgetExceededError,
    CheckResult,
    ConsistencyError,
    DimensionMismatchError,
    GateError,
    IntegerOverflowError,
    InvalidInputError,
    Ordering,
)
from lecturehall.core import (
    LabeledPoset,
    LatticePoint,
    SSequence,
    cone_contains,
    count_dilate_points,
    enumerate_dilate_points,
    is_partition,
    join,
    meet,
    natural_posets,
    order_polytope_contains,
    random_natural_poset,
    simplex_contains,
    translation_window_check,
)
from lecturehall.ehrhart import (
    IntPolynomial,
    binomial,
    cone_partition_counts,
    ehrhart_counts,
    eulerian_oracle,
    hstar,
    hstar_from_counts,
    lecture_hall_gf,
    linear_extension_oracle,
    odd_product_gf,
)
from lecturehall.idp import (
    DecompositionChain,
    decomposition_report,
    find_chains,
    idp_brute_oracle,
    idp_decompose,
    sandwich_check,
    triangle_leq,
    verify_chain,
)
from lecturehall.alcove import (
    AlcovePoint,
    Collection,
    collection_compare,
    diff_support,
    enumerate_alcove_dilate,
    enumerate_multisets,
    from_alcove,
    is_in_dilate,
    lemma_conditions,
    lex_compare,
    parse_multiset,
    render_multiset,
    to_alcove,
)
from lecturehall.groebner import (
    Binomial,
    alpha,
    ell,
    greedy_minimize_pair,
    groebner_basis,
    is_minimal_pair,
    is_standard,
    lemma_sp_check,
    minimal_collection,
    minimize_pair,
    normal_form,
    standard_collections,
)
from lecturehall.triangulation import (
    SimplicialComplex,
    build_triangulation,
    compatibility_graph,
    f_vector_of,
    h_vector,
    normalized_volume,
    triangulation_report,
    verify_cover,
    verify_unimodular,
)
from lecturehall.utils import OutputFormat
from lecturehall.verify import run_suite

__all__ = [
    "AlcovePoint",
    "Binomial",
    "BudgetExceededError",
    "CheckResult",
    "Collection",
    "ConsistencyError",
    "DecompositionChain",
    "DimensionMismatchError",
    "GateError",
    "IntPolynomial",
    "IntegerOverflowError",
    "InvalidInputError",
    "LabeledPoset",
    "LatticePoint",
    "Ordering",
    "OutputFormat",
    "SSequence",
    "SimplicialComplex",
    "alpha",
    "binomial",
    "build_triangulation",
    "collection_compare",
    "compatibility_graph",
    "cone_contains",
    "cone_partition_counts",
    "count_dilate_points",
    "decomposition_report",
    "diff_support",
    "ehrhart_counts",
    "ell",
    "enumerate_alcove_dilate",
    "enumerate_dilate_points",
    "enumerate_multisets",
    "eulerian_oracle",
    "f_vector_of",
    "find_chains",
    "from_alcove",
    "greedy_minimize_pair",
    "groebner_basis",
    "h_vector",
    "hstar",
    "hstar_from_counts",
    "idp_brute_oracle",
    "idp_decompose",
    "is_in_dilate",
    "is_minimal_pair",
    "is_partition",
    "is_standard",
    "join",
    "lecture_hall_gf",
    "lemma_conditions",
    "lemma_sp_check",
    "lex_compare",
    "linear_extension_oracle",
    "meet",
    "minimal_collection",
    "minimize_pair",
    "natural_posets",
    "normal_form",
    "normalized_volume",
    "odd_product_gf",
    "order_polytope_contains",
    "parse_multiset",
    "random_natural_poset",
    "render_multiset",
    "run_suite",
    "sandwich_check",
    "simplex_contains",
    "standard_collections",
    "to_alcove",
    "translation_window_check",
    "triangle_leq",
    "triangulation_report",
    "verify_chain",
    "verify_cover",
    "verify_unimodular",
]
