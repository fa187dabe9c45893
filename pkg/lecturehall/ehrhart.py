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
Ehrhart counting, h*-polynomials and generating-function oracles.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np  # type: ignore
import sympy  # type: ignore

from lecturehall.common import (
    DEFAULT_ENUMERATION_BUDGET,
    MAX_EULERIAN_ORDER,
    InvalidInputError,
    check_budget,
    check_int64,
)
from lecturehall.core import (
    LabeledPoset,
    SSequence,
    box_size,
    count_dilate_points,
    iter_box_slices,
)

logger = logging.getLogger(__name__)

_x = sympy.Symbol("x")


@dataclass(frozen=True)
class IntPolynomial:
    """
    A polynomial with integer coefficients, constant term first.

    Trailing zeros are trimmed so that equal polynomials compare equal.

    Examples
    --------
    >>> p = lh.IntPolynomial((1, 4, 1, 0))
    >>> p.coeffs, p.degree, p(1)
    ((1, 4, 1), 2, 6)
    >>> str(p)
    '1 + 4x + x^2'
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = [int(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_sympy(cls, poly: "sympy.Poly") -> "IntPolynomial":
        coeffs = poly.all_coeffs()[::-1]
        for c in coeffs:
            if not c.is_integer:
                raise InvalidInputError(f"Coefficient {c} of {poly} is not an integer")
        return cls(tuple(int(c) for c in coeffs))

    def to_sympy(self) -> "sympy.Poly":
        return sympy.Poly.from_list(list(self.coeffs[::-1]) or [0], _x, domain="ZZ")

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def truncate(self, degree: int) -> "IntPolynomial":
        return IntPolynomial(self.coeffs[: degree + 1])

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            var = "x" if j == 1 else f"x^{j}"
            sign = "-" if c < 0 else "+"
            if terms:
                terms.append(f"{sign} {mag}{var}")
            else:
                terms.append(f"{'-' if c < 0 else ''}{mag}{var}")
        return " ".join(terms) if terms else "0"


def ehrhart_counts(
    poset: LabeledPoset,
    s: SSequence,
    kmax: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> List[int]:
    """
    L(k) = |k*O(P,s) ∩ Z^n| for k = 0..kmax.

    >>> lh.ehrhart_counts(lh.LabeledPoset.chain(3), lh.SSequence((1, 2, 3)), 3)
    [1, 8, 27, 64]
    """
    if kmax < 0:
        raise InvalidInputError(f"kmax must be nonnegative, got {kmax}")
    counts = [1]
    for k in range(1, kmax + 1):
        counts.append(count_dilate_points(poset, s, k, budget=budget))
    logger.debug("ehrhart counts for s=%s: %s", s, counts)
    return counts


def hstar_from_counts(counts: Sequence[int], dim: int) -> IntPolynomial:
    """
    Recovers the h*-polynomial from the counting function.

    Multiplies the truncated Ehrhart series by (1 - x)^(dim + 1). Every
    coefficient of degree above ``dim`` that the supplied counts determine
    must vanish and the remaining ones must be nonnegative, otherwise the
    counts do not come from a ``dim``-dimensional lattice polytope.

    Parameters
    ----------
    counts: list of int
        L(0), L(1), ... with at least ``dim + 1`` entries and L(0) = 1.
    dim: int
        Dimension of the polytope.

    Returns
    -------
    IntPolynomial

    Examples
    --------
    >>> lh.hstar_from_counts([1, 8, 27, 64], 3)
    IntPolynomial(coeffs=(1, 4, 1))
    >>> lh.hstar_from_counts([1, 2, 3], 1)
    IntPolynomial(coeffs=(1,))
    """
    if dim < 0:
        raise InvalidInputError(f"dim must be nonnegative, got {dim}")
    if len(counts) < dim + 1:
        raise InvalidInputError(
            f"Need at least {dim + 1} counts to recover h* of a {dim}-dimensional polytope, "
            f"got {len(counts)}"
        )
    if counts[0] != 1:
        raise InvalidInputError(f"L(0) must be 1, got {counts[0]}")

    series = IntPolynomial(tuple(counts))
    coeffs = series * IntPolynomial.from_sympy(
        sympy.Poly((1 - _x) ** (dim + 1), _x, domain="ZZ")
    )
    known = len(counts) - 1

    for j in range(dim + 1, known + 1):
        if coeffs[j] != 0:
            raise InvalidInputError(
                f"h* coefficient of degree {j} is {coeffs[j]}; counts are not those of a "
                f"{dim}-dimensional lattice polytope"
            )
    hstar = coeffs.truncate(dim)
    negative = [c for c in hstar.coeffs if c < 0]
    if negative:
        raise InvalidInputError(
            f"h* has negative coefficients {hstar.to_list()}; wrong dim or bad counts"
        )
    return hstar


def hstar(
    poset: LabeledPoset, s: SSequence, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> IntPolynomial:
    """h* of O(P,s), which is full-dimensional so dim = n."""
    return hstar_from_counts(ehrhart_counts(poset, s, s.n, budget=budget), s.n)


def eulerian_oracle(n: int) -> IntPolynomial:
    """
    Eulerian polynomial by brute-force descent counting over all permutations.

    >>> lh.eulerian_oracle(4).to_list()
    [1, 11, 11, 1]
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if n > MAX_EULERIAN_ORDER:
        raise InvalidInputError(
            f"n={n} is too large for permutation enumeration (limit {MAX_EULERIAN_ORDER})"
        )
    descents = [
        sum(1 for a, b in zip(perm, perm[1:]) if a > b)
        for perm in itertools.permutations(range(1, n + 1))
    ]
    return IntPolynomial(tuple(np.bincount(descents, minlength=n).tolist()))


def linear_extension_oracle(poset: LabeledPoset) -> int:
    """Number of linear extensions, the normalized volume of O(P, (1,...,1))."""
    return len(poset.linear_extensions())


def cone_partition_counts(
    s: SSequence, M: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[int]:
    """
    Entry m is the number of lattice points of the s-lecture hall cone with
    coordinate sum m, for m = 0..M.
    """
    if M < 0:
        raise InvalidInputError(f"M must be nonnegative, got {M}")
    upper = [M] * s.n
    check_budget(box_size(upper), budget, f"Scanning the cone up to weight {M}")
    check_int64(M * max(s))

    totals = np.zeros(M + 1, dtype=np.int64)
    for chunk in iter_box_slices(upper):
        weight = chunk.sum(axis=1)
        mask = weight <= M
        for i in range(s.n - 1):
            mask &= chunk[:, i] * s[i + 1] <= chunk[:, i + 1] * s[i]
        totals += np.bincount(weight[mask], minlength=M + 1)
    return [int(v) for v in totals]


def lecture_hall_gf(
    n: int, M: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> List[int]:
    """
    Weight generating function of lecture hall partitions, by enumeration.

    >>> lh.lecture_hall_gf(2, 4)
    [1, 1, 1, 2, 2]
    """
    return cone_partition_counts(SSequence.lecture_hall(n), M, budget=budget)


def odd_product_gf(n: int, M: int) -> List[int]:
    """
    Coefficients of prod_{i=1..n} 1/(1 - q^(2i-1)) up to q^M.

    >>> lh.odd_product_gf(3, 5)
    [1, 1, 1, 2, 2, 3]
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if M < 0:
        raise InvalidInputError(f"M must be nonnegative, got {M}")
    product = IntPolynomial((1,))
    for i in range(1, n + 1):
        part = 2 * i - 1
        geometric = IntPolynomial(
            tuple(1 if m % part == 0 else 0 for m in range(M + 1))
        )
        product = (product * geometric).truncate(M)
    return [product[m] for m in range(M + 1)]


def binomial(n: int, k: int) -> int:
    """math.comb extended by zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


