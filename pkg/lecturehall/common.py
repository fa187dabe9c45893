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

from enum import Enum
from typing import Any, Callable, Iterable, Optional

import numpy as np  # type: ignore

# Largest box (number of candidate lattice points) a single scan may visit
DEFAULT_ENUMERATION_BUDGET = 10**8
# Nodes an exhaustive decomposition search may expand
DEFAULT_SEARCH_BUDGET = 10**6
# n! permutations are enumerated by the Eulerian oracle
MAX_EULERIAN_ORDER = 9
DEFAULT_CONFLUENCE_SCHEDULES = 100
DEFAULT_RANDOM_SEED = 0

INT64_MIN = int(np.iinfo(np.int64).min)
INT64_MAX = int(np.iinfo(np.int64).max)


class DimensionMismatchError(ValueError):
    pass


class InvalidInputError(ValueError):
    pass


class GateError(InvalidInputError):
    """Raised when a sequence is not weakly increasing with 0,1-differences
    but the operation is only defined for such sequences.
    """


class BudgetExceededError(RuntimeError):
    pass


class IntegerOverflowError(OverflowError):
    pass


class ConsistencyError(RuntimeError):
    """A proven structural property failed to hold. This is either an
    implementation bug or a counterexample, never a user error.
    """


def docstring_parameter(*sub: Any) -> Callable[[Any], Any]:
    def dec(obj: Any) -> Any:
        obj.__doc__ = obj.__doc__.format(*sub)
        return obj

    return dec


def check_int64(*values: int) -> None:
    """Raises IntegerOverflowError if any value leaves the signed 64-bit range."""
    for value in values:
        if not INT64_MIN <= value <= INT64_MAX:
            raise IntegerOverflowError(
                f"Value {value} does not fit in a signed 64-bit integer"
            )


def checked_mul(a: int, b: int) -> int:
    product = a * b
    check_int64(product)
    return product


def check_dimensions(expected: int, *vectors: Iterable[Any]) -> None:
    for vector in vectors:
        length = len(list(vector))
        if length != expected:
            raise DimensionMismatchError(
                f"Expected a vector of length {expected}, got length {length}"
            )


def check_budget(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceededError(
            f"{what} needs {size} candidates which exceeds the budget of {budget}"
        )


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @staticmethod
    def from_int(value: int) -> "Ordering":
        if value > 0:
            return Ordering.GREATER
        elif value < 0:
            return Ordering.LESS
        return Ordering.EQUAL


class CheckResult:
    """Outcome of a verification predicate.

    Truthy iff the check passed. ``reason`` is a short machine readable code
    naming the failed invariant and ``detail`` carries the offending object.
    """

    def __init__(
        self, ok: bool, reason: Optional[str] = None, detail: Any = None
    ) -> None:
        self._ok = bool(ok)
        self._reason = reason
        self._detail = detail

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(True)

    @classmethod
    def failed(cls, reason: str, detail: Any = None) -> "CheckResult":
        return cls(False, reason, detail)

    @property
    def ok(self) -> bool:
        return self._ok

    @property
    def reason(self) -> Optional[str]:
        return self._reason

    @property
    def detail(self) -> Any:
        return self._detail

    def __bool__(self) -> bool:
        return self._ok

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, bool):
            return self._ok == other
        if isinstance(other, CheckResult):
            return (self._ok, self._reason) == (other._ok, other._reason)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._ok, self._reason))

    def __repr__(self) -> str:
        if self._ok:
            return "CheckResult(ok=True)"
        return (
            f"CheckResult(ok=False, reason={self._reason!r}, "
            f"detail={self._detail!r})"
        )
