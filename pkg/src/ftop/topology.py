"""Finite fuzzy topologies over either set backend.

A topology is a finite family of fuzzy sets that contains the constant 0
and constant 1 and is closed under binary meet and binary join.  For a
finite family, pairwise closure already gives closure under all finite
meets and all joins of subfamilies, so the interior and closure operators
become exactly computable folds:

* interior of ``s``  = join of every member below ``s`` (largest open set
  below ``s``);
* closure of ``s``   = meet of every complement-of-member above ``s``
  (smallest closed set above ``s``).

Membership is semantic: a set is open iff it *equals* some member, not iff
it is listed under the same name.  Members are kept deduplicated and in a
canonical order so that reports and witness selection are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, Sequence

from .errors import BackendMismatchError, ResourceCapError
from .fset import FiniteFuzzySet, Universe

__all__ = [
    "FuzzyValue",
    "AxiomViolation",
    "InvalidTopologyError",
    "FuzzyTopology",
    "check_axioms",
    "validate",
    "generate",
    "DEFAULT_GENERATION_CAP",
]

DEFAULT_GENERATION_CAP = 4096


class FuzzyValue(Protocol):
    """What a set backend must provide for topology-level code."""

    def complement(self) -> "FuzzyValue": ...
    def meet(self, other: "FuzzyValue") -> "FuzzyValue": ...
    def join(self, other: "FuzzyValue") -> "FuzzyValue": ...
    def meet_many(self, others: Sequence["FuzzyValue"]) -> "FuzzyValue": ...
    def join_many(self, others: Sequence["FuzzyValue"]) -> "FuzzyValue": ...
    def leq(self, other: "FuzzyValue") -> bool: ...
    def is_zero(self) -> bool: ...
    def bottom(self) -> "FuzzyValue": ...
    def top(self) -> "FuzzyValue": ...
    def sort_key(self): ...


@dataclass(frozen=True)
class AxiomViolation:
    """One failed topology axiom with the witnessing sets.

    ``axiom`` is ``"i"`` (constants missing), ``"ii"`` (a pairwise meet is
    not a member), or ``"iii"`` (a pairwise join is not a member).
    """

    axiom: str
    detail: str
    witnesses: tuple


class InvalidTopologyError(ValueError):
    def __init__(self, violations: Sequence[AxiomViolation]):
        super().__init__("; ".join(v.detail for v in violations))
        self.violations = tuple(violations)


def _check_backend_uniform(values: Sequence[FuzzyValue]) -> None:
    first = values[0]
    for value in values[1:]:
        if type(value) is not type(first):
            raise BackendMismatchError(
                f"mixed backends: {type(first).__name__} and {type(value).__name__}"
            )
        if isinstance(first, FiniteFuzzySet) and value.universe != first.universe:
            first._require_same_universe(value)  # raises UniverseMismatchError


def check_axioms(opens: Sequence[FuzzyValue]) -> list[AxiomViolation]:
    """Report every axiom violation in a candidate family (empty = valid).

    Pairwise meet/join closure is checked against semantic membership; for
    a finite family this is equivalent to closure under all finite meets
    and arbitrary joins of subfamilies.
    """
    if not opens:
        raise ValueError("a topology candidate must be a non-empty family")
    _check_backend_uniform(opens)
    members = list(dict.fromkeys(opens))
    member_set = set(members)
    violations: list[AxiomViolation] = []
    bottom, top = members[0].bottom(), members[0].top()
    if bottom not in member_set:
        violations.append(AxiomViolation("i", "the constant-0 set is not a member", (bottom,)))
    if top not in member_set:
        violations.append(AxiomViolation("i", "the constant-1 set is not a member", (top,)))
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            low = a.meet(b)
            if low not in member_set:
                violations.append(
                    AxiomViolation("ii", "a pairwise meet is not a member", (a, b, low))
                )
            high = a.join(b)
            if high not in member_set:
                violations.append(
                    AxiomViolation("iii", "a pairwise join is not a member", (a, b, high))
                )
    return violations


def validate(opens: Sequence[FuzzyValue]) -> "FuzzyTopology":
    """Return the topology formed by ``opens`` or raise with the violations."""
    violations = check_axioms(opens)
    if violations:
        raise InvalidTopologyError(violations)
    return FuzzyTopology(tuple(sorted(set(opens), key=lambda v: v.sort_key())))


def generate(
    subbasis: Sequence[FuzzyValue],
    *,
    universe: Universe | None = None,
    cap: int | None = None,
) -> "FuzzyTopology":
    """Smallest topology containing ``subbasis``: the meet/join fixpoint.

    ``universe`` is required only for an empty subbasis on the finite
    backend, where there is otherwise nothing to infer the constants from.
    A ``cap`` on the member count (default 4096, overridable) turns the
    potential exponential blow-up into a loud error instead of a silent
    truncation.
    """
    cap = DEFAULT_GENERATION_CAP if cap is None else cap
    if subbasis:
        _check_backend_uniform(list(subbasis))
        bottom, top = subbasis[0].bottom(), subbasis[0].top()
    elif universe is not None:
        bottom, top = FiniteFuzzySet.zero(universe), FiniteFuzzySet.one(universe)
    else:
        raise ValueError("an empty subbasis needs a universe to pick the constants from")

    family: dict[FuzzyValue, None] = dict.fromkeys([bottom, top, *subbasis])
    frontier = list(family)
    while frontier:
        fresh: dict[FuzzyValue, None] = {}
        existing = list(family)
        for a in frontier:
            for b in existing:
                for combined in (a.meet(b), a.join(b)):
                    if combined not in family and combined not in fresh:
                        fresh[combined] = None
        if len(family) + len(fresh) > cap:
            raise ResourceCapError(
                f"generated family exceeds the cap of {cap} members; "
                "raise the cap explicitly if this is intended"
            )
        family.update(fresh)
        frontier = list(fresh)
    return FuzzyTopology(tuple(sorted(family, key=lambda v: v.sort_key())))


@dataclass(frozen=True)
class FuzzyTopology:
    """An immutable, validated finite fuzzy topology.

    Construct through :func:`validate` or :func:`generate`; the constructor
    itself trusts its input.  Operator results are memoized per instance,
    which is safe because members never change and all queries are pure.
    """

    members: tuple[FuzzyValue, ...]

    @cached_property
    def _cache(self) -> dict:
        return {}

    @cached_property
    def bottom(self) -> FuzzyValue:
        return self.members[0].bottom()

    @cached_property
    def top(self) -> FuzzyValue:
        return self.members[0].top()

    @cached_property
    def closed_members(self) -> tuple[FuzzyValue, ...]:
        """Complements of the members: every fuzzy closed set of the space."""
        return tuple(member.complement() for member in self.members)

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def _closed_set(self) -> frozenset:
        return frozenset(self.closed_members)

    @property
    def universe(self) -> Universe | None:
        """The finite universe, or None for the piecewise-linear backend."""
        first = self.members[0]
        return first.universe if isinstance(first, FiniteFuzzySet) else None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def _check_value(self, s: FuzzyValue) -> None:
        first = self.members[0]
        if type(s) is not type(first):
            raise BackendMismatchError(
                f"topology backend is {type(first).__name__}, got {type(s).__name__}"
            )
        if isinstance(first, FiniteFuzzySet):
            first._require_same_universe(s)

    def interior(self, s: FuzzyValue) -> FuzzyValue:
        """Largest open set below ``s``: the join of all members below it."""
        self._check_value(s)
        key = ("int", s)
        cached = self._cache.get(key)
        if cached is None:
            below = [member for member in self.members if member.leq(s)]
            cached = self._cache[key] = self.bottom.join_many(below)
        return cached

    def closure(self, s: FuzzyValue) -> FuzzyValue:
        """Smallest closed set above ``s``: the meet of all closed sets above it."""
        self._check_value(s)
        key = ("cl", s)
        cached = self._cache.get(key)
        if cached is None:
            above = [closed for closed in self.closed_members if s.leq(closed)]
            cached = self._cache[key] = self.top.meet_many(above)
        return cached

    def is_open(self, s: FuzzyValue) -> bool:
        """True iff ``s`` semantically equals a member."""
        self._check_value(s)
        return s in self._member_set

    def is_closed(self, s: FuzzyValue) -> bool:
        """True iff the complement of ``s`` is a member."""
        self._check_value(s)
        return s in self._closed_set
