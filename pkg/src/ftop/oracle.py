"""Brute-force ground truth over finite degree grids.

The closed-form operators elsewhere in this package are fast but clever;
this module is slow and literal, so the two can check each other.  It
enumerates every fuzzy set whose degrees lie on the grid {0, 1/k, .., 1},
recomputes the semi-interior straight from its definition (join of all
semiopen sets below the argument), generates reproducible random spaces,
re-verifies the proved inequalities and equivalences on every grid set,
and searches for the sets witnessing that the openness hierarchy is
strict.

Grid checks are exact, not approximate: when every degree of a topology
lies on the grid, interiors and closures never leave it (min, max and
complement of grid degrees are grid degrees), so quantifying over grid
sets quantifies over everything the operators can produce.
"""

from __future__ import annotations

import itertools
import math
import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import HierarchyInvariantError, OffGridError, ResourceCapError
from .fset import FiniteFuzzySet, Universe, join_family
from .functions import FuzzyFunction, classify_function
from .semiclass import (
    is_semiopen,
    is_somewhat_open,
    is_somewhat_semiopen,
    semi_closure,
    semi_interior,
)
from .topology import FuzzyTopology, generate

__all__ = [
    "DEFAULT_ENUMERATION_BUDGET",
    "GridSpec",
    "SearchTarget",
    "SET_CLASSES",
    "SPACE_CHECKS",
    "SpaceCheckReport",
    "SpaceCheckViolation",
    "CampaignFailure",
    "CampaignResult",
    "grid_degrees",
    "enumerate_grid_sets",
    "brute_semi_interior",
    "random_topology",
    "check_space",
    "find_witness",
    "run_campaign",
]

DEFAULT_ENUMERATION_BUDGET = 250_000


def grid_degrees(k: int) -> tuple[Fraction, ...]:
    """The ascending degree grid {0, 1/k, ..., 1}."""
    if k < 1:
        raise ValueError(f"grid denominator must be >= 1, got {k}")
    return tuple(Fraction(i, k) for i in range(k + 1))


@dataclass(frozen=True)
class GridSpec:
    """Enumeration parameters: universe size, grid denominator, budget.

    The budget caps the number of grid sets, (k+1)**universe_size, so a
    typo in k cannot silently turn a test run into an overnight job.
    """

    universe_size: int
    k: int
    budget: int = DEFAULT_ENUMERATION_BUDGET

    def __post_init__(self) -> None:
        if self.universe_size < 1:
            raise ValueError(f"universe_size must be >= 1, got {self.universe_size}")
        if self.k < 1:
            raise ValueError(f"grid denominator must be >= 1, got {self.k}")
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if self.size > self.budget:
            raise ResourceCapError(
                f"grid holds {self.size} sets, above the budget of {self.budget}"
            )

    @property
    def size(self) -> int:
        return (self.k + 1) ** self.universe_size

    def degrees(self) -> tuple[Fraction, ...]:
        return grid_degrees(self.k)

    def universe(self) -> Universe:
        return Universe.of(*string.ascii_lowercase[: self.universe_size])


def _require_finite_universe(space: FuzzyTopology) -> Universe:
    universe = space.universe
    if universe is None:
        raise TypeError("grid enumeration needs the finite backend")
    return universe


def _off_grid(degrees: Iterable[Fraction], k: int) -> list[Fraction]:
    return [d for d in degrees if (d * k).denominator != 1]


def _require_on_grid(degrees: Iterable[Fraction], k: int, what: str) -> None:
    degrees = list(degrees)
    misses = _off_grid(degrees, k)
    if misses:
        needed = math.lcm(*(d.denominator for d in degrees))
        raise OffGridError(
            f"{what} has degrees off the 1/{k} grid (e.g. {misses[0]}); "
            f"the smallest grid holding every degree is k={needed}",
            required_k=needed,
        )


def _topology_degrees(space: FuzzyTopology) -> set[Fraction]:
    return {d for member in space.members for d in member.degrees}


def enumerate_grid_sets(
    spec: GridSpec, universe: Universe | None = None
) -> Iterator[FiniteFuzzySet]:
    """Yield every grid fuzzy set exactly once, in lexicographic order.

    Order is over (element index, degree) with earlier elements most
    significant, so the first set satisfying any predicate is canonical
    and stable across runs.
    """
    if universe is None:
        universe = spec.universe()
    elif len(universe) != spec.universe_size:
        raise ValueError(
            f"universe has {len(universe)} points but spec expects {spec.universe_size}"
        )
    for degrees in itertools.product(spec.degrees(), repeat=spec.universe_size):
        yield FiniteFuzzySet(universe, degrees)


def brute_semi_interior(
    space: FuzzyTopology, s: FiniteFuzzySet, spec: GridSpec
) -> FiniteFuzzySet:
    """Semi-interior computed literally: join all semiopen grid sets below s.

    This deliberately shares no algebra with the closed form in
    :mod:`ftop.semiclass`; each semiopen test goes straight through the
    interior and closure operators.  The result lower-bounds the true
    semi-interior and equals the closed form whenever the closed form's
    output lies on the grid, which makes this the validation oracle for
    that identity.
    """
    universe = _require_finite_universe(space)
    _require_on_grid(
        [*_topology_degrees(space), *s.degrees], spec.k, "the topology or queried set"
    )
    below = [
        g
        for g in enumerate_grid_sets(spec, universe)
        if g.leq(s) and is_semiopen(space, g)
    ]
    return join_family(below, universe=universe)


def _random_grid_set(
    rng: random.Random, universe: Universe, degrees: tuple[Fraction, ...]
) -> FiniteFuzzySet:
    return FiniteFuzzySet(universe, tuple(rng.choice(degrees) for _ in universe))


def random_topology(spec: GridSpec, seed: int, subbasis_size: int) -> FuzzyTopology:
    """A reproducible random space: generate() over seeded grid subbasis sets.

    Identical (spec, seed, subbasis_size) always yields an identical
    member list.  Degrees stay on the grid, so the generated family can
    never outgrow the grid itself.
    """
    rng = random.Random(seed)
    universe = spec.universe()
    degrees = spec.degrees()
    subbasis = [_random_grid_set(rng, universe, degrees) for _ in range(subbasis_size)]
    return generate(subbasis, universe=universe)


def _holds_interior_below_semi_interior(space: FuzzyTopology, s: FiniteFuzzySet) -> bool:
    return space.interior(s).leq(semi_interior(space, s))


def _holds_semi_closure_below_closure(space: FuzzyTopology, s: FiniteFuzzySet) -> bool:
    return semi_closure(space, s).leq(space.closure(s))


def _holds_semiopen_iff_closures_agree(space: FuzzyTopology, s: FiniteFuzzySet) -> bool:
    if s.is_zero():
        return True
    closures_agree = space.closure(s) == space.closure(space.interior(s))
    return is_semiopen(space, s) == closures_agree


def _holds_nonzero_semiopen_has_nonzero_interior(
    space: FuzzyTopology, s: FiniteFuzzySet
) -> bool:
    if s.is_zero() or not is_semiopen(space, s):
        return True
    return not space.interior(s).is_zero()


def _holds_somewhat_open_iff_somewhat_semiopen(
    space: FuzzyTopology, s: FiniteFuzzySet
) -> bool:
    return is_somewhat_open(space, s) == is_somewhat_semiopen(space, s)


# Each entry restates one proved law as an executable predicate; names
# describe the behaviour checked, and every law must hold for every set
# in every space, so any violation is an operator bug.
SPACE_CHECKS: tuple[tuple[str, Callable[[FuzzyTopology, FiniteFuzzySet], bool]], ...] = (
    ("interior-below-semi-interior", _holds_interior_below_semi_interior),
    ("semi-closure-below-closure", _holds_semi_closure_below_closure),
    ("semiopen-iff-closures-agree", _holds_semiopen_iff_closures_agree),
    ("nonzero-semiopen-has-nonzero-interior", _holds_nonzero_semiopen_has_nonzero_interior),
    ("somewhat-open-iff-somewhat-semiopen", _holds_somewhat_open_iff_somewhat_semiopen),
)


@dataclass(frozen=True)
class SpaceCheckViolation:
    check: str
    subject: FiniteFuzzySet


@dataclass(frozen=True)
class SpaceCheckReport:
    ok: bool
    sets_checked: int
    violation: SpaceCheckViolation | None = None


def check_space(space: FuzzyTopology, spec: GridSpec) -> SpaceCheckReport:
    """Re-verify every proved law on every grid set of the space.

    Stops at the first violating (check, set) pair.  Requires all
    topology degrees on the grid so that interiors and closures are
    grid sets themselves and the sweep is exhaustive rather than a
    sample.
    """
    universe = _require_finite_universe(space)
    _require_on_grid(_topology_degrees(space), spec.k, "topology")
    checked = 0
    for s in enumerate_grid_sets(spec, universe):
        checked += 1
        for name, holds in SPACE_CHECKS:
            if not holds(space, s):
                return SpaceCheckReport(False, checked, SpaceCheckViolation(name, s))
    return SpaceCheckReport(True, checked)


SET_CLASSES: dict[str, Callable[[FuzzyTopology, FiniteFuzzySet], bool]] = {
    "open": lambda space, s: space.is_open(s),
    "semiopen": is_semiopen,
    "somewhat-open": is_somewhat_open,
    "somewhat-semiopen": is_somewhat_semiopen,
}


@dataclass(frozen=True)
class SearchTarget:
    """One strictness question: a set in class ``have`` but not ``avoid``."""

    have: str
    avoid: str

    def __post_init__(self) -> None:
        for name in (self.have, self.avoid):
            if name not in SET_CLASSES:
                known = ", ".join(sorted(SET_CLASSES))
                raise ValueError(f"unknown set class {name!r}; known classes: {known}")
        if self.have == self.avoid:
            raise ValueError(f"target {self.have}-not-{self.avoid} is unsatisfiable")

    @classmethod
    def parse(cls, text: str) -> "SearchTarget":
        normalized = text.strip().lower().replace("_", "-")
        parts = normalized.split("-not-")
        if len(parts) != 2:
            raise ValueError(
                f"cannot parse target {text!r}; expected <class>-not-<class>, "
                "e.g. semiopen-not-open"
            )
        return cls(parts[0], parts[1])

    def matches(self, space: FuzzyTopology, s: FiniteFuzzySet) -> bool:
        return SET_CLASSES[self.have](space, s) and not SET_CLASSES[self.avoid](space, s)

    def __str__(self) -> str:
        return f"{self.have}-not-{self.avoid}"


def find_witness(
    space: FuzzyTopology, target: SearchTarget, spec: GridSpec
) -> FiniteFuzzySet | None:
    """First grid set in enumeration order matching the target, else None.

    A None is grid-relative only: a finer grid (or none at all) may still
    hold a witness.  The topology's own degrees need not lie on the grid;
    classification is exact either way, the grid only bounds the search.
    """
    universe = _require_finite_universe(space)
    for s in enumerate_grid_sets(spec, universe):
        if target.matches(space, s):
            return s
    return None


@dataclass(frozen=True)
class CampaignFailure:
    phase: str
    seed: int
    detail: str


@dataclass(frozen=True)
class CampaignResult:
    """Outcome of one seeded verification campaign.

    Counts say how much evidence was gathered; ``failures`` is empty on a
    clean run.  Identical arguments reproduce identical results.
    """

    seeds: int
    universe_size: int
    k: int
    spaces_checked: int
    sets_checked: int
    agreements_checked: int
    functions_checked: int
    failures: tuple[CampaignFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "seeds": self.seeds,
            "universe_size": self.universe_size,
            "k": self.k,
            "spaces_checked": self.spaces_checked,
            "sets_checked": self.sets_checked,
            "agreements_checked": self.agreements_checked,
            "functions_checked": self.functions_checked,
            "ok": self.ok,
            "failures": [
                {"phase": f.phase, "seed": f.seed, "detail": f.detail}
                for f in self.failures
            ],
        }


MAX_CAMPAIGN_SUBBASIS = 4


def run_campaign(
    seeds: int, universe_size: int, k: int, *, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> CampaignResult:
    """Seeded sweep: space laws, closed-form agreement, function laws.

    Per seed i this builds a random space, runs :func:`check_space` on
    it, compares the closed-form semi-interior against
    :func:`brute_semi_interior` on a random grid set, then builds a
    second random space plus a random crisp map and classifies the map,
    which re-asserts the function-level equivalences and the implication
    chain.  All randomness derives from the seed index, so reports are
    bit-for-bit reproducible.
    """
    spec = GridSpec(universe_size, k, budget)
    degrees = spec.degrees()
    failures: list[CampaignFailure] = []
    sets_checked = 0
    agreements = 0
    functions = 0
    for seed in range(seeds):
        rng = random.Random(f"ftop-campaign-{seed}")
        space = random_topology(spec, seed, rng.randint(0, MAX_CAMPAIGN_SUBBASIS))

        report = check_space(space, spec)
        sets_checked += report.sets_checked
        if not report.ok:
            violation = report.violation
            failures.append(
                CampaignFailure(
                    "space-laws",
                    seed,
                    f"{violation.check} fails on {violation.subject!r}",
                )
            )

        s = _random_grid_set(rng, space.universe, degrees)
        closed_form = semi_interior(space, s)
        if not _off_grid(closed_form.degrees, spec.k):
            agreements += 1
            brute = brute_semi_interior(space, s, spec)
            if closed_form != brute:
                failures.append(
                    CampaignFailure(
                        "semi-interior-agreement",
                        seed,
                        f"closed form {closed_form!r} != brute force {brute!r} on {s!r}",
                    )
                )

        codomain_subbasis = [
            _random_grid_set(rng, spec.universe(), degrees)
            for _ in range(rng.randint(0, MAX_CAMPAIGN_SUBBASIS))
        ]
        codomain = generate(codomain_subbasis, universe=spec.universe())
        mapping = {x: rng.choice(codomain.universe.labels) for x in space.universe}
        fn = FuzzyFunction.from_mapping(space, codomain, mapping)
        functions += 1
        try:
            classify_function(fn)
        except HierarchyInvariantError as exc:
            failures.append(CampaignFailure("function-laws", seed, str(exc)))

    return CampaignResult(
        seeds=seeds,
        universe_size=universe_size,
        k=k,
        spaces_checked=seeds,
        sets_checked=sets_checked,
        agreements_checked=agreements,
        functions_checked=functions,
        failures=tuple(failures),
    )
