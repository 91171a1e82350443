"""Crisp point maps between finite fuzzy spaces, lifted to fuzzy sets.

A function here is an ordinary total map between the two finite universes;
it acts on fuzzy sets through the usual lifts

* preimage: ``f^{-1}(b)(x) = b(f(x))``
* image:    ``f(a)(y) = sup { a(x) : f(x) = y }`` (0 on empty fibers)

and is classified eight ways: four continuity classes (preimages of the
codomain's opens are open / semiopen / somewhat open / somewhat semiopen)
and the four mirror-image openness classes on images of the domain's
opens.  Both quadruples obey the same implication chain as sets do, with
the two somewhat classes provably coinciding; :class:`FunctionClassification`
enforces that chain at construction.

Only the finite backend is supported: images of piecewise-linear sets
under arbitrary point maps leave the piecewise-linear class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .degrees import ZERO
from .errors import HierarchyInvariantError
from .fset import FiniteFuzzySet, Universe
from .semiclass import is_semiopen, is_somewhat_open, is_somewhat_semiopen
from .topology import FuzzyTopology

__all__ = [
    "FuzzyFunction",
    "FunctionClassification",
    "classify_function",
    "CONTINUITY_CLASSES",
    "OPENNESS_CLASSES",
]

CONTINUITY_CLASSES = (
    "fuzzy_continuous",
    "fuzzy_semicontinuous",
    "somewhat_fuzzy_continuous",
    "somewhat_fuzzy_semicontinuous",
)
OPENNESS_CLASSES = (
    "fuzzy_open",
    "fuzzy_semiopen_fn",
    "somewhat_fuzzy_open_fn",
    "somewhat_fuzzy_semiopen_fn",
)


def _require_finite(space: FuzzyTopology, side: str) -> Universe:
    universe = space.universe
    if universe is None:
        raise TypeError(f"{side} space must use the finite backend")
    return universe


@dataclass(frozen=True)
class FuzzyFunction:
    """A total point map between the universes of two finite fuzzy spaces."""

    domain: FuzzyTopology
    codomain: FuzzyTopology
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        domain_universe = _require_finite(self.domain, "domain")
        codomain_universe = _require_finite(self.codomain, "codomain")
        assigned = dict(self.mapping)
        if len(assigned) != len(self.mapping):
            raise ValueError("mapping assigns some point twice")
        missing = [x for x in domain_universe if x not in assigned]
        if missing:
            raise ValueError(f"mapping is not total: no image for {missing}")
        unknown = [x for x in assigned if x not in domain_universe]
        if unknown:
            raise ValueError(f"mapping defined on unknown points {unknown}")
        outside = sorted({y for y in assigned.values() if y not in codomain_universe})
        if outside:
            raise ValueError(f"mapping hits points outside the codomain: {outside}")

    @classmethod
    def from_mapping(
        cls, domain: FuzzyTopology, codomain: FuzzyTopology, mapping: Mapping[str, str]
    ) -> "FuzzyFunction":
        universe = _require_finite(domain, "domain")
        return cls(domain, codomain, tuple((x, mapping[x]) for x in universe if x in mapping))

    @property
    def _map(self) -> dict[str, str]:
        return dict(self.mapping)

    def apply(self, x: str) -> str:
        return self._map[x]

    def preimage(self, beta: FiniteFuzzySet) -> FiniteFuzzySet:
        """Pull a codomain fuzzy set back along the map: ``x -> beta(f(x))``."""
        codomain_universe = self.codomain.universe
        if beta.universe != codomain_universe:
            beta._require_same_universe(FiniteFuzzySet.zero(codomain_universe))
        mapping = self._map
        domain_universe = self.domain.universe
        return FiniteFuzzySet(
            domain_universe, tuple(beta.at(mapping[x]) for x in domain_universe)
        )

    def image(self, alpha: FiniteFuzzySet) -> FiniteFuzzySet:
        """Push a domain fuzzy set forward: sup over each fiber, 0 if empty."""
        domain_universe = self.domain.universe
        if alpha.universe != domain_universe:
            alpha._require_same_universe(FiniteFuzzySet.zero(domain_universe))
        mapping = self._map
        codomain_universe = self.codomain.universe
        best = {y: ZERO for y in codomain_universe}
        for x, value in zip(domain_universe, alpha.degrees):
            y = mapping[x]
            if value > best[y]:
                best[y] = value
        return FiniteFuzzySet(codomain_universe, tuple(best[y] for y in codomain_universe))


@dataclass(frozen=True)
class FunctionClassification:
    """Eight verdicts for one function, with a witness for every failure.

    ``witnesses`` maps a failed class name to the member (codomain open
    for continuity classes, domain open for openness classes) whose
    preimage or image falls outside the class.  Construction refuses
    verdicts that break the implication chain, which cannot happen unless
    an operator is buggy.
    """

    fuzzy_continuous: bool
    fuzzy_semicontinuous: bool
    somewhat_fuzzy_continuous: bool
    somewhat_fuzzy_semicontinuous: bool
    fuzzy_open: bool
    fuzzy_semiopen_fn: bool
    somewhat_fuzzy_open_fn: bool
    somewhat_fuzzy_semiopen_fn: bool
    witnesses: Mapping[str, FiniteFuzzySet] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for weaker, stronger in (
            ("fuzzy_semicontinuous", "fuzzy_continuous"),
            ("somewhat_fuzzy_continuous", "fuzzy_semicontinuous"),
            ("fuzzy_semiopen_fn", "fuzzy_open"),
            ("somewhat_fuzzy_open_fn", "fuzzy_semiopen_fn"),
        ):
            if getattr(self, stronger) and not getattr(self, weaker):
                raise HierarchyInvariantError(f"{stronger} without {weaker}")
        if self.somewhat_fuzzy_continuous != self.somewhat_fuzzy_semicontinuous:
            raise HierarchyInvariantError(
                "somewhat continuity verdicts disagree with their provable equivalence"
            )
        if self.somewhat_fuzzy_open_fn != self.somewhat_fuzzy_semiopen_fn:
            raise HierarchyInvariantError(
                "somewhat openness verdicts disagree with their provable equivalence"
            )

    def verdicts(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in CONTINUITY_CLASSES + OPENNESS_CLASSES}


def classify_function(f: FuzzyFunction) -> FunctionClassification:
    """Decide all eight classes by exhausting the relevant member lists.

    Universal quantification over opens reduces to iteration because both
    topologies are finite; the first failing member (in canonical member
    order) is recorded as the witness for its class.
    """
    verdicts = {name: True for name in CONTINUITY_CLASSES + OPENNESS_CLASSES}
    witnesses: dict[str, FiniteFuzzySet] = {}

    def note(name: str, holds: bool, member: FiniteFuzzySet) -> None:
        if not holds and verdicts[name]:
            verdicts[name] = False
            witnesses[name] = member

    domain, codomain = f.domain, f.codomain
    for beta in codomain.members:
        back = f.preimage(beta)
        note("fuzzy_continuous", domain.is_open(back), beta)
        note("fuzzy_semicontinuous", is_semiopen(domain, back), beta)
        note("somewhat_fuzzy_continuous", is_somewhat_open(domain, back), beta)
        note("somewhat_fuzzy_semicontinuous", is_somewhat_semiopen(domain, back), beta)
    for alpha in domain.members:
        forward = f.image(alpha)
        note("fuzzy_open", codomain.is_open(forward), alpha)
        note("fuzzy_semiopen_fn", is_semiopen(codomain, forward), alpha)
        note("somewhat_fuzzy_open_fn", is_somewhat_open(codomain, forward), alpha)
        note("somewhat_fuzzy_semiopen_fn", is_somewhat_semiopen(codomain, forward), alpha)

    return FunctionClassification(**verdicts, witnesses=witnesses)
