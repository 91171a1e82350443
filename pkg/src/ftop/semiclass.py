"""The semiopen hierarchy: predicates, semi-operators, and the classifier.

A set ``s`` is *semiopen* when it lies below the closure of its own
interior, and *semiclosed* when its complement is semiopen.  The
semi-interior (largest semiopen set below ``s``) is computed by the closed
form ``s /\\ Cl(Int(s))``; the semi-closure dually by ``s \\/ Int(Cl(s))``.
The closed form is not taken on faith: the oracle module re-derives the
semi-interior by exhaustive enumeration over degree grids and the test
suite requires bit-exact agreement wherever the grid can express the
answer.

The *somewhat-open* notions only ask that the (semi-)interior be non-zero,
which yields the implication chain

    open  =>  semiopen  =>  somewhat open  <=>  somewhat semiopen

rendered here as a hard invariant of :class:`SetClassification`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HierarchyInvariantError
from .topology import FuzzyTopology, FuzzyValue

__all__ = [
    "is_semiopen",
    "is_semiclosed",
    "semi_interior",
    "semi_closure",
    "is_somewhat_open",
    "is_somewhat_semiopen",
    "SetClassification",
    "classify_set",
]


def is_semiopen(space: FuzzyTopology, s: FuzzyValue) -> bool:
    """True iff ``s`` lies below the closure of its interior."""
    return s.leq(space.closure(space.interior(s)))


def is_semiclosed(space: FuzzyTopology, s: FuzzyValue) -> bool:
    """True iff the complement of ``s`` is semiopen."""
    return is_semiopen(space, s.complement())


def semi_interior(space: FuzzyTopology, s: FuzzyValue) -> FuzzyValue:
    """Largest semiopen set below ``s``, as ``s /\\ Cl(Int(s))``.

    The closed form is exact: the right-hand side is semiopen, sits below
    ``s``, and dominates every semiopen set below ``s`` (each such set is
    below the monotone image ``Cl(Int(s))`` already).
    """
    return s.meet(space.closure(space.interior(s)))


def semi_closure(space: FuzzyTopology, s: FuzzyValue) -> FuzzyValue:
    """Smallest semiclosed set above ``s``, as ``s \\/ Int(Cl(s))``."""
    return s.join(space.interior(space.closure(s)))


def is_somewhat_open(space: FuzzyTopology, s: FuzzyValue) -> bool:
    """True iff ``s`` is zero or has a non-zero interior."""
    return s.is_zero() or not space.interior(s).is_zero()


def is_somewhat_semiopen(space: FuzzyTopology, s: FuzzyValue) -> bool:
    """True iff ``s`` is zero or has a non-zero semi-interior."""
    return s.is_zero() or not semi_interior(space, s).is_zero()


@dataclass(frozen=True)
class SetClassification:
    """The four openness verdicts for one set, with operator evidence.

    Refuses construction when the verdicts break the implication chain;
    by theorem they never do, so a refusal means an operator bug.
    """

    is_open: bool
    is_semiopen: bool
    is_somewhat_open: bool
    is_somewhat_semiopen: bool
    interior: FuzzyValue
    closure: FuzzyValue
    semi_interior: FuzzyValue
    semi_closure: FuzzyValue

    def __post_init__(self) -> None:
        chain_ok = (
            (not self.is_open or self.is_semiopen)
            and (not self.is_semiopen or self.is_somewhat_open)
            and self.is_somewhat_open == self.is_somewhat_semiopen
        )
        if not chain_ok:
            raise HierarchyInvariantError(
                f"impossible verdict combination: open={self.is_open}, "
                f"semiopen={self.is_semiopen}, somewhat_open={self.is_somewhat_open}, "
                f"somewhat_semiopen={self.is_somewhat_semiopen}"
            )

    def verdicts(self) -> dict[str, bool]:
        return {
            "open": self.is_open,
            "semiopen": self.is_semiopen,
            "somewhat_open": self.is_somewhat_open,
            "somewhat_semiopen": self.is_somewhat_semiopen,
        }


def classify_set(space: FuzzyTopology, s: FuzzyValue) -> SetClassification:
    """All four set-level verdicts plus the operator values behind them."""
    interior = space.interior(s)
    closure = space.closure(s)
    return SetClassification(
        is_open=space.is_open(s),
        is_semiopen=is_semiopen(space, s),
        is_somewhat_open=is_somewhat_open(space, s),
        is_somewhat_semiopen=is_somewhat_semiopen(space, s),
        interior=interior,
        closure=closure,
        semi_interior=semi_interior(space, s),
        semi_closure=semi_closure(space, s),
    )
