"""Lattice of observations and the information-measure contract.

Observations live in a finite ground set; the objects measures are
evaluated on are subsets of that ground set (joins of ground
observations), represented as frozensets of indices.  A measure assigns
a nonnegative real to every such element, and conditional information /
conditional mutual information are derived from it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

Element = frozenset
EMPTY: Element = frozenset()


class GroundSetError(ValueError):
    """Unknown label or index, or malformed ground set."""


class GroundSet:
    """Ordered, immutable collection of observation labels.

    Indices are stable for the lifetime of the object; elements of the
    subset lattice are frozensets of these indices.
    """

    def __init__(self, labels: Iterable):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise GroundSetError("observation labels must be unique")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GroundSetError(f"unknown observation {label!r}") from None

    def element(self, *labels) -> Element:
        return frozenset(self.index(lab) for lab in labels)

    @property
    def full(self) -> Element:
        return frozenset(range(len(self.labels)))

    def subsets(self, max_size: int | None = None) -> Iterator[Element]:
        """All subsets in (size, index-lexicographic) order."""
        n = len(self.labels)
        top = n if max_size is None else min(max_size, n)
        for size in range(top + 1):
            for combo in itertools.combinations(range(n), size):
                yield frozenset(combo)

    def describe(self, element: Element) -> str:
        return "{" + ",".join(str(self.labels[i]) for i in sorted(element)) + "}"


@dataclass(frozen=True)
class IndependenceDecision:
    """Thresholded independence call derived from a CMI value."""

    cmi_value: float
    threshold: float
    independent: bool

    def __post_init__(self):
        if self.threshold < 0:
            raise ValueError("threshold must be nonnegative")
        if self.independent != (self.cmi_value <= self.threshold):
            raise ValueError("decision inconsistent with value/threshold")


class InformationMeasure:
    """Evaluator R over elements of a ground-set lattice.

    Subclasses implement ``_evaluate``.  ``slack == 0`` declares the
    measure exactly normalized, monotone and submodular; a positive
    slack bounds the magnitude of violations the measure is allowed to
    exhibit (compression measures are only approximately submodular).

    Evaluation is pure.  Values are memoized per element; the cache is
    a plain dict whose entries are value-deterministic, so concurrent
    read/insert from several threads cannot change any returned value.
    """

    #: allowed violation magnitude for monotonicity/submodularity; 0 = exact
    slack: float = 0.0
    #: short identifier used in reports and CLI output
    name: str = "measure"

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._cache: dict[Element, float] = {}

    # -- contract -----------------------------------------------------

    def _evaluate(self, s: Element) -> float:
        raise NotImplementedError

    @property
    def exact(self) -> bool:
        return self.slack == 0.0

    # -- derived quantities --------------------------------------------

    def joint(self, s: Element) -> float:
        """R(s) for an element of the lattice (memoized)."""
        if not isinstance(s, frozenset):
            s = frozenset(s)
        if not s <= self.ground.full:
            raise GroundSetError(f"element {sorted(s)} outside ground set of size {len(self.ground)}")
        value = self._cache.get(s)
        if value is None:
            value = float(self._evaluate(s))
            self._cache[s] = value
        return value

    def cond(self, s: Element, t: Element) -> float:
        """R(s|t) = R(s v t) - R(t)."""
        return self.joint(s | t) - self.joint(t)

    def cmi(self, s: Element, t: Element, u: Element = EMPTY) -> float:
        """I(s:t|u) = R(s,u) + R(t,u) - R(s,t,u) - R(u)."""
        s, t, u = frozenset(s), frozenset(t), frozenset(u)
        return (
            self.joint(s | u)
            + self.joint(t | u)
            - self.joint(s | t | u)
            - self.joint(u)
        )

    def decide(
        self, s: Element, t: Element, u: Element = EMPTY, threshold: float = 0.0
    ) -> IndependenceDecision:
        if threshold < 0:
            raise ValueError("threshold must be nonnegative")
        value = self.cmi(s, t, u)
        return IndependenceDecision(value, threshold, value <= threshold)

    def cache_size(self) -> int:
        return len(self._cache)


class CallableMeasure(InformationMeasure):
    """Measure defined by an arbitrary evaluator function on elements."""

    def __init__(self, ground: GroundSet, fn, slack: float = 0.0, name: str = "callable"):
        super().__init__(ground)
        self._fn = fn
        self.slack = slack
        self.name = name

    def _evaluate(self, s: Element) -> float:
        return self._fn(s)
