"""Set-valued anti-homomorphisms: T(a g b) must contain T(b) g T(a)."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from . import kernels
from .core import ElementSet, GammaSemigroup
from .errors import StructureMismatchError
from .rough import SetValuedMap


class Level(enum.IntEnum):
    NONE = 0
    PLAIN = 1
    STRONG = 2

    @classmethod
    def parse(cls, text: str | None) -> Level:
        if text is None:
            return cls.NONE
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown anti-homomorphism level {text!r}") from None

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class PlainWitness:
    """``offending`` lies in T(b) g T(a) but not in T(a g b)."""

    a: str
    gamma: str
    b: str
    offending: str


@dataclass(frozen=True)
class StrongWitness:
    a: str
    gamma: str
    b: str
    image: ElementSet  # T(a g b)
    product: ElementSet  # T(b) g T(a)


@dataclass(frozen=True)
class AntiHomVerdict:
    level: Level
    plain_witness: PlainWitness | None = None
    strong_witness: StrongWitness | None = None


def _structures(T: SetValuedMap) -> tuple[GammaSemigroup, GammaSemigroup]:
    S1, S2 = T.source, T.target
    if not isinstance(S1, GammaSemigroup) or not isinstance(S2, GammaSemigroup):
        raise StructureMismatchError(f"map {T.name}: source and target must be Gamma-semigroups")
    if S1.gammas != S2.gammas:
        raise StructureMismatchError(
            f"map {T.name}: {S1.name!r} and {S2.name!r} do not share the same Gamma"
        )
    return S1, S2


def image_product(T: SetValuedMap, a: str, gamma: str, b: str) -> ElementSet:
    """T(b) g T(a), with the operands reversed: images of b multiply from the left."""
    S1, S2 = _structures(T)
    ia, ib, g = S1.index(a), S1.index(b), S2.gamma_index(gamma)
    mask = kernels.anti_product(S2._table, S2.order, g, T.images[ib], T.images[ia])
    return ElementSet(S2, mask)


def check_anti_hom(T: SetValuedMap) -> AntiHomVerdict:
    S1, S2 = _structures(T)
    level, plain, strong = kernels.antihom_scan(
        S1._table, S1.order, S2._table, S2.order, len(S1.gammas), T._images
    )
    level = Level(level)
    if level is Level.NONE:
        a, g, b, off = plain
        return AntiHomVerdict(
            level, plain_witness=PlainWitness(S1.elements[a], S1.gammas[g], S1.elements[b], S2.elements[off])
        )
    if level is Level.PLAIN:
        a, g, b = strong
        an, gn, bn = S1.elements[a], S1.gammas[g], S1.elements[b]
        w = StrongWitness(an, gn, bn, T.image(S1.elements[S1.op(a, g, b)]), image_product(T, an, gn, bn))
        return AntiHomVerdict(level, strong_witness=w)
    return AntiHomVerdict(level)


def anti_hom_level(T: SetValuedMap) -> Level:
    """Cheap level lookup without building witnesses, memoized on the map."""
    level = T._cache.get("level")
    if level is None:
        S1, S2 = _structures(T)
        level = Level(kernels.antihom_scan(
            S1._table, S1.order, S2._table, S2.order, len(S1.gammas), T._images
        )[0])
        T._cache["level"] = level
    return level


def map_count(S1, S2) -> int:
    return ((1 << S2.order) - 1) ** S1.order


def map_from_index(S1, S2, index: int, name: str | None = None) -> SetValuedMap:
    """Decode a map index: images in membership-word order, rightmost source element fastest."""
    base = (1 << S2.order) - 1
    digits = []
    for _ in range(S1.order):
        index, d = divmod(index, base)
        digits.append(d + 1)
    images = tuple(reversed(digits))
    return SetValuedMap(name or "T", S1, S2, images)


class MapEnumeration:
    """Maps S1 -> P*(S2) meeting a level filter.

    Exhaustive (canonical order) when the whole space fits in ``budget``,
    otherwise ``budget`` distinct indices drawn with ``random.Random(seed)``.
    """

    def __init__(self, S1, S2, filter=Level.NONE, budget=100_000, seed=0):
        if budget <= 0:
            raise ValueError("budget must be positive")
        if isinstance(filter, str) or filter is None:
            filter = Level.parse(filter)
        self.S1, self.S2 = S1, S2
        self.filter = Level(filter)
        self.budget = budget
        self.seed = seed
        self.total = map_count(S1, S2)
        self.exhaustive = self.total <= budget
        if self.filter > Level.NONE:
            _structures(SetValuedMap("probe", S1, S2, (S2.full_mask,) * S1.order))

    def indices(self):
        if self.exhaustive:
            return range(self.total)
        return random.Random(self.seed).sample(range(self.total), self.budget)

    def __iter__(self):
        for idx in self.indices():
            T = map_from_index(self.S1, self.S2, idx, f"T{idx}")
            if self.filter is Level.NONE or anti_hom_level(T) >= self.filter:
                yield T


def enumerate_maps(S1, S2, filter=Level.NONE, budget=100_000, seed=0) -> MapEnumeration:
    return MapEnumeration(S1, S2, filter, budget, seed)
