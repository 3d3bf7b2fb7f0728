"""Generalized (set-valued map) and Pawlak lower/upper approximations."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import kernels
from .core import Carrier, ElementSet, GammaSemigroup, Verdict, same_carrier
from .errors import NotACongruenceError, StructureMismatchError

# all_approximations tables are only precomputed up to this target order
_TABLE_LIMIT = 16


@dataclass(frozen=True)
class SetValuedMap:
    """Total map x -> T(x), a non-empty subset of the target, for every source x."""

    name: str
    source: Carrier
    target: Carrier
    images: tuple[int, ...]
    _images: array = field(init=False, repr=False, compare=False, hash=False)
    _cache: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.order:
            raise ValueError(
                f"map {self.name}: {len(self.images)} images for {self.source.order} source elements"
            )
        for x, img in zip(self.source.elements, self.images):
            if img == 0:
                raise ValueError(f"map {self.name}: empty image for {x!r}")
            if img & ~self.target.full_mask:
                raise ValueError(f"map {self.name}: image of {x!r} leaves the target")
        object.__setattr__(self, "_images", array("Q", self.images))
        object.__setattr__(self, "_cache", {})

    @classmethod
    def from_images(
        cls, name: str, source: Carrier, target: Carrier, images: Mapping[str, Iterable[str]]
    ) -> SetValuedMap:
        missing = [x for x in source.elements if x not in images]
        if missing:
            raise ValueError(f"map {name}: no image for {missing[0]!r}")
        for x in images:
            source.index(x)
        return cls(name, source, target, tuple(target.mask_of(images[x]) for x in source.elements))

    def image(self, x: str) -> ElementSet:
        return ElementSet(self.target, self.images[self.source.index(x)])

    def approx_masks(self, B: int) -> tuple[int, int]:
        """(lower, upper) membership words for a target membership word."""
        n_tgt = self.target.order
        if n_tgt <= _TABLE_LIMIT:
            tables = self._cache.get("all")
            if tables is None:
                tables = kernels.all_approximations(self._images, self.source.order, n_tgt)
                self._cache["all"] = tables
            return tables[0][B], tables[1][B]
        return kernels.approximations(self._images, self.source.order, B)

    def lower_mask(self, B: int) -> int:
        return self.approx_masks(B)[0]

    def upper_mask(self, B: int) -> int:
        return self.approx_masks(B)[1]

    def describe(self) -> str:
        parts = []
        for x, img in zip(self.source.elements, self.images):
            parts.append(f"{x}->{{{','.join(self.target.names_of(img))}}}")
        return " ".join(parts)


@dataclass(frozen=True)
class ApproximationPair:
    lower: ElementSet
    upper: ElementSet

    @property
    def definable(self) -> bool:
        return self.lower == self.upper


def _check_target(T: SetValuedMap, B: ElementSet) -> None:
    if not same_carrier(B.structure, T.target):
        raise StructureMismatchError(
            f"map {T.name} targets {T.target.name!r}, got a subset of {B.structure.name!r}"
        )


def lower_approx(T: SetValuedMap, B: ElementSet) -> ElementSet:
    """{x : T(x) is a subset of B}."""
    _check_target(T, B)
    return ElementSet(T.source, T.lower_mask(B.mask))


def upper_approx(T: SetValuedMap, B: ElementSet) -> ElementSet:
    """{x : T(x) meets B}."""
    _check_target(T, B)
    return ElementSet(T.source, T.upper_mask(B.mask))


def approximate(T: SetValuedMap, B: ElementSet) -> ApproximationPair:
    _check_target(T, B)
    lo, up = T.approx_masks(B.mask)
    return ApproximationPair(ElementSet(T.source, lo), ElementSet(T.source, up))


@dataclass(frozen=True)
class Partition:
    structure: Carrier
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        seen = 0
        for blk in self.blocks:
            if blk == 0:
                raise ValueError("partition blocks must be non-empty")
            if blk & seen:
                raise ValueError("partition blocks overlap")
            seen |= blk
        if seen != self.structure.full_mask:
            missing = self.structure.names_of(self.structure.full_mask & ~seen)
            raise ValueError(f"partition does not cover {', '.join(missing)}")

    @classmethod
    def from_blocks(cls, structure: Carrier, blocks: Iterable[Iterable[str]]) -> Partition:
        return cls(structure, tuple(structure.mask_of(b) for b in blocks))

    @classmethod
    def discrete(cls, structure: Carrier) -> Partition:
        return cls(structure, tuple(1 << i for i in range(structure.order)))

    @classmethod
    def single_block(cls, structure: Carrier) -> Partition:
        return cls(structure, (structure.full_mask,))

    def block_mask(self, i: int) -> int:
        for blk in self.blocks:
            if blk >> i & 1:
                return blk
        raise AssertionError("partition invariant broken")

    def block_of(self, x: str) -> ElementSet:
        return ElementSet(self.structure, self.block_mask(self.structure.index(x)))

    def as_map(self) -> SetValuedMap:
        """The set-valued map x -> [x], whose approximations are the Pawlak ones."""
        n = self.structure.order
        return SetValuedMap("rho", self.structure, self.structure, tuple(self.block_mask(i) for i in range(n)))

    def __str__(self):
        return " ".join("{" + ",".join(self.structure.names_of(b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class CongruenceWitness:
    a: str
    b: str
    y: str
    gamma: str
    side: str  # "right": (a g y, b g y); "left": (y g a, y g b)
    first: str
    second: str


def _check_partition(S: Carrier, rho: Partition) -> None:
    if not same_carrier(S, rho.structure):
        raise StructureMismatchError(f"partition is over {rho.structure.name!r}, not {S.name!r}")


def is_congruence(S: GammaSemigroup, rho: Partition) -> Verdict:
    _check_partition(S, rho)
    n, m = S.order, len(S.gammas)
    blocks = [rho.block_mask(i) for i in range(n)]
    el = S.elements
    for a in range(n):
        for b in range(n):
            if a == b or not blocks[a] >> b & 1:
                continue
            for y in range(n):
                for g in range(m):
                    p, q = S.op(a, g, y), S.op(b, g, y)
                    if not blocks[p] >> q & 1:
                        return Verdict(False, CongruenceWitness(el[a], el[b], el[y], S.gammas[g], "right", el[p], el[q]))
                    p, q = S.op(y, g, a), S.op(y, g, b)
                    if not blocks[p] >> q & 1:
                        return Verdict(False, CongruenceWitness(el[a], el[b], el[y], S.gammas[g], "left", el[p], el[q]))
    return Verdict(True)


@dataclass(frozen=True)
class CompletenessWitness:
    a: str
    b: str
    product_of_classes: ElementSet
    class_of_products: ElementSet


def is_complete_congruence(S: GammaSemigroup, rho: Partition) -> Verdict:
    """[a] Gamma [b] = [a Gamma b] for all a, b, where [a Gamma b] joins the classes of every a g b."""
    cong = is_congruence(S, rho)
    if not cong:
        raise NotACongruenceError(cong.witness)
    n, m = S.order, len(S.gammas)
    for a in range(n):
        for b in range(n):
            lhs = S.product_mask(rho.block_mask(a), rho.block_mask(b))
            rhs = 0
            for g in range(m):
                rhs |= rho.block_mask(S.op(a, g, b))
            if lhs != rhs:
                w = CompletenessWitness(S.elements[a], S.elements[b], S.from_mask(lhs), S.from_mask(rhs))
                return Verdict(False, w)
    return Verdict(True)


def pawlak_lower(rho: Partition, A: ElementSet) -> ElementSet:
    """{x : [x] is a subset of A}."""
    _check_partition(A.structure, rho)
    out = 0
    for blk in rho.blocks:
        if blk & ~A.mask == 0:
            out |= blk
    return ElementSet(rho.structure, out)


def pawlak_upper(rho: Partition, A: ElementSet) -> ElementSet:
    """{x : [x] meets A}."""
    _check_partition(A.structure, rho)
    out = 0
    for blk in rho.blocks:
        if blk & A.mask:
            out |= blk
    return ElementSet(rho.structure, out)
