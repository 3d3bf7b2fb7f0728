"""Ideal kinds of a Gamma-semigroup and the shared primality condition.

Every kind is a list of containments ``X subset-of A`` where X is a
left-associated Gamma-chain over A and M, or an intersection of such chains.
Most kinds also require A to be a sub-Gamma-semigroup; that conjunct is
reported separately so the bare containment can be inspected on its own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .core import ElementSet, GammaSemigroup, Verdict, chain_product, same_carrier
from .errors import EmptySubsetError, StructureMismatchError


class IdealKind(enum.Enum):
    SUB = "SubGammaSemigroup"
    LEFT = "LeftIdeal"
    RIGHT = "RightIdeal"
    TWO_SIDED = "TwoSidedIdeal"
    BI = "BiIdeal"
    QUASI = "QuasiIdeal"
    INTERIOR = "InteriorIdeal"
    LEFT_BI_QUASI = "LeftBiQuasi"
    RIGHT_BI_QUASI = "RightBiQuasi"
    BI_QUASI = "BiQuasi"
    BI_INTERIOR = "BiInterior"
    LEFT_QUASI_INTERIOR = "LeftQuasiInterior"
    RIGHT_QUASI_INTERIOR = "RightQuasiInterior"
    QUASI_INTERIOR = "QuasiInterior"
    BI_QUASI_INTERIOR = "BiQuasiInterior"

    @classmethod
    def parse(cls, text: str) -> IdealKind:
        for k in cls:
            if text in (k.value, k.name):
                return k
        raise ValueError(f"unknown ideal kind {text!r}")


# (needs sub-Gamma-semigroup conjunct, containments); a containment is a tuple
# of chains intersected together, a chain is a word over {"A", "M"}
_DEFS = {
    IdealKind.SUB: (False, [("AA",)]),
    IdealKind.LEFT: (False, [("MA",)]),
    IdealKind.RIGHT: (False, [("AM",)]),
    IdealKind.TWO_SIDED: (False, [("MA",), ("AM",)]),
    IdealKind.BI: (True, [("AMA",)]),
    IdealKind.QUASI: (True, [("AM", "MA")]),
    IdealKind.INTERIOR: (True, [("MAM",)]),
    IdealKind.LEFT_BI_QUASI: (True, [("MA", "AMA")]),
    IdealKind.RIGHT_BI_QUASI: (True, [("AM", "AMA")]),
    IdealKind.BI_QUASI: (True, [("MA", "AMA"), ("AM", "AMA")]),
    IdealKind.BI_INTERIOR: (True, [("MAM", "AMA")]),
    IdealKind.LEFT_QUASI_INTERIOR: (True, [("MAMA",)]),
    IdealKind.RIGHT_QUASI_INTERIOR: (True, [("AMAM",)]),
    IdealKind.QUASI_INTERIOR: (True, [("MAMA",), ("AMAM",)]),
    IdealKind.BI_QUASI_INTERIOR: (True, [("AMAMA",)]),
}

KINDS = tuple(IdealKind)
_PRIME_BIT = 1 << len(KINDS)
_SUB_CONDITION = ("AA",)


def condition_label(cond: tuple[str, ...]) -> str:
    return " ∩ ".join("Γ".join(chain) for chain in cond) + " ⊆ A"


def definition(kind: IdealKind) -> tuple[bool, list[tuple[str, ...]]]:
    return _DEFS[kind]


def _chain_mask(S: GammaSemigroup, chain: str, A: int) -> int:
    full = S.full_mask
    return chain_product(S, *(A if c == "A" else full for c in chain))


def condition_lhs(S: GammaSemigroup, cond: tuple[str, ...], A: int) -> int:
    out = S.full_mask
    for chain in cond:
        out &= _chain_mask(S, chain, A)
    return out


@dataclass(frozen=True)
class IdealWitness:
    """An element of the left side of ``condition`` that is missing from the subset."""

    condition: str
    element: str


@dataclass(frozen=True)
class KindVerdict:
    holds: bool
    witness: IdealWitness | None
    containment_holds: bool

    def __bool__(self):
        return self.holds


def _check(S: GammaSemigroup, A: ElementSet) -> None:
    if not same_carrier(A.structure, S):
        raise StructureMismatchError(f"subset of {A.structure.name!r} used with {S.name!r}")
    if not A.mask:
        raise EmptySubsetError("ideal kinds are defined for non-empty subsets only")


def _first_missing(S: GammaSemigroup, lhs: int, A: int) -> str:
    extra = lhs & ~A
    return S.elements[(extra & -extra).bit_length() - 1]


def kind_verdict_mask(S: GammaSemigroup, A: int, kind: IdealKind) -> KindVerdict:
    needs_sub, conds = _DEFS[kind]
    witness = None
    if needs_sub:
        lhs = condition_lhs(S, _SUB_CONDITION, A)
        if lhs & ~A:
            witness = IdealWitness(condition_label(_SUB_CONDITION), _first_missing(S, lhs, A))
    bare = True
    for cond in conds:
        lhs = condition_lhs(S, cond, A)
        if lhs & ~A:
            bare = False
            if witness is None:
                witness = IdealWitness(condition_label(cond), _first_missing(S, lhs, A))
            break
    return KindVerdict(witness is None, witness, bare)


def is_ideal_of_kind(S: GammaSemigroup, A: ElementSet, kind: IdealKind) -> KindVerdict:
    _check(S, A)
    return kind_verdict_mask(S, A.mask, kind)


@dataclass(frozen=True)
class PrimeWitness:
    x: str
    gamma: str
    y: str


def prime_verdict_mask(S: GammaSemigroup, A: int) -> Verdict:
    raw = kernels.prime_witness(S._table, S.order, len(S.gammas), A)
    if raw is None:
        return Verdict(True)
    x, g, y = raw
    return Verdict(False, PrimeWitness(S.elements[x], S.gammas[g], S.elements[y]))


def is_prime_for(S: GammaSemigroup, A: ElementSet) -> Verdict:
    """x g y in A implies x in A or y in A, for all x, y and every gamma."""
    _check(S, A)
    return prime_verdict_mask(S, A.mask)


def kind_flags(S: GammaSemigroup, A: int) -> int:
    """Bitset over KINDS (bit i for KINDS[i]) plus a prime bit, memoized per structure."""
    memo = S._memo.setdefault("kind_flags", {})
    flags = memo.get(A)
    if flags is None:
        flags = 0
        if A:
            for i, kind in enumerate(KINDS):
                if kind_verdict_mask(S, A, kind).holds:
                    flags |= 1 << i
            if kernels.prime_witness(S._table, S.order, len(S.gammas), A) is None:
                flags |= _PRIME_BIT
        memo[A] = flags
    return flags


def kind_bit(kind: IdealKind) -> int:
    return 1 << KINDS.index(kind)


PRIME_BIT = _PRIME_BIT


@dataclass(frozen=True)
class ClassificationReport:
    subset: ElementSet
    verdicts: dict
    prime: Verdict

    def prime_kind(self, kind: IdealKind) -> bool:
        """Whether the subset is a prime ideal of ``kind``."""
        return self.verdicts[kind].holds and self.prime.holds

    def lines(self) -> list[str]:
        out = [f"subset={self.subset}"]
        for kind in KINDS:
            v = self.verdicts[kind]
            line = f"{kind.value}={str(v.holds).lower()}"
            if not v.containment_holds or v.witness is not None:
                line += f" containment={str(v.containment_holds).lower()}"
            if v.witness is not None:
                line += f" witness={v.witness.element} condition=\"{v.witness.condition}\""
            out.append(line)
        p = self.prime
        line = f"prime={str(p.holds).lower()}"
        if p.witness is not None:
            line += f" witness=({p.witness.x},{p.witness.gamma},{p.witness.y})"
        out.append(line)
        return out


def classify_subset(S: GammaSemigroup, A: ElementSet) -> ClassificationReport:
    _check(S, A)
    verdicts = {kind: kind_verdict_mask(S, A.mask, kind) for kind in KINDS}
    return ClassificationReport(A, verdicts, prime_verdict_mask(S, A.mask))
