"""Finite Gamma-semigroups, subsets as membership words, and the Gamma-product."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import (
    NotAssociativeError,
    StructureMismatchError,
    UnknownNameError,
)

MAX_ORDER = 64


def format_set(names: Iterable[str]) -> str:
    return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class Carrier:
    """A finite, ordered carrier. Used directly for plain universes."""

    name: str
    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError(f"{self.name}: carrier must be non-empty")
        if len(self.elements) > MAX_ORDER:
            raise ValueError(f"{self.name}: at most {MAX_ORDER} elements supported")
        index = {}
        for i, e in enumerate(self.elements):
            if e in index:
                raise ValueError(f"{self.name}: duplicate element {e!r}")
            index[e] = i
        object.__setattr__(self, "_index", index)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownNameError("element", element) from None

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for e in names:
            mask |= 1 << self.index(e)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.elements) if mask >> i & 1)

    def subset(self, names: Iterable[str] = ()) -> ElementSet:
        return ElementSet(self, self.mask_of(names))

    def from_mask(self, mask: int) -> ElementSet:
        return ElementSet(self, mask)

    def full(self) -> ElementSet:
        return ElementSet(self, self.full_mask)

    def empty(self) -> ElementSet:
        return ElementSet(self, 0)

    def all_subsets(self, nonempty: bool = False):
        """Every subset, in membership-word order."""
        for mask in range(1 if nonempty else 0, self.full_mask + 1):
            yield ElementSet(self, mask)


Universe = Carrier


@dataclass(frozen=True)
class GammaSemigroup(Carrier):
    """Carrier M with a family of binary operations indexed by Gamma.

    ``table`` is flat: ``table[(g * n + a) * n + b]`` is the index of
    ``a g b``. Construction validates associativity unless ``unchecked``.
    """

    gammas: tuple[str, ...] = ()
    table: tuple[int, ...] = ()
    unchecked: bool = False
    _gindex: dict = field(init=False, repr=False, compare=False, hash=False)
    _table: array = field(init=False, repr=False, compare=False, hash=False)
    _pm: array = field(init=False, repr=False, compare=False, hash=False)
    _validation: ValidationReport = field(init=False, repr=False, compare=False, hash=False)
    _memo: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "gammas", tuple(self.gammas))
        object.__setattr__(self, "table", tuple(self.table))
        n, m = len(self.elements), len(self.gammas)
        if m == 0:
            raise ValueError(f"{self.name}: Gamma must be non-empty")
        if n * m > MAX_ORDER:
            raise ValueError(
                f"{self.name}: |M|*|Gamma| = {n * m} exceeds the supported {MAX_ORDER}"
            )
        gindex = {}
        for i, g in enumerate(self.gammas):
            if g in gindex:
                raise ValueError(f"{self.name}: duplicate gamma {g!r}")
            gindex[g] = i
        object.__setattr__(self, "_gindex", gindex)
        if len(self.table) != m * n * n:
            raise ValueError(f"{self.name}: table needs {m * n * n} entries, got {len(self.table)}")
        for v in self.table:
            if not 0 <= v < n:
                raise ValueError(f"{self.name}: table entry {v} outside the carrier")
        tab = array("q", self.table)
        object.__setattr__(self, "_table", tab)
        object.__setattr__(self, "_pm", kernels.product_table(tab, n, m))
        report = _validate(self)
        object.__setattr__(self, "_validation", report)
        object.__setattr__(self, "_memo", {})
        if not self.unchecked and not report.valid:
            raise NotAssociativeError(self.name, report)

    @classmethod
    def from_tables(
        cls,
        name: str,
        elements: Sequence[str],
        tables: Mapping[str, Sequence[Sequence[str]]],
        unchecked: bool = False,
    ) -> GammaSemigroup:
        """Build from one Cayley table per gamma, rows = left operand."""
        elements = tuple(elements)
        idx = {e: i for i, e in enumerate(elements)}
        flat = []
        for g, rows in tables.items():
            if len(rows) != len(elements):
                raise ValueError(f"{name}: table {g!r} has {len(rows)} rows")
            for row in rows:
                if len(row) != len(elements):
                    raise ValueError(f"{name}: ragged row in table {g!r}")
                for cell in row:
                    if cell not in idx:
                        raise UnknownNameError("element", cell)
                    flat.append(idx[cell])
        return cls(name, elements, tuple(tables), tuple(flat), unchecked)

    def gamma_index(self, gamma: str) -> int:
        try:
            return self._gindex[gamma]
        except KeyError:
            raise UnknownNameError("gamma", gamma) from None

    def op(self, a: int, g: int, b: int) -> int:
        n = len(self.elements)
        return self.table[(g * n + a) * n + b]

    def rows(self, gamma: str) -> list[list[str]]:
        g = self.gamma_index(gamma)
        n = len(self.elements)
        return [[self.elements[self.op(a, g, b)] for b in range(n)] for a in range(n)]

    @property
    def is_valid(self) -> bool:
        return self._validation.valid

    def product_mask(self, A: int, B: int) -> int:
        return kernels.set_product(self._pm, len(self.elements), A, B)


@dataclass(frozen=True)
class ElementSet:
    """A subset of a carrier, held as a membership word over its canonical order."""

    structure: Carrier
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.structure.full_mask:
            raise ValueError(f"mask {self.mask:#x} outside carrier {self.structure.name}")

    @property
    def members(self) -> tuple[str, ...]:
        return self.structure.names_of(self.mask)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, element):
        return bool(self.mask >> self.structure.index(element) & 1)

    def __str__(self):
        return format_set(self.members)

    def __repr__(self):
        return f"ElementSet({self.structure.name}, {self})"

    def _check(self, other: ElementSet) -> None:
        if not same_carrier(self.structure, other.structure):
            raise StructureMismatchError(
                f"{other.structure.name!r} subset used where {self.structure.name!r} expected"
            )

    def __or__(self, other):
        self._check(other)
        return ElementSet(self.structure, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return ElementSet(self.structure, self.mask & other.mask)

    def __sub__(self, other):
        self._check(other)
        return ElementSet(self.structure, self.mask & ~other.mask)

    def __le__(self, other):
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other):
        return other <= self

    def complement(self) -> ElementSet:
        return ElementSet(self.structure, self.structure.full_mask & ~self.mask)


def same_carrier(s: Carrier, t: Carrier) -> bool:
    return s is t or s == t


@dataclass(frozen=True)
class AssociativityWitness:
    a: str
    alpha: str
    b: str
    beta: str
    c: str
    left: str
    right: str

    def as_tuple(self):
        return (self.a, self.alpha, self.b, self.beta, self.c)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    witnesses: tuple[AssociativityWitness, ...]
    instances: int


def _validate(S: GammaSemigroup, limit: int = -1) -> ValidationReport:
    n, m = len(S.elements), len(S.gammas)
    raw = kernels.associativity_failures(S._table, n, m, limit)
    el, gm = S.elements, S.gammas
    witnesses = tuple(
        AssociativityWitness(el[a], gm[g1], el[b], gm[g2], el[c], el[left], el[right])
        for a, g1, b, g2, c, left, right in raw
    )
    return ValidationReport(not witnesses, witnesses, n**3 * m**2)


def validate_structure(S: GammaSemigroup) -> ValidationReport:
    """Check (a alpha b) beta c = a alpha (b beta c) over every instance.

    Load an unvalidated table with ``unchecked=True`` to inspect its failures.
    """
    return S._validation


def apply(S: GammaSemigroup, a: str, gamma: str, b: str) -> str:
    return S.elements[S.op(S.index(a), S.gamma_index(gamma), S.index(b))]


def gamma_product(S: GammaSemigroup, A: ElementSet, B: ElementSet) -> ElementSet:
    """A Gamma B = {a g b : a in A, g in Gamma, b in B}."""
    for X in (A, B):
        if not same_carrier(X.structure, S):
            raise StructureMismatchError(
                f"subset of {X.structure.name!r} used with structure {S.name!r}"
            )
    return ElementSet(S, S.product_mask(A.mask, B.mask))


def chain_product(S: GammaSemigroup, *masks: int) -> int:
    """Left-associated product of several membership words."""
    out = masks[0]
    for mk in masks[1:]:
        out = S.product_mask(out, mk)
    return out


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer plus the first counterexample when the answer is no."""

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds
