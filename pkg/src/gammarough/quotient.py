"""The quotient M1/T = {T(x) : x in M1} and its lower/upper approximations."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Carrier, ElementSet, GammaSemigroup, Universe, format_set, same_carrier
from .errors import StructureMismatchError
from .rough import SetValuedMap


@dataclass(frozen=True)
class WellDefinednessWitness:
    """T(x) = T(x2) but the induced products differ.

    side "right": T(x g y) != T(x2 g y); side "left": T(y g x) != T(y g x2).
    """

    x: str
    x2: str
    y: str
    gamma: str
    side: str


@dataclass(frozen=True)
class QuotientStructure:
    """Distinct images of T, ordered by their least preimage.

    ``carrier`` names each class by its image literal, e.g. ``{b,c}``. When the
    source has an operation and the representative operation
    ``[T(x)] g [T(y)] := [T(x g y)]`` is well defined, ``carrier`` is the
    induced Gamma-semigroup; otherwise it is a plain universe.
    """

    map: SetValuedMap
    classes: tuple[int, ...]
    preimages: tuple[int, ...]
    carrier: Carrier
    well_defined: bool
    failure_witness: WellDefinednessWitness | None

    @property
    def induced(self) -> GammaSemigroup | None:
        return self.carrier if isinstance(self.carrier, GammaSemigroup) else None

    def class_of(self, x: str) -> int:
        return self.classes.index(self.map.images[self.map.source.index(x)])

    def class_name(self, i: int) -> str:
        return self.carrier.elements[i]

    def lines(self) -> list[str]:
        T = self.map
        out = [f"classes={len(self.classes)}"]
        for i, (img, pre) in enumerate(zip(self.classes, self.preimages)):
            out.append(f"class.{i}={format_set(T.target.names_of(img))} preimage={format_set(T.source.names_of(pre))}")
        out.append(f"well_defined={str(self.well_defined).lower()}")
        if self.failure_witness is not None:
            w = self.failure_witness
            out.append(f"witness=(x={w.x},x2={w.x2},y={w.y},gamma={w.gamma},side={w.side})")
        if self.induced is not None:
            out.append(f"associative={str(self.induced.is_valid).lower()}")
        return out


def build_quotient(T: SetValuedMap) -> QuotientStructure:
    cached = T._cache.get("quotient")
    if cached is not None:
        return cached
    S1 = T.source
    classes: list[int] = []
    preimages: list[int] = []
    cls_of = []
    for i, img in enumerate(T.images):
        if img not in classes:
            classes.append(img)
            preimages.append(0)
        k = classes.index(img)
        preimages[k] |= 1 << i
        cls_of.append(k)
    names = tuple(format_set(T.target.names_of(img)) for img in classes)
    qname = f"{S1.name}/{T.name}"

    if not isinstance(S1, GammaSemigroup):
        q = QuotientStructure(T, tuple(classes), tuple(preimages), Universe(qname, names), False, None)
        T._cache["quotient"] = q
        return q

    n, m, k = S1.order, len(S1.gammas), len(classes)
    rep = [(p & -p).bit_length() - 1 for p in preimages]
    witness = None
    for x in range(n):
        for x2 in range(n):
            if x2 == x or cls_of[x] != cls_of[x2]:
                continue
            for y in range(n):
                for g in range(m):
                    if cls_of[S1.op(x, g, y)] != cls_of[S1.op(x2, g, y)]:
                        side = "right"
                    elif cls_of[S1.op(y, g, x)] != cls_of[S1.op(y, g, x2)]:
                        side = "left"
                    else:
                        continue
                    el = S1.elements
                    witness = WellDefinednessWitness(el[x], el[x2], el[y], S1.gammas[g], side)
                    break
                if witness:
                    break
            if witness:
                break
        if witness:
            break

    if witness is not None:
        carrier = Universe(qname, names)
    else:
        table = tuple(
            cls_of[S1.op(rep[i], g, rep[j])] for g in range(m) for i in range(k) for j in range(k)
        )
        carrier = GammaSemigroup(qname, names, S1.gammas, table, unchecked=True)
    q = QuotientStructure(T, tuple(classes), tuple(preimages), carrier, witness is None, witness)
    T._cache["quotient"] = q
    return q


def quotient_masks(T: SetValuedMap, B: int) -> tuple[int, int]:
    """(lower, upper) class membership words for a target membership word."""
    q = build_quotient(T)
    lo = up = 0
    for i, img in enumerate(q.classes):
        if img & ~B == 0:
            lo |= 1 << i
        if img & B:
            up |= 1 << i
    return lo, up


def _classes_where(T: SetValuedMap, H: ElementSet, keep) -> ElementSet:
    if not same_carrier(H.structure, T.target):
        raise StructureMismatchError(f"map {T.name} targets {T.target.name!r}, got {H.structure.name!r}")
    q = build_quotient(T)
    mask = 0
    for i, img in enumerate(q.classes):
        if keep(img, H.mask):
            mask |= 1 << i
    return ElementSet(q.carrier, mask)


def quotient_lower(T: SetValuedMap, H: ElementSet) -> ElementSet:
    """Classes T(x) lying inside H."""
    return _classes_where(T, H, lambda img, h: img & ~h == 0)


def quotient_upper(T: SetValuedMap, H: ElementSet) -> ElementSet:
    """Classes T(x) meeting H."""
    return _classes_where(T, H, lambda img, h: img & h != 0)


def class_image(T: SetValuedMap, A: ElementSet) -> ElementSet:
    """{[T(x)] : x in A} for a subset A of the source."""
    q = build_quotient(T)
    mask = 0
    for x in A.members:
        mask |= 1 << q.class_of(x)
    return ElementSet(q.carrier, mask)


def audit_quotient_theorem(theorem_id: str, T: SetValuedMap, params, variant=None):
    """Audit one quotient statement instance; see ``theorems.audit_theorem``."""
    from .theorems import REGISTRY, audit_theorem
    from .errors import UnknownTheoremError

    spec = REGISTRY.get(theorem_id)
    if spec is None or not spec.quotient:
        raise UnknownTheoremError(theorem_id)
    return audit_theorem(theorem_id, T, params, variant)
