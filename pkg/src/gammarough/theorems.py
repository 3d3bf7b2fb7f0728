"""Executable statements about rough approximations under set-valued anti-homomorphisms.

Each registered statement has a hypothesis (anti-homomorphism level, an ideal
kind for the parameter subset, optional primality and non-emptiness side
conditions) and a conclusion about the lower or upper approximation. Audits
count the instances whose hypothesis holds and report the first failing
instance as a replayable witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .antihom import Level, _structures, anti_hom_level, check_anti_hom, enumerate_maps
from .core import ElementSet, gamma_product, same_carrier
from .errors import BudgetError, NotAssociativeError, ParamShapeError, UnknownTheoremError
from .ideals import (
    PRIME_BIT,
    IdealKind,
    is_ideal_of_kind,
    is_prime_for,
    kind_bit,
    kind_flags,
    kind_verdict_mask,
    prime_verdict_mask,
)
from .quotient import build_quotient, quotient_lower, quotient_masks, quotient_upper
from .rough import SetValuedMap, lower_approx, upper_approx

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class TheoremSpec:
    """One statement. ``kinds`` is empty for the product inclusions (two slots)."""

    id: str
    summary: str
    side: str
    level: Level
    kinds: tuple[IdealKind, ...] = ()
    prime: bool = False
    nonempty: bool = True
    quotient: bool = False

    @property
    def slots(self) -> int:
        return 1 if self.kinds else 2

    def hypothesis_text(self) -> str:
        level = "strong anti-hom" if self.level is Level.STRONG else "anti-hom"
        if not self.kinds:
            return f"{level}; A1, A2 non-empty subsets of M2"
        kinds = "/".join(k.value for k in self.kinds)
        prime = "prime " if self.prime else ""
        ne = f"; {self.side}(B) non-empty" if self.nonempty else ""
        return f"{level}; B a {prime}{kinds} of M2{ne}"


def _pair(base, what, kinds, prime=False, ne_i=True, ne_ii=True, quotient=False):
    target = "M1/T" if quotient else "M1"
    prime_word = "prime " if prime else ""
    return [
        TheoremSpec(f"{base}.i", f"upper(B) is a {prime_word}{what} of {target}",
                    "upper", Level.PLAIN, kinds, prime, ne_i, quotient),
        TheoremSpec(f"{base}.ii", f"lower(B) is a {prime_word}{what} of {target}",
                    "lower", Level.STRONG, kinds, prime, ne_ii, quotient),
    ]


K = IdealKind
_SPECS = [
    TheoremSpec("T5.1.i", "upper(A2) G upper(A1) is inside upper(A1 G A2)", "upper", Level.PLAIN, nonempty=False),
    TheoremSpec("T5.1.ii", "lower(A2) G lower(A1) is inside lower(A1 G A2)", "lower", Level.PLAIN, nonempty=False),
    TheoremSpec("T5.1.ii+strong", "lower(A2) G lower(A1) is inside lower(A1 G A2)", "lower", Level.STRONG, nonempty=False),
    *_pair("T5.2", "sub-Gamma-semigroup", (K.SUB,), ne_ii=False),
    *_pair("T5.3", "left ideal", (K.LEFT,)),
    *_pair("C1", "right ideal", (K.RIGHT,)),
    *_pair("C2", "two-sided ideal", (K.TWO_SIDED,)),
    *_pair("T5.4", "bi-ideal", (K.BI,)),
    *_pair("T5.5", "interior ideal", (K.INTERIOR,)),
    *_pair("T5.6", "quasi-ideal", (K.QUASI,)),
    *_pair("T5.7", "bi-interior ideal", (K.BI_INTERIOR,)),
    *_pair("T5.8", "left bi-quasi ideal", (K.LEFT_BI_QUASI,)),
    *_pair("C3", "right bi-quasi ideal", (K.RIGHT_BI_QUASI,)),
    *_pair("C4", "bi-quasi ideal", (K.BI_QUASI,)),
    *_pair("T5.9", "left quasi-interior ideal", (K.LEFT_QUASI_INTERIOR,)),
    *_pair("C5", "right quasi-interior ideal", (K.RIGHT_QUASI_INTERIOR,)),
    *_pair("C6", "quasi-interior ideal", (K.QUASI_INTERIOR,)),
    *_pair("T5.10", "bi-quasi-interior ideal", (K.BI_QUASI_INTERIOR,)),
    *_pair("T5.11", "bi-ideal", (K.BI,), prime=True),
    *_pair("T5.12", "interior ideal", (K.INTERIOR,), prime=True),
    *_pair("T5.13", "quasi-ideal", (K.QUASI,), prime=True),
    *_pair("T5.14", "bi-interior ideal", (K.BI_INTERIOR,), prime=True),
    *_pair("T5.15", "left bi-quasi ideal", (K.LEFT_BI_QUASI,), prime=True),
    *_pair("T5.16", "left quasi-interior ideal", (K.LEFT_QUASI_INTERIOR,), prime=True),
    *_pair("T5.17prime", "bi-quasi-interior ideal", (K.BI_QUASI_INTERIOR,), prime=True),
    *_pair("Q5.17", "sub-Gamma-semigroup", (K.SUB,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("Q5.18", "left/right/two-sided ideal", (K.LEFT, K.RIGHT, K.TWO_SIDED),
           ne_i=False, ne_ii=False, quotient=True),
    *_pair("C7", "bi-ideal", (K.BI,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C8", "interior ideal", (K.INTERIOR,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C9", "quasi-ideal", (K.QUASI,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C10", "bi-interior ideal", (K.BI_INTERIOR,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C11", "bi-quasi ideal", (K.BI_QUASI,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C12", "quasi-interior ideal", (K.QUASI_INTERIOR,), ne_i=False, ne_ii=False, quotient=True),
    *_pair("C13", "bi-quasi-interior ideal", (K.BI_QUASI_INTERIOR,), ne_i=False, ne_ii=False, quotient=True),
]
del K

REGISTRY: dict[str, TheoremSpec] = {s.id: s for s in _SPECS}
THEOREM_IDS: tuple[str, ...] = tuple(REGISTRY)


def get_spec(theorem_id: str) -> TheoremSpec:
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheoremError(theorem_id) from None


@dataclass(frozen=True)
class TheoremWitness:
    """A hypothesis-satisfying instance whose conclusion fails.

    ``result`` is the set the conclusion is about (an approximation in M1, or a
    set of classes of M1/T). ``reason`` is one of "inclusion", "empty",
    "containment", "prime"; ``element`` names the violating element or class.
    """

    theorem: str
    map: SetValuedMap
    params: tuple[ElementSet, ...]
    kind: IdealKind | None
    result: ElementSet
    reason: str
    element: str | None = None
    detail: str = ""

    def lines(self) -> list[str]:
        T = self.map
        out = [
            f"witness.source={T.source.name}",
            f"witness.target={T.target.name}",
            f"witness.map={T.describe()}",
        ]
        for i, p in enumerate(self.params, 1):
            out.append(f"witness.param{i}={p}")
        if self.kind is not None:
            out.append(f"witness.kind={self.kind.value}")
        out.append(f"witness.result={self.result}")
        out.append(f"witness.reason={self.reason}")
        if self.element is not None:
            out.append(f"witness.element={self.element}")
        if self.detail:
            out.append(f"witness.detail={self.detail}")
        return out


@dataclass(frozen=True)
class AuditResult:
    id: str
    hypothesis_met: bool
    conclusion_holds: bool | None
    witness: TheoremWitness | None
    instance_counts: tuple[int, int]
    applicable: bool = True
    note: str = ""

    @property
    def status(self) -> str:
        if not self.applicable:
            return "NOT-APPLICABLE"
        if not self.hypothesis_met:
            return "VACUOUS"
        return "PASS" if self.conclusion_holds else "FAIL"

    def lines(self) -> list[str]:
        met, total = self.instance_counts
        out = [f"theorem={self.id} status={self.status} hypothesis_instances={met} total_instances={total}"]
        if self.note:
            out.append(f"note={self.note}")
        if self.witness is not None:
            out.extend(self.witness.lines())
        return out


@dataclass(frozen=True)
class All:
    pass


@dataclass(frozen=True)
class Sampled:
    n: int
    seed: int = 0


def _conclusion_structure(spec: TheoremSpec, T: SetValuedMap):
    if spec.quotient:
        return build_quotient(T).induced
    return T.source


def _approx(spec: TheoremSpec, T: SetValuedMap, B: int) -> int:
    if spec.quotient:
        lo, up = quotient_masks(T, B)
    else:
        lo, up = T.approx_masks(B)
    return up if spec.side == "upper" else lo


def _evaluate(spec: TheoremSpec, T: SetValuedMap, masks: tuple[int, ...], kind: IdealKind | None):
    """(hypothesis met, failure or None) for one parameter instance. Level is checked by the caller."""
    S1, S2 = T.source, T.target
    if not spec.kinds:
        A1, A2 = masks
        lhs = _approx(spec, T, S2.product_mask(A1, A2))
        rhs = S1.product_mask(_approx(spec, T, A2), _approx(spec, T, A1))
        extra = rhs & ~lhs
        if not extra:
            return True, None
        el = S1.elements[(extra & -extra).bit_length() - 1]
        return True, ("inclusion", ElementSet(S1, rhs), el, f"{spec.side}(A2) G {spec.side}(A1) has {el}, {spec.side}(A1 G A2) does not")

    (B,) = masks
    need = kind_bit(kind) | (PRIME_BIT if spec.prime else 0)
    if not B or kind_flags(S2, B) & need != need:
        return False, None
    R = _approx(spec, T, B)
    if spec.nonempty and not R:
        return False, None
    S = _conclusion_structure(spec, T)
    result = ElementSet(S, R)
    if not R:
        return True, ("empty", result, None, f"{spec.side} approximation is empty")
    if kind_flags(S, R) & need == need:
        return True, None
    v = kind_verdict_mask(S, R, kind)
    if not v.holds:
        return True, ("containment", result, v.witness.element, f"{v.witness.condition} fails at {v.witness.element}")
    p = prime_verdict_mask(S, R)
    w = p.witness
    return True, ("prime", result, None, f"{w.x} {w.gamma} {w.y} lies in the set but neither {w.x} nor {w.y} does")


def _precheck(spec: TheoremSpec, T: SetValuedMap):
    S1, S2 = _structures(T)
    for S in (S1, S2):
        if not S.is_valid:
            raise NotAssociativeError(S.name, S._validation)
    if spec.quotient:
        q = build_quotient(T)
        if not q.well_defined:
            w = q.failure_witness
            return (f"quotient not well defined: T({w.x}) = T({w.x2}) but the {w.side} "
                    f"products with {w.y} under {w.gamma} land in different classes")
    return None


class _Tally:
    def __init__(self, spec):
        self.spec = spec
        self.met = 0
        self.total = 0
        self.witness = None

    def add(self, T, masks, kind, level_ok):
        self.total += 1
        if not level_ok:
            return
        met, failure = _evaluate(self.spec, T, masks, kind)
        if not met:
            return
        self.met += 1
        if failure is not None and self.witness is None:
            reason, result, element, detail = failure
            params = tuple(ElementSet(T.target, m) for m in masks)
            self.witness = TheoremWitness(self.spec.id, T, params, kind, result, reason, element, detail)

    def result(self, note="") -> AuditResult:
        met = self.met > 0
        holds = (self.witness is None) if met else None
        return AuditResult(self.spec.id, met, holds, self.witness, (self.met, self.total), True, note)


def _not_applicable(spec, note, total):
    return AuditResult(spec.id, False, None, None, (0, total), False, note)


def audit_theorem(theorem_id: str, T: SetValuedMap, params, variant: IdealKind | str | None = None) -> AuditResult:
    """Audit one parameter instance (all variants when ``variant`` is None)."""
    spec = get_spec(theorem_id)
    params = tuple(params)
    if len(params) != spec.slots:
        raise ParamShapeError(f"{spec.id} takes {spec.slots} subset(s) of the target, got {len(params)}")
    for p in params:
        if not isinstance(p, ElementSet) or not same_carrier(p.structure, T.target):
            raise ParamShapeError(f"{spec.id} parameters must be subsets of {T.target.name!r}")
    kinds = _variants(spec, variant)
    note = _precheck(spec, T)
    if note:
        return _not_applicable(spec, note, len(kinds))
    tally = _Tally(spec)
    level_ok = anti_hom_level(T) >= spec.level
    masks = tuple(p.mask for p in params)
    for kind in kinds:
        tally.add(T, masks, kind, level_ok)
    return tally.result()


def _variants(spec: TheoremSpec, variant) -> tuple:
    if not spec.kinds:
        if variant is not None:
            raise ParamShapeError(f"{spec.id} has no variants")
        return (None,)
    if variant is None:
        return spec.kinds
    if isinstance(variant, str):
        variant = IdealKind.parse(variant)
    if variant not in spec.kinds:
        raise ParamShapeError(f"{spec.id} has no variant {variant.value}")
    return (variant,)


def instance_space(spec: TheoremSpec, target_order: int) -> int:
    return ((1 << target_order) - 1) ** spec.slots * max(1, len(spec.kinds))


def _decode(spec: TheoremSpec, index: int, target_order: int):
    base = (1 << target_order) - 1
    kinds = spec.kinds or (None,)
    index, k = divmod(index, len(kinds))
    masks = []
    for _ in range(spec.slots):
        index, d = divmod(index, base)
        masks.append(d + 1)
    return tuple(reversed(masks)), kinds[k]


def _instances(spec: TheoremSpec, target_order: int, scope):
    space = instance_space(spec, target_order)
    if isinstance(scope, Sampled):
        rng = random.Random(f"{scope.seed}:{spec.id}")
        indices = sorted(rng.sample(range(space), min(scope.n, space)))
    else:
        indices = range(space)
    for i in indices:
        yield _decode(spec, i, target_order)


def _audit_scope(spec: TheoremSpec, T: SetValuedMap, scope) -> AuditResult:
    n2 = T.target.order
    note = _precheck(spec, T)
    if note:
        total = instance_space(spec, n2) if isinstance(scope, All) else min(scope.n, instance_space(spec, n2))
        return _not_applicable(spec, note, total)
    tally = _Tally(spec)
    level_ok = anti_hom_level(T) >= spec.level
    for masks, kind in _instances(spec, n2, scope):
        tally.add(T, masks, kind, level_ok)
    return tally.result()


def audit_all(T: SetValuedMap, scope=None, ids=None, budget: int = DEFAULT_BUDGET) -> list[AuditResult]:
    """Run every registered id (or ``ids``) over all or sampled parameter tuples."""
    scope = scope or All()
    specs = [get_spec(i) for i in (ids or THEOREM_IDS)]
    if isinstance(scope, All):
        required = sum(instance_space(s, T.target.order) for s in specs)
        if required > budget:
            raise BudgetError(required, budget)
    elif scope.n <= 0:
        raise ValueError("sample size must be positive")
    return [_audit_scope(s, T, scope) for s in specs]


def replay(w: TheoremWitness) -> bool:
    """Re-evaluate a witness through the public predicates; True when the failure reproduces."""
    spec = get_spec(w.theorem)
    T = w.map
    if check_anti_hom(T).level < spec.level:
        return False
    approx = upper_approx if spec.side == "upper" else lower_approx
    if not spec.kinds:
        A1, A2 = w.params
        S1, S2 = T.source, T.target
        lhs = approx(T, gamma_product(S2, A1, A2))
        rhs = gamma_product(S1, approx(T, A2), approx(T, A1))
        return not rhs <= lhs and w.element in (rhs - lhs).members

    (B,) = w.params
    S2 = T.target
    if not B or not is_ideal_of_kind(S2, B, w.kind).holds:
        return False
    if spec.prime and not is_prime_for(S2, B).holds:
        return False
    if spec.quotient:
        q = build_quotient(T)
        if not q.well_defined:
            return False
        R = (quotient_upper if spec.side == "upper" else quotient_lower)(T, B)
    else:
        R = approx(T, B)
    if spec.nonempty and not R:
        return False
    if R != w.result:
        return False
    if not R:
        return w.reason == "empty"
    S = R.structure
    holds = is_ideal_of_kind(S, R, w.kind).holds
    if spec.prime:
        holds = holds and is_prime_for(S, R).holds
    return not holds


@dataclass
class SearchResult:
    id: str
    witness: TheoremWitness | None
    hypothesis_instances: int = 0
    total_instances: int = 0
    maps_checked: int = 0
    structure_pairs: int = 0
    exhaustive: bool = True
    not_applicable_maps: int = 0
    pairs: list = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"theorem={self.id}",
            f"found={str(self.witness is not None).lower()}",
            f"structure_pairs={self.structure_pairs}",
            f"maps_checked={self.maps_checked}",
            f"hypothesis_instances={self.hypothesis_instances}",
            f"total_instances={self.total_instances}",
            f"exhaustive={str(self.exhaustive).lower()}",
        ]
        if self.not_applicable_maps:
            out.append(f"not_applicable_maps={self.not_applicable_maps}")
        if self.witness is not None:
            out.extend(self.witness.lines())
        return out


def search_counterexample(
    theorem_id: str,
    max_order: int = 2,
    map_budget: int = 10_000,
    seed: int = 0,
    catalog=None,
) -> SearchResult:
    """Look for a failing instance over structure pairs, maps and all parameters.

    ``catalog`` is a sequence of Gamma-semigroups; it defaults to the built-in
    fixture catalog. Pairs must share their Gamma. Map spaces larger than
    ``map_budget`` are sampled with ``seed``.
    """
    spec = get_spec(theorem_id)
    if catalog is None:
        from .catalog import fixture_structures

        catalog = fixture_structures(max_order)
    structures = [S for S in catalog if S.order <= max_order and S.is_valid]
    res = SearchResult(spec.id, None)
    for S1, S2 in itertools.product(structures, repeat=2):
        if S1.gammas != S2.gammas:
            continue
        res.structure_pairs += 1
        res.pairs.append((S1.name, S2.name))
        maps = enumerate_maps(S1, S2, spec.level, budget=map_budget, seed=seed)
        res.exhaustive &= maps.exhaustive
        for T in maps:
            res.maps_checked += 1
            r = _audit_scope(spec, T, All())
            if not r.applicable:
                res.not_applicable_maps += 1
                continue
            res.hypothesis_instances += r.instance_counts[0]
            res.total_instances += r.instance_counts[1]
            if r.witness is not None:
                res.witness = r.witness
                return res
    return res
