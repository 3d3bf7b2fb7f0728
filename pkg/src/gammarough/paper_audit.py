"""Re-check the claims made by the worked Examples 1-26 against computed values.

Every claim yields one line with the claimed value, the computed value and a
PASS/FAIL verdict. Claimed subsets written with letters that are not elements
of the carrier (several examples name subsets of M1 with M2's letters) are read
positionally, a -> first element, b -> second, and so on; the line says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog
from .antihom import Level, check_anti_hom
from .core import Carrier, ElementSet, GammaSemigroup, format_set, validate_structure
from .errors import GammaRoughError
from .ideals import IdealKind, condition_lhs, is_ideal_of_kind, is_prime_for
from .rough import SetValuedMap, lower_approx, upper_approx
from .theorems import audit_theorem

K = IdealKind


@dataclass(frozen=True)
class ClaimResult:
    example: int
    label: str
    claimed: str
    computed: str
    passed: bool
    note: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"example={self.example} claim={self.label} claimed={self.claimed} computed={self.computed} verdict={verdict}"
        if self.note:
            out += f" note={self.note}"
        return out


@dataclass(frozen=True)
class PaperReport:
    claims: tuple[ClaimResult, ...]

    @property
    def failures(self) -> int:
        return sum(not c.passed for c in self.claims)

    def for_example(self, n: int) -> list[ClaimResult]:
        return [c for c in self.claims if c.example == n]

    def lines(self) -> list[str]:
        out = [c.line() for c in self.claims]
        out.append(f"claims={len(self.claims)} pass={len(self.claims) - self.failures} fail={self.failures}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _read(carrier: Carrier, names) -> tuple[int | None, str]:
    """Membership word of a claimed set, with a note when read positionally."""
    names = tuple(names)
    if all(n in carrier._index for n in names):
        return carrier.mask_of(names), ""
    mask = 0
    for n in names:
        pos = ord(n) - ord("a") if len(n) == 1 and n.isalpha() else -1
        if not 0 <= pos < carrier.order:
            return None, f"claimed_names_outside_{carrier.name}"
        mask |= 1 << pos
    return mask, f"read_positionally_as_{format_set(carrier.names_of(mask))}"


class _Claims:
    def __init__(self):
        self.out: list[ClaimResult] = []

    def add(self, ex, label, claimed, computed, passed, note=""):
        self.out.append(ClaimResult(ex, label.replace(" ", ""), claimed, computed, passed, note))

    def set_value(self, ex, label, carrier: Carrier, claimed_names, computed_mask: int, note=""):
        claimed_mask, read_note = _read(carrier, claimed_names)
        note = ",".join(n for n in (read_note, note) if n)
        self.add(ex, label, format_set(claimed_names), format_set(carrier.names_of(computed_mask)),
                 claimed_mask == computed_mask, note)

    def approx(self, ex, T: SetValuedMap, side, B_names, claimed, label=None):
        B = T.target.subset(B_names)
        R = (upper_approx if side == "upper" else lower_approx)(T, B)
        self.set_value(ex, label or f"{side}({B})", T.source, claimed, R.mask)

    def product(self, ex, S: GammaSemigroup, label, mask: int, claimed):
        self.set_value(ex, label, S, claimed, mask)

    def valid(self, ex, S: GammaSemigroup, label):
        report = validate_structure(S)
        computed = "true"
        if not report.valid:
            w = report.witnesses[0]
            computed = f"false({w.a},{w.alpha},{w.b},{w.beta},{w.c}):{w.left}!={w.right}"
        self.add(ex, label, "true", computed, report.valid, f"instances={report.instances}")

    def level(self, ex, T: SetValuedMap, claimed: Level, note=""):
        v = check_anti_hom(T)
        computed = str(v.level)
        if v.plain_witness is not None:
            w = v.plain_witness
            computed += f"({w.a},{w.gamma},{w.b}):{w.offending}"
        elif v.strong_witness is not None and claimed is Level.STRONG:
            w = v.strong_witness
            computed += f"({w.a},{w.gamma},{w.b}):{w.image}!={w.product}"
        self.add(ex, f"{T.name}_is_{claimed}_anti-hom", f">={claimed}", computed, v.level >= claimed, note)

    def kind(self, ex, S: GammaSemigroup, A: ElementSet, kind: IdealKind, prime=False, claimed=True, what="B"):
        prefix = "prime_" if prime else ""
        label = f"{what}={A}_is_{prefix}{kind.value}_of_{S.name}"
        if not A:
            self.add(ex, label, str(claimed).lower(), "false(empty)", not claimed)
            return
        v = is_ideal_of_kind(S, A, kind)
        holds = v.holds
        detail = "" if holds else f"({v.witness.element}:{v.witness.condition.replace(' ', '')})"
        if holds and prime:
            p = is_prime_for(S, A)
            holds = p.holds
            if not holds:
                detail = f"(not_prime:{p.witness.x}{p.witness.gamma}{p.witness.y})"
        note = "" if S.is_valid else f"{S.name}_is_not_associative"
        self.add(ex, label, str(claimed).lower(), str(holds).lower() + detail, holds == claimed, note)

    def inclusion(self, ex, label, small: ElementSet, big: ElementSet):
        holds = small <= big
        self.add(ex, label, "true", f"{str(holds).lower()}({small}⊆{big})", holds)

    def theorem(self, ex, theorem_id, T: SetValuedMap, params):
        try:
            r = audit_theorem(theorem_id, T, params)
        except GammaRoughError as exc:
            self.add(ex, f"instance_of_{theorem_id}", "holds", "not_applicable", False,
                     type(exc).__name__)
            return
        self.add(ex, f"instance_of_{theorem_id}", "holds", r.status, r.status == "PASS",
                 "" if r.hypothesis_met else "hypothesis_not_met")


def _chain(S: GammaSemigroup, A: ElementSet, *chains: str) -> int:
    return condition_lhs(S, tuple(chains), A.mask)


def _example1(c: _Claims):
    T = catalog.example1_map()
    printed = [
        ("a", "24", ""), ("b", "13", "13"), ("c", "24", ""),
        ("ab", "1234", "13"), ("ac", "24", "2"), ("bc", "1234", "13"), ("abc", "1234", "1234"),
    ]
    for B, up, lo in printed:
        c.approx(1, T, "upper", B, up)
        c.approx(1, T, "lower", B, lo)


def _example2(c: _Claims):
    c.valid(2, catalog.example2(), "M_is_a_Gamma-semigroup")


def _example3(c: _Claims):
    c.valid(3, catalog.example3(), "M_is_a_Gamma-semigroup")
    c.level(3, catalog.example3_map(), Level.PLAIN)


def _example4(c: _Claims):
    c.valid(4, catalog.example4(), "M_is_a_Gamma-semigroup")
    c.level(4, catalog.example4_map(), Level.PLAIN)


def _example5(c: _Claims):
    m1, m2 = catalog.example5()
    c.valid(5, m1, "M1_is_a_Gamma-semigroup")
    c.valid(5, m2, "M2_is_a_Gamma-semigroup")
    c.level(5, catalog.example5_map(), Level.STRONG)


def _example6(c: _Claims):
    m1, m2 = catalog.example6()
    c.valid(6, m1, "M1_is_a_Gamma-semigroup")
    c.valid(6, m2, "M2_is_a_Gamma-semigroup")
    c.level(6, catalog.example6_map(), Level.STRONG, "image_of_z_taken_from_later_examples")


def _example7(c: _Claims):
    T = catalog.example3_map()
    M = T.source
    A1, A2 = M.subset("a"), M.subset("b")
    c.level(7, T, Level.PLAIN)
    c.approx(7, T, "upper", "a", "abc", "upper(A1)")
    c.approx(7, T, "upper", "b", "abc", "upper(A2)")
    u1, u2 = upper_approx(T, A1), upper_approx(T, A2)
    c.product(7, M, "upper(A2)Γupper(A1)", M.product_mask(u2.mask, u1.mask), "abc")
    prod = M.product_mask(A1.mask, A2.mask)
    c.product(7, M, "A1ΓA2", prod, "b")
    c.approx(7, T, "upper", M.names_of(prod), "abc", "upper(A1ΓA2)")
    c.inclusion(7, "upper(A2)Γupper(A1)⊆upper(A1ΓA2)",
                ElementSet(M, M.product_mask(u2.mask, u1.mask)), upper_approx(T, ElementSet(M, prod)))
    c.theorem(7, "T5.1.i", T, (A1, A2))


def _example8(c: _Claims):
    T = catalog.example6_map()
    m1, m2 = T.source, T.target
    A1, A2 = m2.subset("abc"), m2.subset("bc")
    c.level(8, T, Level.STRONG)
    c.approx(8, T, "lower", "abc", "abc", "lower(A1)")
    c.approx(8, T, "lower", "bc", "bc", "lower(A2)")
    l1, l2 = lower_approx(T, A1), lower_approx(T, A2)
    rhs = m1.product_mask(l2.mask, l1.mask)
    c.product(8, m1, "lower(A2)Γlower(A1)", rhs, "ac")
    prod = m2.product_mask(A1.mask, A2.mask)
    c.product(8, m2, "A1ΓA2", prod, "ac")
    c.approx(8, T, "lower", m2.names_of(prod), "ac", "lower(A1ΓA2)")
    c.inclusion(8, "lower(A2)Γlower(A1)⊆lower(A1ΓA2)", ElementSet(m1, rhs), lower_approx(T, ElementSet(m2, prod)))
    c.theorem(8, "T5.1.ii", T, (A1, A2))


@dataclass(frozen=True)
class _KindExample:
    """Examples 9-26 share one shape: a subset B of M2 of some kind, its
    approximation, a characteristic product expression and the conclusion."""

    number: int
    map: Callable[[], SetValuedMap]
    level: Level
    side: str
    B: tuple[str, ...]
    kind: IdealKind
    chains: tuple[str, ...]
    expr: str
    claimed_approx: tuple[str, ...]
    claimed_expr: tuple[str, ...]
    claimed_expr_approx: tuple[str, ...]
    theorems: tuple[str, ...]
    prime: bool = False
    prime_conclusion: bool = True
    extra: Callable | None = None
    note: str = ""


def _kind_example(c: _Claims, e: _KindExample):
    T = e.map()
    m1, m2 = T.source, T.target
    n = e.number
    approx = upper_approx if e.side == "upper" else lower_approx
    B = m2.subset(e.B)
    c.level(n, T, e.level, e.note)
    c.kind(n, m2, B, e.kind)
    c.approx(n, T, e.side, e.B, e.claimed_approx, f"{e.side}(B)")
    if e.extra:
        e.extra(c, T, B)
    expr = _chain(m2, B, *e.chains)
    c.product(n, m2, e.expr, expr, e.claimed_expr)
    c.approx(n, T, e.side, m2.names_of(expr), e.claimed_expr_approx, f"{e.side}({e.expr})")
    R = approx(T, B)
    c.inclusion(n, f"{e.side}({e.expr})⊆{e.side}(B)", approx(T, ElementSet(m2, expr)), R)
    c.kind(n, m1, R, e.kind, what=f"{e.side}(B)")
    if e.prime:
        c.kind(n, m2, B, e.kind, prime=True)
        c.kind(n, m1, R, e.kind, prime=True, claimed=e.prime_conclusion, what=f"{e.side}(B)")
    for tid in e.theorems:
        c.theorem(n, tid, T, (B,))


def _ex19_extra(c: _Claims, T, B):
    c.approx(19, T, "lower", B.members, ("x1", "x3"), "lower(B)")


X = ("x1", "x2", "x3", "x4")
_KIND_EXAMPLES = (
    _KindExample(9, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x2", "x3"), K.SUB, ("AA",), "SΓS",
                 tuple("abcd"), tuple("ac"), tuple("ac"), ("T5.2.i",),
                 note="structure_named_as_Example_3_but_labels_are_Example_4"),
    _KindExample(10, catalog.example5_map, Level.STRONG, "lower", ("b", "c"), K.SUB, ("AA",), "SΓS",
                 ("b", "c"), ("b",), ("b",), ("T5.2.ii",)),
    _KindExample(11, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x3", "x4"), K.LEFT, ("MA",), "MΓJ",
                 X, ("x1", "x3"), X, ("T5.3.i",)),
    _KindExample(12, catalog.example5_map, Level.STRONG, "lower", ("b", "c"), K.LEFT, ("MA",), "M2ΓJ",
                 ("c",), ("b", "c"), ("c",), ("T5.3.ii",)),
    _KindExample(13, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x2", "x3"), K.BI, ("AMA",), "BΓMΓB",
                 X, ("x1", "x3"), ("x1", "x3", "x4"), ("T5.4.i", "T5.11.i"), prime=True),
    _KindExample(14, catalog.example5_map, Level.STRONG, "lower", ("b", "c"), K.BI, ("AMA",), "BΓM2ΓB",
                 ("b", "c"), ("b",), ("b",), ("T5.4.ii", "T5.11.ii"), prime=True),
    _KindExample(15, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x3", "x4"), K.INTERIOR, ("MAM",), "MΓJΓM",
                 X, ("x1", "x3"), ("x1", "x2", "x3"), ("T5.5.i", "T5.12.i"), prime=True),
    _KindExample(16, catalog.example5_map, Level.STRONG, "lower", ("b", "c"), K.INTERIOR, ("MAM",), "M2ΓJΓM2",
                 ("b", "c"), ("b", "c"), ("b", "c"), ("T5.5.ii", "T5.12.ii"), prime=True),
    _KindExample(17, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x3", "x4"), K.QUASI, ("AM", "MA"), "QΓM∩MΓQ",
                 X, ("x1", "x3"), ("x1", "x2", "x3"), ("T5.6.i", "T5.13.i"), prime=True),
    _KindExample(18, catalog.example6_map, Level.STRONG, "lower", ("a", "b", "c"), K.QUASI, ("AM", "MA"), "QΓM2∩M2ΓQ",
                 ("b", "c"), ("a", "c"), ("c",), ("T5.6.ii",), prime=True, prime_conclusion=False),
    _KindExample(19, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x3"), K.BI_INTERIOR, ("MAM", "AMA"),
                 "MΓBΓM∩BΓMΓB", X, ("x1", "x3"), X, ("T5.7.i", "T5.14.i"), prime=True, extra=_ex19_extra),
    _KindExample(20, catalog.example6_map, Level.STRONG, "lower", ("a", "b", "c"), K.BI_INTERIOR, ("MAM", "AMA"),
                 "MΓBΓM∩BΓMΓB", ("a", "b", "c"), ("a", "c"), ("a", "c"), ("T5.7.ii", "T5.14.ii"), prime=True),
    _KindExample(21, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x3"), K.LEFT_BI_QUASI, ("MA", "AMA"),
                 "MΓB∩BΓMΓB", X, ("x1", "x3"), X, ("T5.8.i", "T5.15.i"), prime=True),
    _KindExample(22, catalog.example6_map, Level.STRONG, "lower", ("a", "c"), K.BI_QUASI, ("MA", "AMA"),
                 "MΓB∩BΓMΓB", ("a", "c"), ("a", "c"), ("a", "c"), ("C4.ii",), prime=True),
    _KindExample(23, catalog.example4_map, Level.PLAIN, "upper", X, K.LEFT_QUASI_INTERIOR, ("MA", "AMA"),
                 "MΓQ∩QΓMΓQ", X, ("x1", "x3"), X, ("T5.9.i", "T5.16.i"), prime=True),
    _KindExample(24, catalog.example5_map, Level.STRONG, "lower", ("a", "b", "c"), K.QUASI_INTERIOR, ("MAMA",),
                 "M2ΓQΓM2ΓQ", ("a", "b", "c"), ("a", "b", "c"), ("a", "b", "c"), ("C6.ii",), prime=True),
    _KindExample(25, catalog.example4_map, Level.PLAIN, "upper", ("x1", "x2", "x3"), K.BI_QUASI_INTERIOR,
                 ("AMAMA",), "BΓMΓBΓMΓB", X, ("x1", "x3"), X, ("T5.10.i", "T5.17prime.i"), prime=True),
    _KindExample(26, catalog.example6_map, Level.STRONG, "lower", ("a", "c"), K.BI_QUASI_INTERIOR, ("AMAMA",),
                 "BΓMΓBΓMΓB", ("a", "c"), ("a", "c"), ("a", "c"), ("T5.10.ii", "T5.17prime.ii"), prime=True),
)


def audit_paper_examples() -> PaperReport:
    c = _Claims()
    for fn in (_example1, _example2, _example3, _example4, _example5, _example6, _example7, _example8):
        fn(c)
    for e in _KIND_EXAMPLES:
        _kind_example(c, e)
    return PaperReport(tuple(c.out))
