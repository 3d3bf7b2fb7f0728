"""Small fixture structures and maps used by searches, tests and the example audit."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import GammaSemigroup, Universe
from .rough import SetValuedMap

ALPHA = ("alpha",)


def singleton() -> GammaSemigroup:
    return GammaSemigroup("One", ("e",), ALPHA, (0,))


def _assoc_order2(gammas):
    """Every Gamma-semigroup on {1, 2} with the given Gamma, in table-code order."""
    n, m = 2, len(gammas)
    out = []
    for flat in itertools.product(range(n), repeat=m * n * n):
        S = GammaSemigroup("probe", ("1", "2"), gammas, flat, unchecked=True)
        if S.is_valid:
            code = "".join(str(v + 1) for v in flat)
            out.append(GammaSemigroup(f"O2.{code}", ("1", "2"), gammas, flat))
    return out


def order2_structures() -> list[GammaSemigroup]:
    """All eight associative one-gamma tables on two elements."""
    return _assoc_order2(ALPHA)


def order2_two_gamma_structures() -> list[GammaSemigroup]:
    return _assoc_order2(("alpha", "beta"))


def cyclic3() -> GammaSemigroup:
    return GammaSemigroup("Z3", ("0", "1", "2"), ALPHA, tuple((a + b) % 3 for a in range(3) for b in range(3)))


def chain3() -> GammaSemigroup:
    return GammaSemigroup("Min3", ("0", "1", "2"), ALPHA, tuple(min(a, b) for a in range(3) for b in range(3)))


def example3() -> GammaSemigroup:
    return GammaSemigroup.from_tables("M", "abc", {"alpha": ["abc", "bbb", "cbb"]})


def example4() -> GammaSemigroup:
    x1, x2, x3, x4 = "x1", "x2", "x3", "x4"
    return GammaSemigroup.from_tables(
        "M", (x1, x2, x3, x4),
        {"alpha": [[x1, x3, x3, x1], [x3, x1, x1, x3], [x3, x1, x1, x3], [x1, x3, x3, x1]]},
    )


def example2(unchecked: bool = True) -> GammaSemigroup:
    rows = {
        "alpha": ["1331", "3113", "3113", "1333"],
        "beta": ["3113", "1331", "1331", "3113"],
    }
    return GammaSemigroup.from_tables("M", "1234", rows, unchecked=unchecked)


def example5() -> tuple[GammaSemigroup, GammaSemigroup]:
    m1 = GammaSemigroup.from_tables("M1", "12", {"alpha": ["11", "12"]})
    m2 = GammaSemigroup.from_tables("M2", "abc", {"alpha": ["abc", "bbb", "cbb"]})
    return m1, m2


def example6(unchecked: bool = True) -> tuple[GammaSemigroup, GammaSemigroup]:
    m1 = GammaSemigroup.from_tables("M1", "xyz", {"alpha": ["xxx", "zzz", "xxz"]}, unchecked=unchecked)
    m2 = GammaSemigroup.from_tables("M2", "abc", {"alpha": ["aac", "ccc", "aaa"]}, unchecked=unchecked)
    return m1, m2


def example1_map() -> SetValuedMap:
    X = Universe("X", ("1", "2", "3", "4"))
    Y = Universe("Y", ("a", "b", "c"))
    return SetValuedMap.from_images("T", X, Y, {"1": "b", "2": "ac", "3": "b", "4": "abc"})


def example3_map() -> SetValuedMap:
    M = example3()
    return SetValuedMap.from_images("T", M, M, {"a": "bc", "b": "abc", "c": "b"})


def example4_map() -> SetValuedMap:
    M = example4()
    return SetValuedMap.from_images(
        "T", M, M,
        {"x1": ("x1", "x2", "x3", "x4"), "x2": ("x1", "x3"), "x3": ("x3",), "x4": ("x4",)},
    )


def example5_map() -> SetValuedMap:
    m1, m2 = example5()
    return SetValuedMap.from_images("T", m1, m2, {"1": "c", "2": "a"})


def example6_map() -> SetValuedMap:
    """The map as completed by the later examples: T(x) = T(z) = {c}, T(y) = {b, c}."""
    m1, m2 = example6()
    return SetValuedMap.from_images("T", m1, m2, {"x": "c", "y": "bc", "z": "c"})


@lru_cache(maxsize=None)
def _fixtures() -> tuple[GammaSemigroup, ...]:
    return (
        singleton(),
        *order2_structures(),
        *order2_two_gamma_structures(),
        example3(),
        cyclic3(),
        chain3(),
        example4(),
    )


def fixture_structures(max_order: int = 4) -> list[GammaSemigroup]:
    """Validated fixtures up to ``max_order``, smallest first."""
    return [S for S in _fixtures() if S.order <= max_order]


def fixture_maps() -> list[SetValuedMap]:
    """The worked-example maps with a valid or plain source."""
    return [example1_map(), example3_map(), example4_map(), example5_map()]
