"""Brute-force generating functions over the classical Weyl groups.

``dist_poly`` sums a monomial weight over any enumerable domain and is the
ground truth that every closed form and recurrence in this library is tested
against.  A weight assigns each polynomial variable a statistic and an
integer offset (the type-A families use s^(nexc-1) while the signed families
use s^nexc; the offset makes that visible in one place), plus an optional
sign statistic contributing (-1)^stat.

``family_poly`` names the standard distributions: type-A/B/D excedance
polynomials and their even/odd-length halves, descent polynomials, signed
sums, derangement and conjugacy-class restrictions, and the q-refinements.
The derangement and conjugacy-class families are univariate in t, matching
their closed product forms; bivariate variants remain one ``dist_poly`` call
away.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .groups import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    GroupSpec,
    InvalidSpec,
    asc,
    asc_b,
    cyc,
    des,
    des_b,
    exc,
    exc_b,
    exc_d,
    first_entries,
    fixed_points,
    inv,
    inv_b,
    inv_d,
    iterate,
    negs,
    nexc,
    nexc_b,
    nexc_d,
    pos_n,
    wkexc_b,
    wkexc_d,
)
from .poly import Poly, _VAR_RANK


class UndefinedStatistic(ValueError):
    """The weight references a statistic the domain's elements do not carry."""


class UnsupportedClass(ValueError):
    """The family does not define the requested even/odd restriction."""


class NonIncreasingLetters(ValueError):
    """Letter sets must be strictly increasing positive integers."""


A_STATISTICS = {
    "exc": exc,
    "nexc": nexc,
    "des": des,
    "asc": asc,
    "inv": inv,
    "cyc": cyc,
    "fixed_points": fixed_points,
    "pos_n": pos_n,
}

SIGNED_STATISTICS = {
    "exc_b": exc_b,
    "nexc_b": nexc_b,
    "wkexc_b": wkexc_b,
    "des_b": des_b,
    "asc_b": asc_b,
    "inv_b": inv_b,
    "negs": negs,
    "exc_d": exc_d,
    "nexc_d": nexc_d,
    "wkexc_d": wkexc_d,
    "inv_d": inv_d,
}

SIGN_STATISTICS = {"inv": inv, "inv_b": inv_b, "inv_d": inv_d}


@dataclass(frozen=True)
class WeightSpec:
    """Monomial weight: (variable, statistic, offset) triples plus a sign stat."""

    exponents: tuple
    sign_stat: str | None = None

    def __post_init__(self):
        exps = tuple((v, stat, int(off)) for v, stat, off in self.exponents)
        names = [v for v, _, _ in exps]
        if len(set(names)) != len(names):
            raise InvalidSpec(f"variable assigned twice in {exps}")
        for v, _, _ in exps:
            if v not in _VAR_RANK:
                raise InvalidSpec(f"unknown variable {v!r}")
        exps = tuple(sorted(exps, key=lambda e: _VAR_RANK[e[0]]))
        object.__setattr__(self, "exponents", exps)
        if self.sign_stat is not None and self.sign_stat not in SIGN_STATISTICS:
            raise InvalidSpec(f"sign statistic must be one of {sorted(SIGN_STATISTICS)}")

    @property
    def variables(self):
        return tuple(v for v, _, _ in self.exponents)


def _statistics_table(spec):
    return A_STATISTICS if spec.kind == "S" else SIGNED_STATISTICS


def _resolve(weight, spec):
    table = _statistics_table(spec)
    funcs = []
    for v, stat, off in weight.exponents:
        if stat not in table:
            raise UndefinedStatistic(
                f"statistic {stat!r} is not defined on {spec.kind}-type elements"
            )
        funcs.append((table[stat], off))
    sign_func = None
    if weight.sign_stat is not None:
        if weight.sign_stat not in table:
            raise UndefinedStatistic(
                f"sign statistic {weight.sign_stat!r} is not defined on "
                f"{spec.kind}-type elements"
            )
        sign_func = table[weight.sign_stat]
    return funcs, sign_func


def _accumulate(spec, funcs, sign_func, budget, first):
    acc = {}
    for element in iterate(spec, budget=budget, first=first):
        w = element.window
        key = []
        for func, off in funcs:
            e = func(w) + off
            if e < 0:
                raise InvalidSpec(
                    f"offset drives exponent negative on {element} "
                    f"(statistic value {func(w)}, offset {off})"
                )
            key.append(e)
        value = 1 if sign_func is None else (1 if sign_func(w) % 2 == 0 else -1)
        key = tuple(key)
        acc[key] = acc.get(key, 0) + value
    return acc


def dist_poly(spec, weight, *, budget=DEFAULT_BUDGET, jobs=1):
    """Exact sum of the weight monomial over the domain's stream.

    With ``jobs > 1`` the stream is partitioned by first window entry and the
    partial polynomials are added; addition is commutative, so the result is
    identical to the sequential scan.
    """
    funcs, sign_func = _resolve(weight, spec)
    if jobs > 1 and spec.n > 1:
        # budget is charged once up front for the whole stream
        from .groups import enumeration_cost

        if budget is not None and enumeration_cost(spec) > budget:
            raise BudgetExceeded(
                f"enumerating {spec} visits {enumeration_cost(spec)} windows, "
                f"over the budget of {budget}"
            )
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda v: _accumulate(spec, funcs, sign_func, None, v),
                first_entries(spec),
            )
            acc = {}
            for part in parts:
                for key, value in part.items():
                    acc[key] = acc.get(key, 0) + value
    else:
        acc = _accumulate(spec, funcs, sign_func, budget, None)
    return Poly(weight.variables, acc)


# -- named families ------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A named distribution: family name, rank n, class in {all, plus, minus}.

    ``fixed`` selects permutations with exactly that many fixed points (the
    derangement families), ``lam`` a conjugacy class, ``stat`` the refining
    statistic of the q-families.
    """

    family: str
    n: int
    cls: str = "all"
    fixed: int | None = None
    lam: tuple | None = None
    stat: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.lower())
        if self.cls not in ("all", "plus", "minus"):
            raise InvalidSpec(f"class must be all/plus/minus, got {self.cls!r}")
        if self.lam is not None:
            object.__setattr__(self, "lam", tuple(self.lam))

    def __str__(self):
        bits = [self.family, f"n={self.n}"]
        if self.cls != "all":
            bits.append(self.cls)
        if self.fixed is not None:
            bits.append(f"fixed={self.fixed}")
        if self.lam is not None:
            bits.append("lambda=" + ",".join(map(str, self.lam)))
        if self.stat is not None:
            bits.append(f"stat={self.stat}")
        return " ".join(bits)


_PARITY = {"all": "all", "plus": "even", "minus": "odd"}

AEXC_WEIGHT = WeightSpec((("t", "exc", 0), ("s", "nexc", -1)))
ADES_WEIGHT = WeightSpec((("t", "des", 0), ("s", "asc", 0)))
BEXC_WEIGHT = WeightSpec((("t", "exc_b", 0), ("s", "nexc_b", 0)))
BDES_WEIGHT = WeightSpec((("t", "des_b", 0), ("s", "asc_b", 0)))
DEXC_WEIGHT = WeightSpec((("t", "exc_d", 0), ("s", "nexc_d", 0)))
T_EXC_WEIGHT = WeightSpec((("t", "exc", 0),))

FAMILIES = (
    "a_des", "aexc", "aderexc", "conjexc",
    "b_des", "bexc", "dexc", "bdexc",
    "sgn_aexc", "sgn_bexc", "sgn_dexc", "sgnb_des_u",
    "qrefined",
)


def family_domain(fs):
    """The (GroupSpec, WeightSpec) pair a family sums over."""
    family, n, cls = fs.family, fs.n, fs.cls

    def need_all():
        if cls != "all":
            raise UnsupportedClass(f"{family} has no plus/minus split")

    if family == "a_des":
        need_all()
        return GroupSpec("S", n), ADES_WEIGHT
    if family == "aexc":
        return GroupSpec("S", n, parity=_PARITY[cls]), AEXC_WEIGHT
    if family == "aderexc":
        fixed = 0 if fs.fixed is None else fs.fixed
        spec = GroupSpec("S", n, parity=_PARITY[cls], fixed_points=fixed)
        return spec, T_EXC_WEIGHT
    if family == "conjexc":
        need_all()
        if fs.lam is None:
            raise InvalidSpec("conjexc needs a cycle type")
        return GroupSpec("S", n, cycle_type=fs.lam), T_EXC_WEIGHT
    if family == "b_des":
        return GroupSpec("B", n, parity=_PARITY[cls]), BDES_WEIGHT
    if family == "bexc":
        return GroupSpec("B", n, parity=_PARITY[cls]), BEXC_WEIGHT
    if family == "dexc":
        return GroupSpec("D", n, parity=_PARITY[cls]), DEXC_WEIGHT
    if family == "bdexc":
        need_all()
        return GroupSpec("B-D", n), DEXC_WEIGHT
    if family == "sgn_aexc":
        need_all()
        return GroupSpec("S", n), WeightSpec(AEXC_WEIGHT.exponents, sign_stat="inv")
    if family == "sgn_bexc":
        need_all()
        return GroupSpec("B", n), WeightSpec(BEXC_WEIGHT.exponents, sign_stat="inv_b")
    if family == "sgn_dexc":
        need_all()
        return GroupSpec("D", n), WeightSpec(DEXC_WEIGHT.exponents, sign_stat="inv_d")
    if family == "qrefined":
        if fs.stat not in ("inv", "cyc"):
            raise InvalidSpec("qrefined needs stat inv or cyc")
        spec = GroupSpec("S", n, parity=_PARITY[cls], fixed_points=0)
        return spec, WeightSpec((("t", "exc", 0), ("q", fs.stat, 0)))
    raise InvalidSpec(f"unknown family {fs.family!r}; known: {FAMILIES}")


def family_poly(fs, *, budget=DEFAULT_BUDGET, jobs=1):
    """Enumerate the named family's distribution polynomial."""
    if fs.family == "sgnb_des_u":
        if fs.cls != "all":
            raise UnsupportedClass("sgnb_des_u has no plus/minus split")
        return sgnb_des_u(fs.n, budget=budget)
    spec, weight = family_domain(fs)
    return dist_poly(spec, weight, budget=budget, jobs=jobs)


def q_refined(n, stat, cls="all", *, budget=DEFAULT_BUDGET):
    """Sum q^stat t^exc over the even/odd/all derangements of [n]."""
    return family_poly(FamilySpec("qrefined", n, cls, stat=stat), budget=budget)


def sgnb_des_u(n, letters=None, *, positions="all", budget=DEFAULT_BUDGET):
    """Signed descent-ascent-position sum over the signed group on ``letters``.

    Sums (-1)^inv_B t^des_B s^asc_B u^pos over all signed windows, where pos
    is the position of the largest letter (ignoring its sign).  ``positions``
    may restrict the sum to windows whose largest letter sits at the last
    position ("max_last") or anywhere else ("max_not_last").
    """
    from .groups import _signed_windows
    import math

    if letters is None:
        letters = tuple(range(1, n + 1))
    letters = tuple(letters)
    if len(letters) != n:
        raise NonIncreasingLetters(f"expected {n} letters, got {len(letters)}")
    if any(a <= 0 for a in letters) or any(
        a >= b for a, b in zip(letters, letters[1:])
    ):
        raise NonIncreasingLetters(
            f"letters must be strictly increasing positive integers: {letters}"
        )
    if positions not in ("all", "max_last", "max_not_last"):
        raise InvalidSpec("positions must be all/max_last/max_not_last")
    cost = (2 ** n) * math.factorial(n)
    if budget is not None and cost > budget:
        raise BudgetExceeded(f"{cost} windows over budget {budget}")

    biggest = letters[-1] if letters else None
    acc = {}
    for w in _signed_windows(letters):
        pos = next(i for i, v in enumerate(w, start=1) if abs(v) == biggest) \
            if w else 0
        if positions == "max_last" and pos != n:
            continue
        if positions == "max_not_last" and pos == n:
            continue
        full = (0,) + w
        d = sum(1 for i in range(n) if full[i] > full[i + 1])
        a = n - d
        value = -1 if inv_b(w) % 2 else 1
        key = (a, d, pos)
        acc[key] = acc.get(key, 0) + value
    return Poly(("s", "t", "u"), acc)
