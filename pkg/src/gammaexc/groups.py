"""Window-notation elements of the classical Weyl groups and their statistics.

A permutation of [n] is stored in window (one-line) notation as a tuple
``(pi_1, ..., pi_n)``.  A signed permutation stores a window of signed
integers whose absolute values are a permutation of [n]; the negative entry
-k plays the role of the barred letter.  The type-D group is the subset with
an even number of negative window entries.

Statistics.  Type A: position i is an excedance when pi_i > i; descents and
ascents compare adjacent window entries.  The signed groups follow Brenti's
excedance convention: position i is an excedance of sigma when
sigma_{|sigma_i|} > sigma_i, or when sigma_i = -i; the weak variant replaces
the second clause by sigma_i = i.  Type-B descents prepend sigma_0 = 0.  The
type-B inversion count used for the even/odd split is the pairwise one,

    inv_B = #{i<j: sigma_i > sigma_j} + #{i<j: -sigma_i > sigma_j} + #Negs,

which reproduces the classical base distributions; the alternative count
that adds the (negative) sum of negative letters to the ordinary inversion
number is exposed as ``inv_b_negsum`` for parity comparisons.  Type D drops
the #Negs term:  inv_D = inv + #{i<j: -sigma_i > sigma_j}.

Iterators yield in lexicographic window order and accept an optional first
window entry, so disjoint ranges can be enumerated independently and merged
by any order-insensitive aggregation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations

DEFAULT_BUDGET = 10 ** 9


class WindowError(ValueError):
    """A window fails validation; the message pinpoints the position."""


class InvalidSpec(ValueError):
    """A group specification is internally inconsistent."""


class BudgetExceeded(RuntimeError):
    """Enumerating the requested group would visit too many elements."""


def parse_window(text):
    """Parse comma-separated signed integers, e.g. ``-2,1`` -> (-2, 1)."""
    entries = [piece.strip() for piece in text.split(",")]
    window = []
    for pos, piece in enumerate(entries, start=1):
        if not piece:
            raise WindowError(f"position {pos}: empty entry")
        try:
            window.append(int(piece))
        except ValueError:
            raise WindowError(f"position {pos}: {piece!r} is not an integer") from None
    return tuple(window)


def _validate_perm(window):
    n = len(window)
    seen = set()
    for pos, v in enumerate(window, start=1):
        if not 1 <= v <= n:
            raise WindowError(f"position {pos}: value {v} outside 1..{n}")
        if v in seen:
            raise WindowError(f"position {pos}: value {v} repeated")
        seen.add(v)


def _validate_signed(window):
    n = len(window)
    seen = set()
    for pos, v in enumerate(window, start=1):
        if v == 0:
            raise WindowError(f"position {pos}: zero is not a letter")
        if not 1 <= abs(v) <= n:
            raise WindowError(f"position {pos}: |{v}| outside 1..{n}")
        if abs(v) in seen:
            raise WindowError(f"position {pos}: letter {abs(v)} repeated")
        seen.add(abs(v))


class Perm:
    """A permutation of [n] in window notation."""

    __slots__ = ("window",)

    def __init__(self, window):
        window = tuple(window)
        _validate_perm(window)
        object.__setattr__(self, "window", window)

    @classmethod
    def _trusted(cls, window):
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @classmethod
    def parse(cls, text):
        return cls(parse_window(text))

    @classmethod
    def identity(cls, n):
        return cls._trusted(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.window == other.window

    def __hash__(self):
        return hash(("Perm", self.window))

    def __str__(self):
        return ",".join(str(v) for v in self.window)

    def __repr__(self):
        return f"Perm({self})"

    def __setattr__(self, *args):
        raise AttributeError("Perm is immutable")


class SignedPerm:
    """A signed permutation (hyperoctahedral element) in window notation."""

    __slots__ = ("window",)

    def __init__(self, window):
        window = tuple(window)
        _validate_signed(window)
        object.__setattr__(self, "window", window)

    @classmethod
    def _trusted(cls, window):
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @classmethod
    def parse(cls, text):
        return cls(parse_window(text))

    @classmethod
    def identity(cls, n):
        return cls._trusted(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.window == other.window

    def __hash__(self):
        return hash(("SignedPerm", self.window))

    def __str__(self):
        return ",".join(str(v) for v in self.window)

    def __repr__(self):
        return f"SignedPerm({self})"

    def __setattr__(self, *args):
        raise AttributeError("SignedPerm is immutable")


def _window(x):
    return x.window if isinstance(x, (Perm, SignedPerm)) else tuple(x)


# -- type A statistics -------------------------------------------------------


def exc(p):
    w = _window(p)
    return sum(1 for i, v in enumerate(w, start=1) if v > i)


def nexc(p):
    w = _window(p)
    return sum(1 for i, v in enumerate(w, start=1) if v <= i)


def des(p):
    w = _window(p)
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def asc(p):
    w = _window(p)
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def inv(p):
    w = _window(p)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def fixed_points(p):
    w = _window(p)
    return sum(1 for i, v in enumerate(w, start=1) if v == i)


def cyc(p):
    w = _window(p)
    seen = [False] * len(w)
    count = 0
    for start in range(len(w)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
    return count


def sign(p):
    return -1 if inv(p) % 2 else 1


def pos_n(p):
    """Position of the largest letter n in the window (1-based)."""
    w = _window(p)
    return w.index(len(w)) + 1 if w else None


@dataclass(frozen=True)
class AStats:
    exc: int
    nexc: int
    des: int
    asc: int
    inv: int
    cyc: int
    fixed_points: int
    sign: int
    pos_n: int | None


def stats_a(p):
    """All type-A statistics of a permutation at once."""
    return AStats(exc(p), nexc(p), des(p), asc(p), inv(p), cyc(p),
                  fixed_points(p), sign(p), pos_n(p))


# -- signed statistics (types B and D) ----------------------------------------


def negs(p):
    w = _window(p)
    return sum(1 for v in w if v < 0)


def exc_b(p):
    w = _window(p)
    count = 0
    for i, v in enumerate(w, start=1):
        if v == -i:
            count += 1
        elif w[abs(v) - 1] > v:
            count += 1
    return count


def nexc_b(p):
    return len(_window(p)) - exc_b(p)


def wkexc_b(p):
    w = _window(p)
    count = 0
    for i, v in enumerate(w, start=1):
        if w[abs(v) - 1] > v:
            count += 1
        elif v == i:
            count += 1
    return count


def des_b(p):
    w = (0,) + _window(p)
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def asc_b(p):
    w = (0,) + _window(p)
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def inv_b(p):
    w = _window(p)
    n = len(w)
    count = sum(1 for v in w if v < 0)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                count += 1
            if -w[i] > w[j]:
                count += 1
    return count


def inv_b_negsum(p):
    """Alternative type-B inversion count: inv plus the sum of negative letters."""
    w = _window(p)
    return inv(w) + sum(v for v in w if v < 0)


def sign_b(p):
    return -1 if inv_b(p) % 2 else 1


@dataclass(frozen=True)
class BStats:
    exc_b: int
    nexc_b: int
    wkexc_b: int
    des_b: int
    asc_b: int
    inv_b: int
    negs: int
    sign_b: int


def stats_b(p):
    """All type-B statistics of a signed permutation at once."""
    return BStats(exc_b(p), nexc_b(p), wkexc_b(p), des_b(p), asc_b(p),
                  inv_b(p), negs(p), sign_b(p))


exc_d = exc_b
nexc_d = nexc_b


def wkexc_d(p):
    w = _window(p)
    count = 0
    for i, v in enumerate(w, start=1):
        if w[abs(v) - 1] > v:
            count += 1
        elif v == i:
            count += 1
    return count


def inv_d(p):
    w = _window(p)
    n = len(w)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                count += 1
            if -w[i] > w[j]:
                count += 1
    return count


def sign_d(p):
    return -1 if inv_d(p) % 2 else 1


@dataclass(frozen=True)
class DStats:
    exc_d: int
    nexc_d: int
    wkexc_d: int
    inv_d: int
    sign_d: int


def stats_d(p):
    """All type-D statistics (total functions on any signed permutation)."""
    return DStats(exc_d(p), nexc_d(p), wkexc_d(p), inv_d(p), sign_d(p))


# -- cycle types and partitions ------------------------------------------------


@dataclass(frozen=True)
class CycleType:
    """An integer partition recording cycle lengths, parts weakly decreasing."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise InvalidSpec(f"parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return sum(self.parts)

    def multiplicity(self, i):
        return sum(1 for p in self.parts if p == i)

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @property
    def fixed_points(self):
        return self.multiplicity(1)

    @property
    def sign(self):
        return -1 if (self.n - len(self.parts)) % 2 else 1

    def class_size(self):
        """|C_lambda| = n! / prod(i^m_i * m_i!)."""
        size = math.factorial(self.n)
        for i, m in self.multiplicities().items():
            size //= i ** m * math.factorial(m)
        return size

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def __iter__(self):
        return iter(self.parts)


def cycle_type(p):
    """Cycle type of a permutation; its sign equals the permutation's sign."""
    w = _window(p)
    seen = [False] * len(w)
    parts = []
    for start in range(len(w)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        parts.append(length)
    return CycleType(tuple(parts))


def _parts_desc(remaining, max_part, min_part):
    if remaining == 0:
        yield ()
        return
    top = min(remaining, max_part)
    for p in range(top, min_part - 1, -1):
        for rest in _parts_desc(remaining - p, p, min_part):
            yield (p,) + rest


def partitions(n, no_part_1=False, m1=None, sign=None):
    """Partitions of n as CycleTypes, optionally filtered.

    ``no_part_1`` excludes fixed points entirely; ``m1=i`` demands exactly i
    parts equal to 1; ``sign`` (+1/-1) keeps only partitions whose conjugacy
    class has that sign.  Filters combine.
    """
    if n < 0:
        raise InvalidSpec("n must be non-negative")
    if m1 is not None:
        if m1 < 0 or m1 > n:
            raise InvalidSpec(f"m1={m1} outside 0..{n}")
        if no_part_1 and m1 != 0:
            raise InvalidSpec("no_part_1 contradicts m1 != 0")
        for tail in _parts_desc(n - m1, n - m1, 2):
            lam = CycleType(tail + (1,) * m1)
            if sign is None or lam.sign == sign:
                yield lam
        return
    min_part = 2 if no_part_1 else 1
    for parts in _parts_desc(n, n, min_part):
        lam = CycleType(parts)
        if sign is None or lam.sign == sign:
            yield lam


# -- group enumeration ---------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """One of the summation domains: a group, coset side, or refined subset.

    kind: "S" (permutations), "B" (signed), "D" (even negatives),
    "B-D" (odd negatives).  parity restricts to even/odd length elements
    (inv for S, inv_B for B, inv_D for D; not available for B-D).  The
    remaining filters apply to kind "S" only.
    """

    kind: str
    n: int
    parity: str = "all"
    pos_n: int | None = None
    fixed_points: int | None = None
    cycle_type: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("S", "B", "D", "B-D"):
            raise InvalidSpec(f"unknown kind {self.kind!r}")
        if self.n < 0:
            raise InvalidSpec("n must be non-negative")
        if self.parity not in ("all", "even", "odd"):
            raise InvalidSpec(f"parity must be all/even/odd, got {self.parity!r}")
        if self.kind == "B-D" and self.parity != "all":
            raise InvalidSpec("B-D carries no even/odd length split here")
        if self.kind != "S" and (self.pos_n is not None
                                 or self.fixed_points is not None
                                 or self.cycle_type is not None):
            raise InvalidSpec("pos_n/fixed_points/cycle_type apply to kind S only")
        if self.pos_n is not None and not 1 <= self.pos_n <= self.n:
            raise InvalidSpec(f"pos_n={self.pos_n} outside 1..{self.n}")
        if self.fixed_points is not None and not 0 <= self.fixed_points <= self.n:
            raise InvalidSpec(f"fixed_points={self.fixed_points} outside 0..{self.n}")
        if self.cycle_type is not None:
            lam = CycleType(tuple(self.cycle_type))
            if lam.n != self.n:
                raise InvalidSpec(f"{lam} is not a partition of {self.n}")
            object.__setattr__(self, "cycle_type", lam.parts)

    def __str__(self):
        tags = [f"{self.kind}_{self.n}"]
        if self.parity != "all":
            tags.append("+" if self.parity == "even" else "-")
        if self.pos_n is not None:
            tags.append(f"pos_n={self.pos_n}")
        if self.fixed_points is not None:
            tags.append(f"fix={self.fixed_points}")
        if self.cycle_type is not None:
            tags.append("type=" + ",".join(map(str, self.cycle_type)))
        return " ".join(tags)


def enumeration_cost(spec):
    """Number of windows the enumerator must visit for this spec."""
    fact = math.factorial(spec.n)
    if spec.kind == "S":
        if spec.pos_n is not None and spec.n >= 1:
            return math.factorial(spec.n - 1)
        return fact
    if spec.kind == "B":
        return (2 ** spec.n) * fact
    # D and B-D prune the final sign, halving the tree's leaves
    return (2 ** max(spec.n - 1, 0)) * fact


def _perm_windows(n, first=None):
    if n == 0:
        if first is None:
            yield ()
        return
    if first is None:
        yield from _itertools_permutations(range(1, n + 1))
        return
    if not 1 <= first <= n:
        return
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in _itertools_permutations(rest):
        yield (first,) + tail


def _perm_windows_pos_n(n, r, first=None):
    """Windows of S_n with letter n at position r, in lexicographic order."""
    if n == 0:
        return
    for reduced in _perm_windows(n - 1, first=None if r == 1 else first):
        w = reduced[:r - 1] + (n,) + reduced[r - 1:]
        if first is not None and w[0] != first:
            continue
        yield w


def _signed_windows(letters, negs_parity=None, first=None):
    """Signed windows over ``letters`` in lexicographic order.

    ``negs_parity`` (0 or 1) prunes the last sign choice so only windows with
    that parity of negative entries are built.
    """
    n = len(letters)
    if n == 0:
        if first is None and negs_parity in (None, 0):
            yield ()
        return

    def rec(prefix, remaining, neg_count):
        depth = len(prefix)
        if depth == n:
            # the depth n-1 prune is skipped when the first entry was fixed
            # externally and n == 1, so re-check the parity here
            if negs_parity is None or neg_count % 2 == negs_parity:
                yield prefix
            return
        candidates = sorted([-a for a in remaining] + list(remaining))
        if negs_parity is not None and depth == n - 1:
            candidates = [
                v for v in candidates
                if (neg_count + (1 if v < 0 else 0)) % 2 == negs_parity
            ]
        for v in candidates:
            yield from rec(prefix + (v,), remaining - {abs(v)},
                           neg_count + (1 if v < 0 else 0))

    all_letters = frozenset(letters)
    if first is None:
        yield from rec((), all_letters, 0)
    else:
        if abs(first) not in all_letters:
            return
        yield from rec((first,), all_letters - {abs(first)},
                       1 if first < 0 else 0)


def first_entries(spec):
    """The possible first window entries, for partitioned enumeration."""
    if spec.n == 0:
        return ()
    if spec.kind == "S":
        return tuple(range(1, spec.n + 1))
    return tuple(sorted(list(range(-spec.n, 0)) + list(range(1, spec.n + 1))))


def iterate(spec, budget=DEFAULT_BUDGET, first=None):
    """Yield each element of the spec's domain exactly once, in window order.

    ``first`` restricts to windows with that first entry, so the partitions
    over ``first_entries(spec)`` are disjoint and cover the stream.  Raises
    BudgetExceeded before any work when the ambient scan is too large.
    """
    if budget is not None and enumeration_cost(spec) > budget:
        raise BudgetExceeded(
            f"enumerating {spec} visits {enumeration_cost(spec)} windows, "
            f"over the budget of {budget}"
        )
    if spec.kind == "S":
        if spec.pos_n is not None:
            stream = _perm_windows_pos_n(spec.n, spec.pos_n, first=first)
        else:
            stream = _perm_windows(spec.n, first=first)
        for w in stream:
            if spec.fixed_points is not None:
                if sum(1 for i, v in enumerate(w, 1) if v == i) != spec.fixed_points:
                    continue
            if spec.cycle_type is not None and cycle_type(w).parts != spec.cycle_type:
                continue
            if spec.parity != "all":
                if inv(w) % 2 != (0 if spec.parity == "even" else 1):
                    continue
            yield Perm._trusted(w)
        return

    letters = tuple(range(1, spec.n + 1))
    if spec.kind == "B":
        stream = _signed_windows(letters, first=first)
    elif spec.kind == "D":
        stream = _signed_windows(letters, negs_parity=0, first=first)
    else:  # B-D
        stream = _signed_windows(letters, negs_parity=1, first=first)
    length_stat = inv_d if spec.kind == "D" else inv_b
    for w in stream:
        if spec.parity != "all":
            if length_stat(w) % 2 != (0 if spec.parity == "even" else 1):
                continue
        yield SignedPerm._trusted(w)


def cardinality(spec, budget=DEFAULT_BUDGET):
    """Count the elements of the spec's domain by enumeration."""
    return sum(1 for _ in iterate(spec, budget=budget))
