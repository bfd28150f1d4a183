"""Exact sparse polynomial arithmetic and the gamma-basis toolkit.

A polynomial is an immutable pair: an ordered tuple of variable names drawn
from the fixed alphabet ``s, t, u, q``, and a map from exponent vectors (one
non-negative integer per variable) to nonzero integer coefficients.  All
arithmetic is exact over Python ints, so nothing overflows.  The zero
polynomial has an empty term map.

    s**2 + 2*s*t + t**2   ->   vars ("s", "t"), terms {(2,0):1, (1,1):2, (0,2):1}

Binary operations align variable lists automatically (missing variables get
exponent zero), so ``s + q`` is fine; the merged list keeps the canonical
s < t < u < q order.

Gamma machinery conventions.  A univariate f(t) with support in [r, n] is
*palindromic* when its coefficient sequence is symmetric about (n+r)/2; it
then expands uniquely in the basis t^(r+i) (1+t)^(n-r-2i), and the expansion
coordinates are its gamma vector.  A homogeneous bivariate f(s,t) of total
degree n is palindromic when its t-coefficient sequence a_0..a_n satisfies
a_i = a_{n-i}; it expands in (st)^(r+i) (s+t)^(n-2(r+i)).  Restricting s=1
turns the bivariate expansion into the univariate one with top degree n-r,
so both views share one peel algorithm.  The q-coefficient mode treats a
polynomial in (q, t) as a t-polynomial whose coefficients live in Z[q];
palindromicity and the gamma vector are then coefficient-polynomial valued.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

VARIABLES = ("s", "t", "u", "q")
_VAR_RANK = {v: i for i, v in enumerate(VARIABLES)}

UNIVARIATE = "univariate_t"
BIVARIATE = "bivariate_st"
Q_COEFFICIENTS = "q_coefficients"
GAMMA_MODES = (UNIVARIATE, BIVARIATE, Q_COEFFICIENTS)


class UnknownVariable(ValueError):
    """A referenced variable is not declared in the polynomial."""


class NotHomogeneous(ValueError):
    """Bivariate gamma operations need all terms to share one total degree."""


class ZeroPolynomial(ValueError):
    """The zero polynomial has no support, hence no palindrome data."""


class EvenLength(ValueError):
    """Odd-length splitting applied to an even-length polynomial."""


class NotGammaPositive(ValueError):
    """An operation required a non-negative gamma vector."""


class OddCoefficient(ValueError):
    """An exact division by 2 met an odd coefficient (signals a bug upstream)."""


class NotPalindromic(ValueError):
    """Coefficient sequence is not symmetric; carries the first violated pair."""

    def __init__(self, low_index, high_index, low, high):
        self.low_index = low_index
        self.high_index = high_index
        self.low = low
        self.high = high
        super().__init__(
            f"coefficient of t^{low_index} is {low!s} but coefficient of "
            f"t^{high_index} is {high!s}"
        )


def _check_vars(vars):
    vars = tuple(vars)
    for v in vars:
        if v not in _VAR_RANK:
            raise UnknownVariable(f"unknown variable {v!r}; allowed: {VARIABLES}")
    if list(vars) != sorted(vars, key=_VAR_RANK.__getitem__):
        raise ValueError(f"variables must be in canonical s,t,u,q order, got {vars}")
    if len(set(vars)) != len(vars):
        raise ValueError(f"duplicate variable in {vars}")
    return vars


class Poly:
    """Sparse exact polynomial over the integers.

    Instances are immutable and hashable; equality is mathematical (variable
    lists are aligned before comparison, so ``s`` built over ("s",) equals
    ``s`` built over ("s","t")).
    """

    __slots__ = ("_vars", "_terms", "_key")

    def __init__(self, vars=(), terms=None):
        self._vars = _check_vars(vars)
        clean = {}
        if terms:
            width = len(self._vars)
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != width:
                    raise ValueError(
                        f"exponent vector {exp} does not match variables {self._vars}"
                    )
                if any(e < 0 or not isinstance(e, int) for e in exp):
                    raise ValueError(f"exponents must be non-negative ints: {exp}")
                if coeff:
                    clean[exp] = coeff
        self._terms = clean
        self._key = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {})

    @classmethod
    def const(cls, value, vars=()):
        vars = _check_vars(vars)
        if value == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): int(value)})

    @classmethod
    def variable(cls, name):
        if name not in _VAR_RANK:
            raise UnknownVariable(f"unknown variable {name!r}")
        return cls((name,), {(1,): 1})

    @classmethod
    def gens(cls, *names):
        """Convenience: ``s, t = Poly.gens("s", "t")``."""
        return tuple(cls.variable(n) for n in names)

    @classmethod
    def from_terms(cls, vars, terms):
        return cls(vars, terms)

    # -- basic queries -----------------------------------------------------

    @property
    def vars(self):
        return self._vars

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _canonical_key(self):
        if self._key is None:
            used = [i for i, _ in enumerate(self._vars)
                    if any(exp[i] for exp in self._terms)]
            names = tuple(self._vars[i] for i in used)
            items = tuple(sorted(
                (tuple(exp[i] for i in used), coeff)
                for exp, coeff in self._terms.items()
            ))
            self._key = (names, items)
        return self._key

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._canonical_key() == other._canonical_key()

    def __hash__(self):
        return hash(self._canonical_key())

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other, self._vars)
        return None

    def _aligned(self, other):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        merged = tuple(sorted(set(self._vars) | set(other._vars),
                              key=_VAR_RANK.__getitem__))

        def remap(poly):
            idx = [poly._vars.index(v) if v in poly._vars else None for v in merged]
            out = {}
            for exp, coeff in poly._terms.items():
                out[tuple(0 if i is None else exp[i] for i in idx)] = coeff
            return out

        return merged, remap(self), remap(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for exp, coeff in b.items():
            out[exp] = out.get(exp, 0) + coeff
        return Poly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return Poly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and substitution ------------------------------------------

    def substitute_one(self, var):
        """Set ``var`` to 1, summing coefficients of like powers exactly."""
        if var not in self._vars:
            raise UnknownVariable(f"{var!r} not declared in {self._vars}")
        i = self._vars.index(var)
        vars = self._vars[:i] + self._vars[i + 1:]
        out = {}
        for exp, coeff in self._terms.items():
            key = exp[:i] + exp[i + 1:]
            out[key] = out.get(key, 0) + coeff
        return Poly(vars, out)

    def derivative(self, var):
        if var not in self._vars:
            raise UnknownVariable(f"{var!r} not declared in {self._vars}")
        i = self._vars.index(var)
        out = {}
        for exp, coeff in self._terms.items():
            if exp[i] == 0:
                continue
            key = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
            out[key] = out.get(key, 0) + coeff * exp[i]
        return Poly(self._vars, out)

    def degree(self, var):
        """Largest exponent of ``var``; -1 for the zero polynomial."""
        if var not in self._vars:
            raise UnknownVariable(f"{var!r} not declared in {self._vars}")
        i = self._vars.index(var)
        return max((exp[i] for exp in self._terms), default=-1)

    def total_degree(self):
        return max((sum(exp) for exp in self._terms), default=-1)

    def is_homogeneous(self):
        degrees = {sum(exp) for exp in self._terms}
        return len(degrees) <= 1

    def coefficient(self, var, power):
        """The coefficient of ``var**power`` as a Poly in the other variables."""
        if var not in self._vars:
            raise UnknownVariable(f"{var!r} not declared in {self._vars}")
        i = self._vars.index(var)
        vars = self._vars[:i] + self._vars[i + 1:]
        out = {}
        for exp, coeff in self._terms.items():
            if exp[i] == power:
                out[exp[:i] + exp[i + 1:]] = coeff
        return Poly(vars, out)

    def coefficients(self, var):
        """Dense list of coefficients by power of ``var`` (Polys in the rest)."""
        return [self.coefficient(var, k) for k in range(self.degree(var) + 1)]

    def constant_value(self):
        """The value of a constant polynomial, as an int."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            (exp, coeff), = self._terms.items()
            if not any(exp):
                return coeff
        raise ValueError(f"{self} is not constant")

    def at_ones(self):
        """Evaluate with every variable set to 1 (the coefficient sum)."""
        return sum(self._terms.values())

    def evaluate(self, **values):
        """Evaluate at integer points, e.g. ``f.evaluate(s=1, t=-1)``."""
        missing = [v for v in self._vars if v not in values]
        if missing:
            raise UnknownVariable(f"no value supplied for {missing}")
        total = 0
        for exp, coeff in self._terms.items():
            term = coeff
            for v, e in zip(self._vars, exp):
                term *= values[v] ** e
            total += term
        return total

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order (lexicographic on exponent vectors)."""
        return sorted(self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        # ascending in the *last* variable first: prints 1 + 4t + 7t^2 and
        # s^4 + 11 s^3 t + ... the way the tables are usually written.
        for exp, coeff in sorted(self._terms.items(), key=lambda kv: kv[0][::-1]):
            factors = []
            for v, e in zip(self._vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self})"

    # -- JSON ----------------------------------------------------------------

    def to_json_dict(self):
        return {
            "vars": list(self._vars),
            "terms": [
                {"exp": list(exp), "coeff": str(coeff)}
                for exp, coeff in self.sorted_terms()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data):
        vars = tuple(data["vars"])
        terms = {tuple(item["exp"]): int(item["coeff"]) for item in data["terms"]}
        return cls(vars, terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_dict(json.loads(text))


def D(f):
    """The derivation d/ds + d/dt on polynomials declaring both s and t."""
    missing = [v for v in ("s", "t") if v not in f.vars]
    if missing:
        raise UnknownVariable(f"D needs variables s and t; missing {missing}")
    return f.derivative("s") + f.derivative("t")


def half(f):
    """Exact division by 2; raises OddCoefficient when not integral."""
    out = {}
    for exp, coeff in f.terms.items():
        if coeff % 2:
            raise OddCoefficient(f"coefficient {coeff} at {exp} is odd")
        out[exp] = coeff // 2
    return Poly(f.vars, out)


# -- palindromes and gamma expansions ---------------------------------------


def _univariate_seq(f, allow_q=False):
    """Dense coefficient list of f by powers of t.

    Entries are ints, or dense q-coefficient tuples when ``allow_q``.
    Rejects polynomials involving variables other than t (and q in q-mode).
    """
    allowed = {"t", "q"} if allow_q else {"t"}
    for exp in f.terms:
        for v, e in zip(f.vars, exp):
            if v not in allowed and e:
                raise ValueError(
                    f"{f} involves {v}; expected a polynomial in "
                    f"{sorted(allowed)} only"
                )
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no palindrome data")
    ti = f.vars.index("t") if "t" in f.vars else None
    qi = f.vars.index("q") if allow_q and "q" in f.vars else None
    deg = 0 if ti is None else max(exp[ti] for exp in f.terms)
    if allow_q:
        buckets = [{} for _ in range(deg + 1)]
        for exp, coeff in f.terms.items():
            te = exp[ti] if ti is not None else 0
            qe = exp[qi] if qi is not None else 0
            buckets[te][qe] = buckets[te].get(qe, 0) + coeff
        seq = []
        for bucket in buckets:
            qdeg = max((e for e, c in bucket.items() if c), default=-1)
            seq.append(tuple(bucket.get(e, 0) for e in range(qdeg + 1)))
        return seq
    seq = [0] * (deg + 1)
    for exp, coeff in f.terms.items():
        seq[exp[ti] if ti is not None else 0] += coeff
    return seq


def _bivariate_seq(f):
    """t-coefficient list a_0..a_N of a homogeneous f(s,t) of total degree N."""
    extra = [v for v in f.vars if v not in ("s", "t")]
    for exp in f.terms:
        for v, e in zip(f.vars, exp):
            if v in extra and e:
                raise ValueError(f"{f} involves {v}; expected s,t only")
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no palindrome data")
    if not f.is_homogeneous():
        raise NotHomogeneous(f"{f} mixes total degrees")
    n = f.total_degree()
    ti = f.vars.index("t") if "t" in f.vars else None
    seq = [0] * (n + 1)
    for exp, coeff in f.terms.items():
        seq[exp[ti] if ti is not None else 0] += coeff
    return seq


def _is_zero_entry(x):
    return x == 0 if isinstance(x, int) else not any(x)


def _support(seq):
    nz = [i for i, x in enumerate(seq) if not _is_zero_entry(x)]
    if not nz:
        raise ZeroPolynomial("the zero polynomial has no palindrome data")
    return nz[0], nz[-1]


def _first_violation(seq, lo, hi):
    """First index pair breaking the symmetry of seq over [lo, hi], or None."""
    i, j = lo, hi
    while i < j:
        if seq[i] != seq[j]:
            return i, j
        i += 1
        j -= 1
    return None


@dataclass(frozen=True)
class PalindromeInfo:
    """Support window, symmetry verdict and center, in t-exponent terms."""

    is_palindromic: bool
    r: int
    n: int
    cos: Fraction


def palindrome_info(f, mode=UNIVARIATE):
    """Support offset r, top t-exponent n, center (n+r)/2, and symmetry flag.

    In bivariate mode f must be homogeneous in (s, t); the reported n is the
    top *t-exponent*, so for a palindromic homogeneous polynomial the center
    equals half the total degree.
    """
    if mode == UNIVARIATE:
        seq = _univariate_seq(f)
    elif mode == BIVARIATE:
        seq = _bivariate_seq(f)
    else:
        raise ValueError(f"palindrome_info supports {UNIVARIATE} and {BIVARIATE}")
    lo, hi = _support(seq)
    if mode == BIVARIATE:
        # homogeneous symmetry pairs a_i with a_{N-i}; the window must be
        # centered in [0, N] for the gamma basis to exist at all.
        n_total = len(seq) - 1
        ok = _first_violation(seq, 0, n_total) is None
        return PalindromeInfo(ok, lo, hi, Fraction(lo + hi, 2) if ok
                              else Fraction(lo + hi, 2))
    ok = _first_violation(seq, lo, hi) is None
    return PalindromeInfo(ok, lo, hi, Fraction(lo + hi, 2))


def _as_gamma_entry(x):
    """Normalize a q-mode gamma (tuple) or plain int for storage."""
    if isinstance(x, int):
        return x
    return tuple(x)


@dataclass(frozen=True)
class GammaExpansion:
    """Coordinates of a palindromic polynomial in the gamma basis.

    ``mode`` is one of univariate_t / bivariate_st / q_coefficients.  For the
    univariate modes ``n`` is the top degree in t; for bivariate it is the
    total degree.  ``gammas`` holds ints, or dense q-coefficient tuples in
    q-mode.  The expansion recomposes exactly (see ``recompose``).
    """

    mode: str
    r: int
    n: int
    gammas: tuple

    def __post_init__(self):
        if self.mode not in GAMMA_MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.r < 0 or self.n < self.r:
            raise ValueError(f"bad support: r={self.r}, n={self.n}")
        expected = self.expected_length(self.mode, self.r, self.n)
        if len(self.gammas) != expected:
            raise ValueError(
                f"need {expected} gamma entries for mode={self.mode}, "
                f"r={self.r}, n={self.n}; got {len(self.gammas)}"
            )
        object.__setattr__(
            self, "gammas", tuple(_as_gamma_entry(g) for g in self.gammas)
        )

    @staticmethod
    def expected_length(mode, r, n):
        length = (n - 2 * r) if mode == BIVARIATE else (n - r)
        if length < 0:
            raise ValueError(f"bad support: r={r}, n={n} for mode {mode}")
        return length // 2 + 1

    @property
    def center_of_symmetry(self):
        if self.mode == BIVARIATE:
            return Fraction(self.n, 2)
        return Fraction(self.n + self.r, 2)

    @property
    def length(self):
        """len = top t-exponent minus r (odd iff the center is half-integral)."""
        if self.mode == BIVARIATE:
            return self.n - 2 * self.r
        return self.n - self.r

    def all_gammas_nonnegative(self):
        for g in self.gammas:
            if isinstance(g, int):
                if g < 0:
                    return False
            elif any(c < 0 for c in g):
                return False
        return True

    def recompose(self):
        """The exact polynomial this expansion represents."""
        if self.mode == BIVARIATE:
            s, t = Poly.variable("s"), Poly.variable("t")
            total = Poly.zero(("s", "t"))
            for i, g in enumerate(self.gammas):
                total = total + g * (s * t) ** (self.r + i) \
                    * (s + t) ** (self.n - 2 * (self.r + i))
            return total
        t = Poly.variable("t")
        total = Poly.zero(("t",))
        for i, g in enumerate(self.gammas):
            if isinstance(g, tuple):
                q = Poly.variable("q")
                g = sum((c * q ** e for e, c in enumerate(g)), Poly.zero(("q",)))
            total = total + g * t ** (self.r + i) \
                * (1 + t) ** (self.n - self.r - 2 * i)
        return total

    def to_json_dict(self):
        if self.mode == Q_COEFFICIENTS:
            gammas = [[str(c) for c in g] for g in self.gammas]
        else:
            gammas = [str(g) for g in self.gammas]
        return {"mode": self.mode, "r": self.r, "n": self.n, "gammas": gammas}

    @classmethod
    def from_json_dict(cls, data):
        mode = data.get("mode", UNIVARIATE)
        if mode == Q_COEFFICIENTS:
            gammas = tuple(tuple(int(c) for c in g) for g in data["gammas"])
        else:
            gammas = tuple(int(g) for g in data["gammas"])
        return cls(mode, int(data["r"]), int(data["n"]), gammas)

    def __str__(self):
        cos = self.center_of_symmetry
        gam = ", ".join(
            "(" + " ".join(f"{c}*q^{e}" if e else str(c)
                           for e, c in enumerate(g)) + ")"
            if isinstance(g, tuple) else str(g)
            for g in self.gammas
        )
        return f"gamma=[{gam}] r={self.r} n={self.n} cos={cos}"


def _peel(seq, lo, hi, q_mode):
    """Peel gamma coordinates off a palindromic coefficient sequence.

    Works from the lowest power upward: gamma_i is the current coefficient at
    t^(lo+i); subtract gamma_i * t^(lo+i) (1+t)^(hi-lo-2i) and continue.  The
    degree window shrinks by one on each side per step, so termination is
    structural; a palindromic input leaves a zero remainder.
    """
    work = list(seq)
    gammas = []
    n_steps = (hi - lo) // 2 + 1
    for i in range(n_steps):
        g = work[lo + i]
        gammas.append(g)
        e = hi - lo - 2 * i
        if _is_zero_entry(g):
            continue
        for j in range(e + 1):
            c = comb(e, j)
            if q_mode:
                a, b = work[lo + i + j], g
                width = max(len(a), len(b))
                work[lo + i + j] = tuple(
                    (a[k] if k < len(a) else 0) - c * (b[k] if k < len(b) else 0)
                    for k in range(width)
                )
            else:
                work[lo + i + j] -= c * g
    if any(not _is_zero_entry(x) for x in work):
        raise AssertionError("peel left a nonzero remainder on palindromic input")
    if q_mode:
        gammas = [tuple(g[:len(g) - _trailing_zeros(g)]) for g in gammas]
    return tuple(gammas)


def _trailing_zeros(tup):
    k = 0
    for x in reversed(tup):
        if x:
            break
        k += 1
    return k


def gamma_decompose(f, mode=UNIVARIATE):
    """Exact gamma-basis coordinates of a palindromic polynomial.

    Raises NotPalindromic (with the first violated coefficient pair),
    NotHomogeneous (bivariate mode), or ZeroPolynomial.  Gamma positivity is
    a separate query on the result: ``all_gammas_nonnegative()``.
    """
    if mode == UNIVARIATE:
        seq = _univariate_seq(f)
    elif mode == BIVARIATE:
        seq = _bivariate_seq(f)
    elif mode == Q_COEFFICIENTS:
        seq = _univariate_seq(f, allow_q=True)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    lo, hi = _support(seq)
    if mode == BIVARIATE:
        n_total = len(seq) - 1
        bad = _first_violation(seq, 0, n_total)
        if bad is not None:
            i, j = bad
            raise NotPalindromic(i, j, seq[i], seq[j])
        gammas = _peel(seq, lo, hi, q_mode=False)
        return GammaExpansion(BIVARIATE, lo, n_total, gammas)
    bad = _first_violation(seq, lo, hi)
    if bad is not None:
        i, j = bad
        low = seq[i] if isinstance(seq[i], int) else list(seq[i])
        high = seq[j] if isinstance(seq[j], int) else list(seq[j])
        raise NotPalindromic(i, j, low, high)
    gammas = _peel(seq, lo, hi, q_mode=(mode == Q_COEFFICIENTS))
    return GammaExpansion(mode, lo, hi, gammas)


def gamma_recompose(expansion):
    """Inverse of gamma_decompose (exact round trip when gamma_0 != 0)."""
    return expansion.recompose()


def split_odd_length(expansion):
    """Split an odd-length gamma-positive expansion into two even-length ones.

    Each basis element t^(r+i) (1+t)^(2k+1) splits as
    t^(r+i) (1+t)^(2k) + t^(r+i+1) (1+t)^(2k), so the whole expansion splits
    into the pair with supports [r, n-1] and [r+1, n] carrying the *same*
    gamma vector.  Centers of symmetry come out (n+r-1)/2 and (n+r+1)/2.
    Univariate and q-coefficient modes only.
    """
    if expansion.mode == BIVARIATE:
        raise ValueError("odd-length splitting is defined for univariate modes")
    if expansion.length % 2 == 0:
        raise EvenLength(
            f"length n-r = {expansion.length} is even; nothing to split"
        )
    if not expansion.all_gammas_nonnegative():
        raise NotGammaPositive(f"{expansion} has a negative gamma entry")
    low = GammaExpansion(expansion.mode, expansion.r, expansion.n - 1,
                         expansion.gammas)
    high = GammaExpansion(expansion.mode, expansion.r + 1, expansion.n,
                          expansion.gammas)
    return low, high
