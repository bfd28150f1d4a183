"""Tour of the exact polynomial layer and the gamma basis.

A palindromic polynomial (coefficients symmetric about a center) expands
uniquely in the basis t^(r+i) (1+t)^(n-r-2i); when all coordinates are
non-negative the polynomial is called gamma positive, which forces both
symmetry and unimodality.  This script builds a few polynomials by hand and
walks through decomposition, recomposition, and odd-length splitting.
"""

from gammaexc import (
    BIVARIATE,
    D,
    NotPalindromic,
    Poly,
    UNIVARIATE,
    gamma_decompose,
    palindrome_info,
    split_odd_length,
)

s, t = Poly.gens("s", "t")

print("== exact arithmetic ==")
f = (s + t) ** 4 + 7 * s * t * (s + t) ** 2 + 16 * (s * t) ** 2
print("f =", f)
print("f at s=1:", f.substitute_one("s"))
print("D f = (d/ds + d/dt) f =", D(f))

print()
print("== palindromicity ==")
g = 1 + 4 * t + 7 * t ** 2
info = palindrome_info(g, UNIVARIATE)
print(f"{g}:  palindromic? {info.is_palindromic}")
try:
    gamma_decompose(g, UNIVARIATE)
except NotPalindromic as err:
    print("decomposition refuses it:", err)

print()
print("== gamma decomposition ==")
expansion = gamma_decompose(f, BIVARIATE)
print(f"f has gamma vector {expansion.gammas} with offset {expansion.r} "
      f"and center {expansion.center_of_symmetry}")
print("recomposing returns f exactly:", expansion.recompose() == f)

print()
print("== odd-length splitting ==")
# An odd-length gamma positive polynomial splits into two even-length gamma
# positive halves whose centers straddle the original half-integral center.
p = (3 * t + 3 * t ** 2)
expansion = gamma_decompose(p, UNIVARIATE)
low, high = split_odd_length(expansion)
print(f"{p} has center {expansion.center_of_symmetry}")
print(f"  splits into {low.recompose()} (center {low.center_of_symmetry})")
print(f"         and {high.recompose()} (center {high.center_of_symmetry})")

print()
print("== JSON round trip ==")
blob = f.to_json()
print(blob[:60] + "...")
print("parses back equal:", Poly.from_json(blob) == f)
