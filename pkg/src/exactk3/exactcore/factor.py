"""Square-free decomposition, factorization over GF(p) and root finding."""

import random
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from .poly import UniPoly, poly_gcd, poly_powmod
from .scalars import PrimeField, NumberField, RationalField


def _pth_root(f, p):
    """g with g(t)^p = f(t) over GF(p); needs f' = 0."""
    cs = f.coeffs
    return UniPoly._make(f.base, [cs[i] for i in range(0, len(cs), p)], f.var)


def squarefree_decomposition(f):
    """List of (factor, multiplicity); factors monic, square-free, coprime.

    Works in characteristic 0 and over GF(p) for any degree.
    """
    if f.degree() <= 0:
        return []
    f = f.monic()
    p = f.base.characteristic
    out = []
    df = f.derivative()
    if not df:
        # only possible in characteristic p
        return [(g, k * p) for g, k in squarefree_decomposition(_pth_root(f, p))]
    c = poly_gcd(f, df)
    w = f.exact_div(c)
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, c)
        z = w.exact_div(y)
        if z.degree() > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c.exact_div(y)
    if c.degree() > 0:
        for g, k in squarefree_decomposition(_pth_root(c, p)):
            out.append((g, k * p))
    return _merge(out)


def _merge(pairs):
    merged = {}
    for g, k in pairs:
        merged.setdefault(k, []).append(g)
    out = []
    for k in sorted(merged):
        prod = merged[k][0]
        for g in merged[k][1:]:
            prod = prod * g
        out.append((prod.monic(), k))
    return out


def squarefree_part(f):
    if f.degree() <= 0:
        return UniPoly._make(f.base, (f.base.one(),), f.var)
    prod = None
    for g, _ in squarefree_decomposition(f):
        prod = g if prod is None else prod * g
    return prod.monic()


def poly_gcd_squarefree(f, g):
    """(monic gcd(f, g), monic square-free part of f)."""
    return poly_gcd(f, g), squarefree_part(f)


def _distinct_degree(f):
    p = f.base.p
    x = UniPoly.gen(f.base, f.var)
    out = []
    h = x
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = poly_powmod(h, p, f)
        g = poly_gcd(h - x, f)
        if g.degree() > 0:
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    if f.degree() > 0:
        out.append((f.monic(), f.degree()))
    return out


def _equal_degree(g, d, rng):
    if g.degree() == d:
        return [g]
    p = g.base.p
    n = g.degree()
    exponent = (p ** d - 1) // 2
    while True:
        a = UniPoly._make(g.base, [g.base(rng.randrange(p)) for _ in range(n)], g.var)
        if a.degree() <= 0:
            continue
        c = poly_gcd(a, g)
        if 0 < c.degree() < n:
            break
        b = poly_powmod(a, exponent, g) - 1
        c = poly_gcd(b, g)
        if 0 < c.degree() < n:
            break
    return _equal_degree(c, d, rng) + _equal_degree(g.exact_div(c), d, rng)


def _sort_key(f):
    return (f.degree(), tuple(int(c) for c in reversed(f.coeffs)))


def factor_mod_p(f, seed=0):
    """Complete factorization over GF(p): list of (monic irreducible, mult).

    Cantor-Zassenhaus with a seeded generator so output order and
    intermediate choices are reproducible.  Sorted by (degree, coeffs).
    """
    if not isinstance(f.base, PrimeField):
        raise TypeError("factor_mod_p needs a polynomial over GF(p)")
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.base.p == 2:
        raise ValueError("characteristic 2 is not supported")
    rng = random.Random(seed)
    out = []
    for g, k in squarefree_decomposition(f):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree(h, d, rng):
                out.append((irr.monic(), k))
    out.sort(key=lambda fk: _sort_key(fk[0]))
    return out


def is_irreducible_mod_p(f):
    """Rabin-style test: no factor of degree <= n/2, f | t^(p^n) - t."""
    n = f.degree()
    if n <= 0:
        return False
    p = f.base.p
    x = UniPoly.gen(f.base, f.var)
    h = x
    for d in range(1, n // 2 + 1):
        h = poly_powmod(h, p, f)
        if poly_gcd(h - x, f).degree() > 0:
            return False
    for _ in range(n // 2, n):
        h = poly_powmod(h, p, f)
    return not ((h - x) % f)


class RootList(NamedTuple):
    roots: list
    complete: bool

    @property
    def flag(self):
        return "complete" if self.complete else "candidates-only"


def _multiplicity(f, r):
    lin = UniPoly._make(f.base, (-f.base(r), f.base.one()), f.var)
    m = 0
    while f.degree() > 0:
        q, rem = divmod(f, lin)
        if rem:
            break
        f = q
        m += 1
    return m


def _divisors(n):
    n = abs(n)
    small = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
    return sorted(set(small + [n // d for d in small]))


def _rational_roots(coeffs):
    """Rational roots of a polynomial with Fraction coefficients."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
    ints = ints[k:]
    if len(ints) <= 1:
        return roots
    a0, an = ints[0], ints[-1]
    for q in _divisors(an):
        for p in _divisors(a0):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def roots_in_field(f, candidates=None):
    """Roots of f in its coefficient field with multiplicities.

    Complete over GF(p) and Q.  Over a proper number field only rational
    roots and the supplied candidates are found; the result is flagged
    complete exactly when the multiplicities found add up to deg f.
    """
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    f = f.monic()
    base = f.base
    found = []
    if isinstance(base, PrimeField):
        for g, k in factor_mod_p(f):
            if g.degree() == 1:
                found.append((-g.coeffs[0], k))
        return RootList(found, True)
    if isinstance(base, RationalField):
        for r in _rational_roots(list(f.coeffs)):
            found.append((r, _multiplicity(f, r)))
        found.sort(key=lambda rm: rm[0])
        return RootList(found, True)
    seen = []
    if isinstance(base, NumberField) and all(c.is_rational() for c in f.coeffs):
        for r in _rational_roots([c.c[0] for c in f.coeffs]):
            seen.append(base(r))
    for c in candidates or ():
        c = base(c)
        if c not in seen and not f(c):
            seen.append(c)
    for r in seen:
        found.append((r, _multiplicity(f, r)))
    total = sum(m for _, m in found)
    return RootList(found, total == f.degree())
