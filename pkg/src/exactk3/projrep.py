"""Finite projective matrix groups over cyclotomic fields, relative
invariants, and the symbolic identities attached to the quartic double
plane with its order-8 symmetry."""

from dataclasses import dataclass

from .errors import ClosureCapExceeded, NonHomogeneous
from .exactcore.multipoly import MultiPolyLite
from .exactcore.scalars import NumberField


def _mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    zero = A[0][0] * 0
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = zero
            for l in range(m):
                a = A[i][l]
                if a:
                    b = B[l][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def projective_normalize(M):
    """Scale so that the first nonzero entry (row-major) equals 1."""
    lead = next(a for row in M for a in row if a)
    inv = 1 / lead
    return [[a * inv for a in row] for row in M]


def _key(M):
    return tuple(tuple(a.c if hasattr(a, "c") else a for a in row) for row in M)


class ProjMatrixGroup:
    """Group generated by matrices, taken modulo scalars."""

    def __init__(self, base, generators, cap=100000):
        self.base = base
        self.generators = [projective_normalize(g) for g in generators]
        n = len(self.generators[0]) if self.generators else 0
        one = [[base.one() if i == j else base.zero() for j in range(n)] for i in range(n)]
        self.identity = one
        seen = {_key(one): one}
        frontier = [one]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = projective_normalize(_mat_mul(a, g))
                    k = _key(b)
                    if k not in seen:
                        seen[k] = b
                        nxt.append(b)
                        if len(seen) > cap:
                            raise ClosureCapExceeded(f"closure exceeds {cap} elements")
            frontier = nxt
        self.elements = list(seen.values())
        self._keys = set(seen)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, M):
        return _key(projective_normalize(M)) in self._keys

    def multiply(self, A, B):
        return projective_normalize(_mat_mul(A, B))

    def commutes(self, A, B):
        return _key(self.multiply(A, B)) == _key(self.multiply(B, A))

    def center(self):
        return [c for c in self.elements if all(self.commutes(c, g) for g in self.generators)]


def closure_order_center(base, generators, cap=100000):
    G = ProjMatrixGroup(base, generators, cap)
    return G.order, G.center(), G


def same_class(A, B):
    return _key(projective_normalize(A)) == _key(projective_normalize(B))


def relative_invariant_character(poly, generators):
    """Scalars chi(g) with poly(x * g) = chi(g) * poly(x), or None when poly
    is not a relative invariant of some generator."""
    if not poly.is_homogeneous():
        raise NonHomogeneous("relative invariants must be homogeneous")
    if any(len(g) != poly.nvars for g in generators):
        raise ValueError("matrix size does not match the number of variables")
    exps, lead = next(iter(poly.terms.items()))
    out = []
    for g in generators:
        image = poly.linear_substitute(g)
        c = image.terms.get(exps)
        if c is None:
            return None
        chi = c / lead
        if image != poly * chi:
            return None
        out.append(chi)
    return out


def root_of_unity_order(c, cap=1000):
    one = c.field.one() if hasattr(c, "field") else 1
    p = c
    for k in range(1, cap + 1):
        if p == one:
            return k
        p = p * c
    return None


# identities of the double plane --------------------------------------------------

@dataclass
class LemmaReport:
    pullback_identity: bool
    form_scalar: object
    form_scalar_expected: bool
    action_order: int

    @property
    def ok(self):
        return self.pullback_identity and self.form_scalar_expected and self.action_order == 8


def lemma_identity_check(K=None):
    """In Q(zeta8)(t, v): substituting (t, v) -> (1/(zeta t), zeta^3 v) into
    1 + t^4 v^4 - i t^4 - i v^4 returns i t^-4 times the same polynomial,
    and the induced scalar on the 2-form is -zeta/2 (the line is acted on
    by -zeta, of order 8)."""
    K = K or NumberField([1, 0, 0, 0, 1], "z")
    z = K.gen()
    i = z * z
    t, v = MultiPolyLite.variables(K, ("t", "v"))
    P = 1 + t ** 4 * v ** 4 - t ** 4 * i - v ** 4 * i
    t_image = (t ** -1) * (1 / z)
    v_image = v * z ** 3
    lhs = P.substitute([t_image, v_image])
    rhs = P * (t ** -4) * i
    scalar = (1 / (z * 2)) * (-1 / z) * z ** 3
    return LemmaReport(lhs == rhs, scalar, scalar == -z / 2, root_of_unity_order(-z))


@dataclass
class DiagonalReport:
    restriction_ok: bool
    discriminant: MultiPolyLite        # 4AC - B^2 in the variable a
    discriminant_ok: bool

    @property
    def ok(self):
        return self.restriction_ok and self.discriminant_ok


def diagonal_discriminant(b_terms, K=None):
    """Restrict b to (x, y, z, w) = (s^2, a t^2, s t, -a s t), compare with
    s^8 - i(a^4 + 1) s^4 t^4 + a^4 t^8, and return the discriminant
    4AC - B^2 of the binary quadratic form A S^2 + B S T + C T^2 in
    S = s^4, T = t^4, which should equal a^8 + 6 a^4 + 1."""
    K = K or NumberField([1, 0, 0, 0, 1], "z")
    i = K.gen() ** 2
    s, t, a = MultiPolyLite.variables(K, ("s", "t", "a"))
    b = MultiPolyLite(K, 4, b_terms, ("x", "y", "z", "w"))
    restricted = b.substitute([s * s, a * t * t, s * t, -(a * s * t)])
    expected = s ** 8 - (a ** 4 + 1) * s ** 4 * t ** 4 * i + a ** 4 * t ** 8
    A = _coefficient_in(restricted, 8)
    B = _coefficient_in(restricted, 4)
    C = _coefficient_in(restricted, 0)
    disc = A * C * 4 - B * B
    target = a ** 8 + a ** 4 * 6 + 1
    return DiagonalReport(restricted == expected, disc, disc == target)


def _coefficient_in(P, s_exp):
    """Coefficient of s^s_exp t^(8 - s_exp), as a polynomial in a (same ring)."""
    out = {}
    t_exp = 8 - s_exp
    for (es, et, ea), c in P.terms.items():
        if es == s_exp and et == t_exp:
            out[(0, 0, ea)] = c
    return MultiPolyLite(P.base, 3, out, P.names)
