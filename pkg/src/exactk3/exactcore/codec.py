"""JSON encodings of exact scalars, polynomials and matrices.

Rationals are strings "num/den" (or "n"); number field elements and
polynomials are ascending coefficient arrays; matrices are row-major
arrays of arrays.
"""

from fractions import Fraction

from .poly import UniPoly
from .scalars import Fp, NFElem


def encode_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decode_rational(s):
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)


def encode_scalar(x):
    if isinstance(x, NFElem):
        return [encode_rational(c) for c in x.c]
    if isinstance(x, Fp):
        return x.v
    return encode_rational(x)


def decode_scalar(obj, field):
    if isinstance(obj, list):
        return field.from_coeffs([decode_rational(c) for c in obj])
    return field(decode_rational(obj))


def encode_poly(f):
    return [encode_scalar(c) for c in f.coeffs]


def decode_poly(obj, field, var="t"):
    return UniPoly(field, [decode_scalar(c, field) for c in obj], var)


def encode_matrix(M):
    return [[encode_scalar(a) for a in row] for row in M]


def decode_matrix(obj, field=None):
    if field is None:
        return [[decode_rational(a) for a in row] for row in obj]
    return [[decode_scalar(a, field) for a in row] for row in obj]


def encode_vector(v):
    return [encode_scalar(a) for a in v]


def decode_vector(obj):
    return [decode_rational(a) for a in obj]
