"""Sparse multivariate (Laurent) polynomials over a field.

Only what the projective-group and symbolic-identity checks need:
ring operations, substitution and homogeneity.  Exponents may be
negative so that monomial substitutions like t -> 1/(c t) stay closed.
"""


class MultiPolyLite:
    __slots__ = ("base", "nvars", "terms", "names")

    def __init__(self, base, nvars, terms=None, names=None):
        self.base = base
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector of the wrong arity")
            c = base(c)
            if c:
                clean[exps] = clean[exps] + c if exps in clean else c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self.names = names or tuple(f"x{i}" for i in range(nvars))

    @classmethod
    def _make(cls, base, nvars, terms, names):
        obj = cls.__new__(cls)
        obj.base, obj.nvars, obj.terms, obj.names = base, nvars, terms, names
        return obj

    @classmethod
    def variables(cls, base, names):
        n = len(names)
        out = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            out.append(cls._make(base, n, {tuple(e): base.one()}, tuple(names)))
        return out

    def constant(self, c):
        c = self.base(c)
        return MultiPolyLite._make(self.base, self.nvars, {(0,) * self.nvars: c} if c else {}, self.names)

    def _lift(self, other):
        if isinstance(other, MultiPolyLite):
            return other
        return self.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return MultiPolyLite._make(self.base, self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolyLite._make(self.base, self.nvars, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPolyLite):
            c = self.base(other)
            if not c:
                return MultiPolyLite._make(self.base, self.nvars, {}, self.names)
            return MultiPolyLite._make(self.base, self.nvars,
                                       {e: v * c for e, v in self.terms.items()}, self.names)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPolyLite._make(self.base, self.nvars, out, self.names)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            return MultiPolyLite._make(self.base, self.nvars,
                                       {tuple(n * a for a in e): c ** n}, self.names)
        result = self.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPolyLite):
            other = self._lift(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def total_degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.total_degrees()) <= 1

    def substitute(self, images):
        """Replace variable i by images[i] (a MultiPolyLite or scalar)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = next((im for im in images if isinstance(im, MultiPolyLite)), None)
        if target is None:
            acc = self.base.zero()
            for e, c in self.terms.items():
                term = c
                for im, k in zip(images, e):
                    term = term * im ** k
                acc = acc + term
            return acc
        acc = target.constant(0)
        cache = {}
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        im = images[i]
                        cache[key] = (im if isinstance(im, MultiPolyLite) else target.constant(im)) ** k
                    term = term * cache[key]
            acc = acc + term
        return acc

    def linear_substitute(self, matrix):
        """Pull back along the row-vector action v -> v * matrix."""
        n = self.nvars
        gens = MultiPolyLite.variables(self.base, self.names)
        images = []
        for j in range(n):
            im = self.constant(0)
            for i in range(n):
                if matrix[i][j]:
                    im = im + gens[i] * matrix[i][j]
            images.append(im)
        return self.substitute(images)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)
