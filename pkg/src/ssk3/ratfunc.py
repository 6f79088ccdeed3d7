"""Dense univariate polynomials and rational functions over a field.

Coefficient arithmetic only needs +, -, *, /, bool and equality, so the same
code serves F_25 and the tower field F_625.  Rational functions are always
kept reduced with a monic denominator; their degree is max(deg num, deg den),
which for a morphism P^1 -> P^1 is the mapping degree.
"""


class Poly:
    __slots__ = ("c", "F")

    def __init__(self, coeffs, F):
        self.F = F
        c = [F(x) if not isinstance(x, F) else x for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @classmethod
    def const(cls, x, F):
        return cls([x], F)

    @classmethod
    def x(cls, F):
        return cls([F(0), F(1)], F)

    def degree(self):
        return len(self.c) - 1 if self.c else -1

    def is_zero(self):
        return not self.c

    def leading(self):
        if not self.c:
            raise ValueError("zero polynomial")
        return self.c[-1]

    def __eq__(self, o):
        return isinstance(o, Poly) and self.c == o.c

    def __hash__(self):
        return hash(tuple((x.a, x.b) if hasattr(x, "a") else x for x in self.c))

    def __add__(self, o):
        n = max(len(self.c), len(o.c))
        F = self.F
        z = F(0)
        a = self.c + [z] * (n - len(self.c))
        b = o.c + [z] * (n - len(o.c))
        return Poly([x + y for x, y in zip(a, b)], F)

    def __neg__(self):
        return Poly([-x for x in self.c], self.F)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, Poly):
            return Poly([x * o for x in self.c], self.F)
        if not self.c or not o.c:
            return Poly([], self.F)
        F = self.F
        out = [F(0)] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(o.c):
                out[i + j] = out[i + j] + x * y
        return Poly(out, F)

    __rmul__ = __mul__

    def scale(self, k):
        return Poly([x * k for x in self.c], self.F)

    def divmod(self, o):
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        r = list(self.c)
        q = [F(0)] * max(0, len(r) - len(o.c) + 1)
        dlead = o.leading()
        while len(r) >= len(o.c) and r:
            k = len(r) - len(o.c)
            f = r[-1] / dlead
            q[k] = f
            for i, y in enumerate(o.c):
                r[k + i] = r[k + i] - f * y
            while r and not r[-1]:
                r.pop()
        return Poly(q, F), Poly(r, F)

    def __mod__(self, o):
        return self.divmod(o)[1]

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def gcd(self, o):
        a, b = self, o
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def monic(self):
        if self.is_zero():
            return self
        inv = self.F(1) / self.leading()
        return self.scale(inv)

    def derivative(self):
        F = self.F
        return Poly([self.c[i] * F(i) for i in range(1, len(self.c))], F)

    def eval(self, x):
        acc = self.F(0)
        for co in reversed(self.c):
            acc = acc * x + co
        return acc

    def compose_poly(self, o):
        """self(o(u)) for a polynomial o."""
        acc = Poly([], self.F)
        for co in reversed(self.c):
            acc = acc * o + Poly.const(co, self.F)
        return acc

    def roots(self, elements):
        return [x for x in elements if not self.eval(x)]

    def lift(self, embed, F2):
        """Map coefficients through embed into the field F2."""
        return Poly([embed(x) for x in self.c], F2)

    def __repr__(self):
        return f"Poly({[str(x) for x in self.c]})"


def _gcd_monic(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


class RatFunc:
    """A reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = Poly([num.F(1)], num.F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            g = _gcd_monic(num, den)
            if not g.is_zero() and g.degree() > 0:
                num = num // g
                den = den // g
            lead = den.leading()
            if lead != num.F(1):
                inv = num.F(1) / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, x, F):
        return cls(Poly.const(x, F))

    @classmethod
    def x(cls, F):
        return cls(Poly.x(F))

    @property
    def F(self):
        return self.num.F

    def degree(self):
        """Mapping degree of the induced morphism P^1 -> P^1."""
        return max(self.num.degree(), self.den.degree())

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def __eq__(self, o):
        return (isinstance(o, RatFunc) and self.num == o.num
                and self.den == o.den)

    def __add__(self, o):
        o = self._coerce(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return self._coerce(o) / self

    def _coerce(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, Poly):
            return RatFunc(o)
        return RatFunc(Poly.const(self.F(o), self.F))

    def square(self):
        return self * self

    def compose(self, o):
        """self(o(u)) for a rational function o = A/B."""
        F = self.F
        n = max(self.num.degree(), self.den.degree(), 0)
        a, b = o.num, o.den
        bpow = [Poly.const(F(1), F)]
        apow = [Poly.const(F(1), F)]
        for _ in range(n):
            bpow.append(bpow[-1] * b)
            apow.append(apow[-1] * a)

        def homog(p):
            out = Poly([], F)
            for i, co in enumerate(p.c):
                out = out + (apow[i] * bpow[n - i]).scale(co)
            return out

        return RatFunc(homog(self.num), homog(self.den))

    def eval(self, x):
        """Value at a field point; returns None for a pole (infinity)."""
        d = self.den.eval(x)
        n = self.num.eval(x)
        if not d:
            if not n:
                raise ZeroDivisionError("unreduced 0/0 evaluation")
            return None
        return n / d

    def eval_infinity(self):
        """Value at u = infinity; None encodes infinity."""
        dn, dd = self.num.degree(), self.den.degree()
        if dn > dd:
            return None
        if dn < dd:
            return self.F(0)
        return self.num.leading() / self.den.leading()

    def eval_proj(self, x):
        """Value at a point of P^1; x may be None (= infinity)."""
        return self.eval_infinity() if x is None else self.eval(x)

    def derivative(self):
        return RatFunc(self.num.derivative() * self.den
                       - self.num * self.den.derivative(),
                       self.den * self.den)

    def lift(self, embed, F2):
        return RatFunc(self.num.lift(embed, F2), self.den.lift(embed, F2),
                       reduce=False)

    def __repr__(self):
        return f"RatFunc({self.num!r}/{self.den!r})"
