"""Arithmetic in F_25 = F_5(sqrt 2) and its quadratic extension F_625.

F_25 is realized as F_5[s]/(s^2 - 2); an element a + b*sqrt(2) is stored as
the pair (a, b) with a, b in Z/5Z.  The degree-4 field needed for torsion
computations is the fixed tower F_625 = F_25[t]/(t^2 - sqrt(2)), which is a
field because sqrt(2) is a non-square in F_25.  Frobenius x -> x^5 is the
map (a, b) -> (a, -b) on F_25 and (a + b t) -> (a^5 + 2 b^5 t) on F_625.
"""


class GF25:
    """An element of F_25."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        if isinstance(a, GF25):
            a, b2 = a.a, a.b
            b = (b2 + b) % 5 if b else b2
            self.a, self.b = a, b
            return
        self.a = int(a) % 5
        self.b = int(b) % 5

    @staticmethod
    def _coerce(o):
        if isinstance(o, GF25):
            return o
        if isinstance(o, int):
            return GF25(o)
        return None

    def __add__(self, o):
        o = GF25._coerce(o)
        if o is None:
            return NotImplemented
        return GF25(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GF25(-self.a, -self.b)

    def __sub__(self, o):
        o = GF25._coerce(o)
        if o is None:
            return NotImplemented
        return GF25(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return GF25(o) - self

    def __mul__(self, o):
        o = GF25._coerce(o)
        if o is None:
            return NotImplemented
        return GF25(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        # (a + b s)(a - b s) = a^2 - 2 b^2 in F_5
        n = (self.a * self.a - 2 * self.b * self.b) % 5
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_25")
        ninv = pow(n, 3, 5)  # n^-1 = n^3 mod 5
        return GF25(self.a * ninv, -self.b * ninv)

    def __truediv__(self, o):
        return self * GF25(o).inverse()

    def __rtruediv__(self, o):
        return GF25(o) * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = GF25(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def frob(self):
        """x -> x^5 (the nontrivial automorphism over F_5)."""
        return GF25(self.a, -self.b)

    def __eq__(self, o):
        try:
            o = GF25(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, 25))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"GF25({self.a},{self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b == 1:
            parts.append("s2")
        else:
            parts.append(f"{self.b}*s2")
        return "+".join(parts) if parts else "0"

    def in_base_field(self):
        return self.b == 0


SQRT2 = GF25(0, 1)
OMEGA = GF25(2, 3)          # primitive cube root of unity
ZERO = GF25(0)
ONE = GF25(1)


def all_gf25():
    return [GF25(a, b) for a in range(5) for b in range(5)]


_SQRT_TABLE = None


def sqrt_gf25(x):
    """One square root of x in F_25, or None if x is a non-square."""
    global _SQRT_TABLE
    if _SQRT_TABLE is None:
        _SQRT_TABLE = {}
        for y in all_gf25():
            _SQRT_TABLE.setdefault(y * y, y)
    return _SQRT_TABLE.get(GF25(x))


class GF625:
    """An element of F_625 = F_25[t]/(t^2 - sqrt 2)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=GF25(0)):
        if isinstance(a, GF625):
            self.a, self.b = a.a, a.b
            return
        self.a = GF25(a)
        self.b = GF25(b)

    @staticmethod
    def _coerce(o):
        if isinstance(o, GF625):
            return o
        if isinstance(o, (int, GF25)):
            return GF625(o)
        return None

    def __add__(self, o):
        o = GF625._coerce(o)
        if o is None:
            return NotImplemented
        return GF625(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GF625(-self.a, -self.b)

    def __sub__(self, o):
        o = GF625._coerce(o)
        if o is None:
            return NotImplemented
        return GF625(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return GF625(o) - self

    def __mul__(self, o):
        o = GF625._coerce(o)
        if o is None:
            return NotImplemented
        return GF625(self.a * o.a + SQRT2 * self.b * o.b,
                     self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - SQRT2 * self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of zero in F_625")
        ninv = n.inverse()
        return GF625(self.a * ninv, -self.b * ninv)

    def __truediv__(self, o):
        return self * GF625(o).inverse()

    def __rtruediv__(self, o):
        return GF625(o) * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = GF625(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def frob(self):
        """x -> x^5; note t^5 = 2 t since t^4 = 2."""
        return GF625(self.a.frob(), GF25(2) * self.b.frob())

    def __eq__(self, o):
        try:
            o = GF625(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, 625))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"GF625({self.a!r},{self.b!r})"

    def in_gf25(self):
        return not self.b

    def to_gf25(self):
        if self.b:
            raise ValueError("element is not in F_25")
        return self.a


def all_gf625():
    base = all_gf25()
    return [GF625(a, b) for a in base for b in base]


_SQRT_TABLE_625 = None


def sqrt_gf625(x):
    global _SQRT_TABLE_625
    if _SQRT_TABLE_625 is None:
        _SQRT_TABLE_625 = {}
        for y in all_gf625():
            _SQRT_TABLE_625.setdefault(y * y, y)
    return _SQRT_TABLE_625.get(GF625(x))


# --- serialization helpers -------------------------------------------------

def gf25_to_pair(x):
    x = GF25(x)
    return [x.a, x.b]


def gf25_from_pair(p):
    return GF25(p[0], p[1])


def gf25_str(x):
    """Human form "a+b*sqrt(2)" used in CLI reports."""
    x = GF25(x)
    if x.b == 0:
        return str(x.a)
    s2 = "sqrt(2)" if x.b == 1 else f"{x.b}*sqrt(2)"
    return s2 if x.a == 0 else f"{x.a}+{s2}"
