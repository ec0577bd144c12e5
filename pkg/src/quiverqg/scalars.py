"""Exact arithmetic in Q(v) and Laurent expansion at v = infinity."""
from dataclasses import dataclass, field
from fractions import Fraction

from . import poly
from .expr import Parser
from .poly import ONE, ZERO


class Scalar:
    """An element of Q(v) stored as a reduced fraction of integer polynomials.

    ``num`` and ``den`` are coefficient tuples (lowest degree first).  They are
    coprime in Z[v], contents included, and ``den`` has a positive leading
    coefficient, so two equal scalars always have identical fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE, reduced=False):
        if not reduced:
            num, den = poly.rf_normalize(poly.trim(num), poly.trim(den))
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, pair):
        obj = object.__new__(cls)
        obj.num, obj.den = pair
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls._raw(((x,) if x else ZERO, ONE))
        if isinstance(x, Fraction):
            return cls((x.numerator,), (x.denominator,))
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def vpow(cls, k):
        """The monomial v**k for any integer k."""
        if k >= 0:
            return cls._raw(((0,) * k + (1,), ONE))
        return cls._raw((ONE, (0,) * (-k) + (1,)))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Scalar.coerce(other)
        return Scalar._raw(poly.rf_add(self.num, self.den, other.num, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Scalar.coerce(other)
        return Scalar._raw(poly.rf_sub(self.num, self.den, other.num, other.den))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Scalar.coerce(other)
        return Scalar._raw(poly.rf_mul(self.num, self.den, other.num, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Scalar.coerce(other)
        return Scalar._raw(poly.rf_div(self.num, self.den, other.num, other.den))

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __neg__(self):
        return Scalar._raw((poly.pneg(self.num), self.den))

    def __pos__(self):
        return self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (ONE_S / self) ** (-e)
        out = ONE_S
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self):
        return ONE_S / self

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Scalar.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_laurent(self):
        """True when the denominator is c*v**k, i.e. a Laurent polynomial."""
        return poly.is_monomial(self.den)

    def bar(self):
        """Substitute v -> 1/v."""
        if not self.num:
            return self
        n, d = self.num, self.den
        shift = (len(d) - 1) - (len(n) - 1)
        rn, rd = tuple(reversed(n)), tuple(reversed(d))
        if shift >= 0:
            rn = (0,) * shift + rn
        else:
            rd = (0,) * (-shift) + rd
        return Scalar(rn, rd)

    def laurent_terms(self):
        """Exponent -> Fraction map; only valid when ``is_laurent()``."""
        k = len(self.den) - 1
        c = self.den[-1]
        return {j - k: Fraction(a, c) for j, a in enumerate(self.num) if a}

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Scalar({render(self)!r})"


ONE_S = Scalar._raw((ONE, ONE))
ZERO_S = Scalar._raw((ZERO, ONE))
V = Scalar.vpow(1)


def _render_terms(terms):
    # terms: exponent -> Fraction, rendered highest exponent first
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = "v" if e == 1 else f"v^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def render(s):
    """String form in the scalar literal grammar; ``parse_scalar`` inverts it."""
    if s.is_laurent():
        return _render_terms(s.laurent_terms())
    num = {j: Fraction(a) for j, a in enumerate(s.num) if a}
    den = {j: Fraction(a) for j, a in enumerate(s.den) if a}
    return f"({_render_terms(num)})/({_render_terms(den)})"


def parse_scalar(text):
    """Parse a scalar literal such as ``1/(1 - v^-2)``."""
    def const(x):
        return V if x == "v" else Scalar.coerce(x)
    return Parser(text, const).parse()


def scalar_arith(a, b, op):
    """Binary operation by name: one of add, sub, mul, div."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Q(v)")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class SeriesWindow:
    """Coefficients of v**k for k >= -low_order of an expansion at v = infinity."""

    coefficients: dict = field(default_factory=dict)
    low_order: int = 0

    def coeff(self, k):
        return self.coefficients.get(k, Fraction(0))

    @property
    def max_exponent(self):
        return max(self.coefficients, default=0)

    def __mul__(self, other):
        low = min(self.low_order, other.low_order)
        out = {}
        for i, a in self.coefficients.items():
            for j, b in other.coefficients.items():
                if i + j >= -low:
                    out[i + j] = out.get(i + j, 0) + a * b
        return SeriesWindow({k: c for k, c in out.items() if c}, low)


def expand_series(s, order):
    """Expand ``s`` in decreasing powers of v, keeping exponents >= -order."""
    s = Scalar.coerce(s)
    if order < 0:
        raise ValueError("order must be nonnegative")
    if s.is_zero():
        return SeriesWindow({}, order)
    n, d = s.num, s.den
    dn, dd = len(n) - 1, len(d) - 1
    top = dn - dd
    nterms = top + order + 1
    if nterms <= 0:
        return SeriesWindow({}, order)
    # series in w = 1/v of reversed numerator over reversed denominator
    nw = [Fraction(n[dn - k]) if k <= dn else Fraction(0) for k in range(nterms)]
    dw = [Fraction(d[dd - k]) if k <= dd else Fraction(0) for k in range(nterms)]
    q = []
    for k in range(nterms):
        acc = nw[k]
        for j in range(1, min(k, dd) + 1):
            acc -= dw[j] * q[k - j]
        q.append(acc / dw[0])
    coeffs = {top - k: c for k, c in enumerate(q) if c}
    return SeriesWindow(coeffs, order)


def in_one_plus_vinv_nat(s, order):
    """Semi-decision of membership in 1 + v^-1 N[[v^-1]] up to v**-order.

    Only the first ``order`` coefficients below the constant are inspected,
    so a True answer is a certificate for that window only.
    """
    w = expand_series(s, order)
    if w.coeff(0) != 1:
        return False
    for k, c in w.coefficients.items():
        if k > 0:
            return False
        if k < 0 and (c < 0 or c.denominator != 1):
            return False
    return True


def in_vinv_nat(s, order):
    """Membership of ``s`` in v^-1 N[[v^-1]] on the window down to v**-order."""
    w = expand_series(s, order)
    for k, c in w.coefficients.items():
        if k >= 0 or c < 0 or c.denominator != 1:
            return False
    return True
