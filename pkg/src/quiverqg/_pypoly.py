"""Pure-Python kernels for Z[v] and reduced fractions over Z[v].

Polynomials are tuples of Python ints, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple.  A fraction is a
pair ``(num, den)`` with ``den`` nonzero, ``gcd(num, den) = 1`` in Z[v]
(contents included) and a positive leading coefficient on ``den``.

The compiled module ``_cpoly`` exposes exactly the same functions.
"""
from math import gcd

from ._kron import KRON_MIN, kron_mul

ZERO = ()
ONE = (1,)


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def psub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for k, c in enumerate(a):
        out[k] = c
    for k, c in enumerate(b):
        out[k] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def pneg(a):
    return tuple(-c for c in a)


def pscale(a, c):
    if c == 0:
        return ZERO
    return tuple(x * c for x in a)


def pmul(a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    if len(a) >= KRON_MIN and len(b) >= KRON_MIN:
        return kron_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def lowval(a):
    """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
    for k, c in enumerate(a):
        if c:
            return k
    return 0


def is_monomial(a):
    n = len(a)
    if n == 0:
        return False
    for k in range(n - 1):
        if a[k]:
            return False
    return True


def pdivexact(a, b):
    """Quotient of ``a`` by ``b`` in Z[v]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    lb = b[db]
    if db == 0:
        out = []
        for c in a:
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(q)
        return tuple(out)
    da = len(a) - 1
    if da < db:
        raise ArithmeticError("inexact polynomial division")
    rem = list(a)
    quo = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = rem[k + db]
        if c:
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quo[k] = q
            for j in range(db + 1):
                rem[k + j] -= q * b[j]
    for c in rem[:db]:
        if c:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def _prem(a, b):
    # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    rem = list(a)
    db = len(b) - 1
    lb = b[db]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[shift + j] -= c * b[j]
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _primitive(a):
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple(x // c for x in a)


def pgcd(a, b):
    """Greatest common divisor in Z[v], positive leading coefficient."""
    if not a:
        if not b:
            return ZERO
        return tuple(x * (1 if b[-1] > 0 else -1) for x in b)
    if not b:
        return tuple(x * (1 if a[-1] > 0 else -1) for x in a)
    c = gcd(pcontent(a), pcontent(b))
    s = min(lowval(a), lowval(b))
    if len(a) - lowval(a) == 1 or len(b) - lowval(b) == 1:
        return (0,) * s + (c,)
    a = _primitive(a[lowval(a):])
    b = _primitive(b[lowval(b):])
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            g = (1,)
            break
        r = _prem(a, b)
        if not r:
            g = b
            break
        a, b = b, _primitive(r)
    g = _primitive(g)
    if c != 1:
        g = tuple(x * c for x in g)
    return (0,) * s + g


def _fix_sign(n, d):
    if d[-1] < 0:
        return pneg(n), pneg(d)
    return n, d


def rf_normalize(n, d):
    """Reduce an arbitrary fraction to canonical form."""
    if not d:
        raise ZeroDivisionError("division by zero in Q(v)")
    if not n:
        return ZERO, ONE
    if is_monomial(d):
        k = len(d) - 1
        s = min(k, lowval(n))
        c = gcd(pcontent(n), d[-1])
        if d[-1] < 0:
            c = -c
        if s == 0 and c == 1:
            return n, d
        n = tuple(x // c for x in n[s:])
        d = (0,) * (k - s) + (d[-1] // c,)
        return n, d
    g = pgcd(n, d)
    if g != ONE:
        n = pdivexact(n, g)
        d = pdivexact(d, g)
    return _fix_sign(n, d)


def rf_add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == d2:
        return rf_normalize(padd(n1, n2), d1)
    if len(d1) == 1 and len(d2) == 1:
        return rf_normalize(padd(pscale(n1, d2[0]), pscale(n2, d1[0])),
                            (d1[0] * d2[0],))
    g = pgcd(d1, d2)
    e1 = pdivexact(d1, g) if g != ONE else d1
    e2 = pdivexact(d2, g) if g != ONE else d2
    return rf_normalize(padd(pmul(n1, e2), pmul(n2, e1)), pmul(d1, e2))


def rf_neg(n, d):
    return pneg(n), d


def rf_sub(n1, d1, n2, d2):
    return rf_add(n1, d1, pneg(n2), d2)


def rf_mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return ZERO, ONE
    if d1 == ONE and d2 == ONE:
        return pmul(n1, n2), ONE
    g1 = pgcd(n1, d2)
    g2 = pgcd(n2, d1)
    if g1 != ONE:
        n1 = pdivexact(n1, g1)
        d2 = pdivexact(d2, g1)
    if g2 != ONE:
        n2 = pdivexact(n2, g2)
        d1 = pdivexact(d1, g2)
    return _fix_sign(pmul(n1, n2), pmul(d1, d2))


def rf_div(n1, d1, n2, d2):
    if not n2:
        raise ZeroDivisionError("division by zero in Q(v)")
    return rf_mul(n1, d1, *_fix_sign(d2, n2))
