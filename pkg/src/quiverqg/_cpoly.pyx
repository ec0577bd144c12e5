# cython: language_level=3, boundscheck=False
"""Compiled kernels for Z[v] and reduced fractions over Z[v].

Same contract as ``_pypoly``.  Coefficients stay Python ints; products of
small polynomials take a machine-word path when the result cannot overflow.
"""
from math import gcd

from quiverqg._kron import KRON_MIN, kron_mul

cdef tuple ZERO = ()
cdef tuple ONE = (1,)

cdef long long SMALL = 1LL << 28


cpdef tuple trim(a):
    cdef list out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


cpdef tuple padd(tuple a, tuple b):
    cdef Py_ssize_t k, nb
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    nb = len(b)
    for k in range(nb):
        out[k] = out[k] + b[k]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


cpdef tuple psub(tuple a, tuple b):
    cdef Py_ssize_t k, na = len(a), nb = len(b)
    cdef Py_ssize_t n = na if na > nb else nb
    cdef list out = [0] * n
    for k in range(na):
        out[k] = a[k]
    for k in range(nb):
        out[k] = out[k] - b[k]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


cpdef tuple pneg(tuple a):
    return tuple([-c for c in a])


cpdef tuple pscale(tuple a, c):
    if c == 0:
        return ZERO
    if c == 1:
        return a
    return tuple([x * c for x in a])


cdef bint _fits(tuple a):
    cdef object x
    for x in a:
        if not (-SMALL < x < SMALL):
            return False
    return True


cpdef tuple pmul(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long xi
    cdef long long buf[128]
    cdef list out
    if na == 0 or nb == 0:
        return ZERO
    if na == 1:
        return pscale(b, a[0])
    if nb == 1:
        return pscale(a, b[0])
    if na + nb - 1 <= 128 and na <= 64 and nb <= 64 and _fits(a) and _fits(b):
        for i in range(na + nb - 1):
            buf[i] = 0
        for i in range(na):
            xi = a[i]
            if xi:
                for j in range(nb):
                    buf[i + j] += xi * <long long>b[j]
        return tuple([buf[i] for i in range(na + nb - 1)])
    if na >= KRON_MIN and nb >= KRON_MIN:
        return kron_mul(a, b)
    out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return tuple(out)


cpdef object pcontent(tuple a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef Py_ssize_t lowval(tuple a):
    cdef Py_ssize_t k
    for k in range(len(a)):
        if a[k]:
            return k
    return 0


cpdef bint is_monomial(tuple a):
    cdef Py_ssize_t n = len(a), k
    if n == 0:
        return False
    for k in range(n - 1):
        if a[k]:
            return False
    return True


cpdef tuple pdivexact(tuple a, tuple b):
    cdef Py_ssize_t da, db, k, j
    cdef list rem, quo, out
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
                rem[k + j] = rem[k + j] - q * b[j]
    for k in range(db):
        if rem[k]:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


cdef list _prem(tuple a, tuple b):
    cdef list rem = list(a)
    cdef Py_ssize_t db = len(b) - 1, shift, j
    lb = b[db]
    while rem and len(rem) - 1 >= db:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[shift + j] = rem[shift + j] - c * b[j]
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


cdef tuple _primitive(a):
    c = pcontent(tuple(a))
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple([x // c for x in a])


cpdef tuple pgcd(tuple a, tuple b):
    cdef Py_ssize_t s, la, lb_
    cdef tuple g
    if not a:
        if not b:
            return ZERO
        return b if b[-1] > 0 else pneg(b)
    if not b:
        return a if a[-1] > 0 else pneg(a)
    c = gcd(pcontent(a), pcontent(b))
    la = lowval(a)
    lb_ = lowval(b)
    s = la if la < lb_ else lb_
    if len(a) - la == 1 or len(b) - lb_ == 1:
        return (0,) * s + (c,)
    a = _primitive(a[la:])
    b = _primitive(b[lb_:])
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            g = ONE
            break
        r = _prem(a, b)
        if not r:
            g = b
            break
        a, b = b, _primitive(r)
    g = _primitive(g)
    if c != 1:
        g = tuple([x * c for x in g])
    return (0,) * s + g


cdef tuple _fix_sign(tuple n, tuple d):
    if d[-1] < 0:
        return pneg(n), pneg(d)
    return n, d


cpdef tuple rf_normalize(tuple n, tuple d):
    cdef Py_ssize_t k, s, lv
    if not d:
        raise ZeroDivisionError("division by zero in Q(v)")
    if not n:
        return ZERO, ONE
    if is_monomial(d):
        k = len(d) - 1
        lv = lowval(n)
        s = k if k < lv else lv
        c = gcd(pcontent(n), d[k])
        if d[k] < 0:
            c = -c
        if s == 0 and c == 1:
            return n, d
        n = tuple([x // c for x in n[s:]])
        d = (0,) * (k - s) + (d[k] // c,)
        return n, d
    g = pgcd(n, d)
    if g != ONE:
        n = pdivexact(n, g)
        d = pdivexact(d, g)
    return _fix_sign(n, d)


cpdef tuple rf_add(tuple n1, tuple d1, tuple n2, tuple d2):
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


cpdef tuple rf_neg(tuple n, tuple d):
    return pneg(n), d


cpdef tuple rf_sub(tuple n1, tuple d1, tuple n2, tuple d2):
    return rf_add(n1, d1, pneg(n2), d2)


cpdef tuple rf_mul(tuple n1, tuple d1, tuple n2, tuple d2):
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


cpdef tuple rf_div(tuple n1, tuple d1, tuple n2, tuple d2):
    if not n2:
        raise ZeroDivisionError("division by zero in Q(v)")
    n2, d2 = _fix_sign(d2, n2)
    return rf_mul(n1, d1, n2, d2)
