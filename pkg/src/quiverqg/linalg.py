"""Exact linear algebra over Q(v).

Rank, kernels and solves go through fraction-free (Bareiss) elimination on
integer-polynomial rows; divisions into Q(v) happen only in the final
back substitution.
"""
from . import poly
from .poly import ONE, ZERO
from .scalars import ONE_S, Scalar


class SingularMatrixError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def _lcm(a, b):
    g = poly.pgcd(a, b)
    return poly.pmul(a, poly.pdivexact(b, g))


def _row_to_poly(row):
    den = ONE
    for s in row:
        if s.num and s.den != den:
            den = _lcm(den, s.den)
    out = []
    for s in row:
        if not s.num:
            out.append(ZERO)
        elif s.den == den:
            out.append(s.num)
        else:
            out.append(poly.pmul(s.num, poly.pdivexact(den, s.den)))
    return out


def bareiss(rows):
    """Fraction-free row echelon form of a Scalar matrix.

    Returns ``(echelon, pivots)`` where ``echelon`` holds polynomial rows (the
    first ``len(pivots)`` are the nonzero ones) and ``pivots[k]`` is the pivot
    column of row k.
    """
    m = [_row_to_poly(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            e = m[i][c]
            if e and (best is None or len(e) < len(m[best][c])):
                best = i
                if len(e) == 1:
                    break
        if best is None:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    val = poly.psub(poly.pmul(p, row[j]), poly.pmul(a, pr[j]))
                    row[j] = poly.pdivexact(val, prev) if prev != ONE and val else val
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        val = poly.pmul(p, row[j])
                        row[j] = poly.pdivexact(val, prev) if prev != ONE else val
            row[c] = ZERO
        prev = p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows):
    return len(bareiss(rows)[1])


def _back_substitute(ech, pivots, ncols, fixed):
    # fixed: column -> Scalar for non-pivot columns; returns full Scalar vector
    x = [Scalar() for _ in range(ncols)]
    for c, val in fixed.items():
        x[c] = val
    for k in range(len(pivots) - 1, -1, -1):
        pc = pivots[k]
        row = ech[k]
        acc = Scalar()
        for j in range(pc + 1, ncols):
            if row[j] and x[j]:
                acc = acc + Scalar(row[j]) * x[j]
        x[pc] = -acc / Scalar(row[pc]) if acc else Scalar()
    return x


def kernel(rows, ncols=None, echelon=None):
    """Basis of the right kernel {x : M x = 0}, one vector per free column.

    ``echelon`` may pass a precomputed ``bareiss(rows)`` result.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[ONE_S if j == c else Scalar() for j in range(ncols)] for c in range(ncols)]
    ech, pivots = echelon if echelon is not None else bareiss(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    return [_back_substitute(ech, pivots, ncols, {f: ONE_S}) for f in free]


def solve(rows, rhs):
    """A particular solution of M x = rhs (free variables set to zero)."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [Scalar.coerce(b)] for r, b in zip(rows, rhs)]
    ech, pivots = bareiss(aug)
    if pivots and pivots[-1] == ncols:
        raise InconsistentSystemError("linear system has no solution")
    for k in range(len(pivots), len(ech)):
        if ech[k][ncols]:
            raise InconsistentSystemError("linear system has no solution")
    # treat rhs as a fixed column with value -1 so back substitution solves M x = b
    full = _back_substitute(ech, pivots, ncols + 1, {ncols: -ONE_S})
    return full[:ncols]


def inverse(rows):
    """Exact inverse of a square Scalar matrix."""
    n = len(rows)
    if n == 0:
        return []
    if n == 1:
        if rows[0][0].is_zero():
            raise SingularMatrixError("singular 1x1 matrix")
        return [[ONE_S / rows[0][0]]]
    aug = [list(rows[i]) + [ONE_S if i == j else Scalar() for j in range(n)] for i in range(n)]
    ech, pivots = bareiss(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    cols = []
    for j in range(n):
        x = _back_substitute(ech, pivots[:n], 2 * n, {n + k: (-ONE_S if k == j else Scalar()) for k in range(n)})
        cols.append(x[:n])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Scalar()
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []
