"""Quivers with loops: Euler form, generator indices, compositions, ν data.

Vertices are referred to by name in files and on the command line and by
their position in ``QuiverSpec.vertices`` everywhere else.  A dimension
vector is a tuple of ints indexed by vertex position; a generator index is a
pair ``(vertex, level)``.
"""
import random
from functools import lru_cache

from .expr import ParseError
from .scalars import ONE_S, V, Scalar, parse_scalar


class QuiverError(ValueError):
    pass


class MissingNuError(QuiverError):
    pass


class QuiverSpec:
    """Vertices, undirected edge multiset and the parameters ν_(i,l)."""

    def __init__(self, vertices, edges, nu=None, nu_default=None, name=None):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex name")
        self._index = {v: k for k, v in enumerate(self.vertices)}
        n = len(self.vertices)
        counts = [[0] * n for _ in range(n)]
        self.edges = []
        for a, b in edges:
            if a not in self._index or b not in self._index:
                raise QuiverError(f"edge {a}-{b} uses an undeclared vertex")
            ia, ib = self._index[a], self._index[b]
            counts[ia][ib] += 1
            if ia != ib:
                counts[ib][ia] += 1
            self.edges.append((a, b))
        self.loops = tuple(counts[i][i] for i in range(n))
        form = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                form[i][j] = 2 - 2 * counts[i][i] if i == j else -counts[i][j]
        self.form = tuple(tuple(r) for r in form)
        self.nu_values = {}
        for (vert, level), val in (nu or {}).items():
            if isinstance(vert, str):
                if vert not in self._index:
                    raise QuiverError(f"nu given for unknown vertex {vert!r}")
                vert = self._index[vert]
            val = Scalar.coerce(val)
            if val.is_zero():
                raise QuiverError(f"nu for ({self.vertices[vert]},{level}) is zero")
            self.nu_values[(vert, int(level))] = val
        self.nu_default = None if nu_default is None else Scalar.coerce(nu_default)
        if self.nu_default is not None and self.nu_default.is_zero():
            raise QuiverError("nu-default is zero")
        self.name = name

    # -- vertices ----------------------------------------------------------
    @property
    def n(self):
        return len(self.vertices)

    def index(self, vertex):
        if isinstance(vertex, int):
            if not 0 <= vertex < self.n:
                raise QuiverError(f"unknown vertex index {vertex}")
            return vertex
        try:
            return self._index[vertex]
        except KeyError:
            raise QuiverError(f"unknown vertex {vertex!r}") from None

    def omega(self, i):
        return self.loops[self.index(i)]

    def is_real(self, i):
        return self.omega(i) == 0

    def is_imaginary(self, i):
        return self.omega(i) >= 1

    def is_isotropic(self, i):
        return self.omega(i) == 1

    def vertex_class(self, i):
        w = self.omega(i)
        return "real" if w == 0 else ("isotropic" if w == 1 else "imaginary")

    # -- forms -------------------------------------------------------------
    def euler_form(self, a, b):
        """Symmetric Euler form of two dimension vectors (or vertex names)."""
        a = self.dimvec(a)
        b = self.dimvec(b)
        f = self.form
        return sum(a[i] * f[i][j] * b[j]
                   for i in range(self.n) if a[i]
                   for j in range(self.n) if b[j])

    def dimvec(self, x):
        """Coerce a vertex name, dict or sequence to a dimension-vector tuple."""
        if isinstance(x, tuple) and len(x) == self.n and all(isinstance(c, int) for c in x):
            return x
        if isinstance(x, str):
            out = [0] * self.n
            out[self.index(x)] = 1
            return tuple(out)
        if isinstance(x, dict):
            out = [0] * self.n
            for k, c in x.items():
                out[self.index(k)] += int(c)
            return tuple(out)
        x = tuple(int(c) for c in x)
        if len(x) != self.n:
            raise QuiverError(f"dimension vector {x} has wrong length")
        return x

    def unit(self, i, mult=1):
        out = [0] * self.n
        out[self.index(i)] = mult
        return tuple(out)

    def v_sub_i(self, i):
        """v_i = v^((i,i)/2)."""
        i = self.index(i)
        return Scalar.vpow(self.form[i][i] // 2)

    def gen_degree(self, gen):
        return self.unit(gen[0], gen[1])

    def gen_pairing(self, gen, j):
        """(ι, j) = l (i, j) for ι = (i, l)."""
        i, l = gen
        return l * self.form[i][self.index(j)]

    # -- generators --------------------------------------------------------
    def is_gen(self, gen):
        i, l = gen
        return 0 <= i < self.n and l >= 1 and (l == 1 or self.loops[i] >= 1)

    def gen_indices(self, max_height):
        """All ι in I_∞ with height at most ``max_height``, vertex-major."""
        out = []
        for i in range(self.n):
            top = max_height if self.loops[i] >= 1 else min(1, max_height)
            for l in range(1, top + 1):
                out.append((i, l))
        return out

    def nu(self, gen):
        gen = (self.index(gen[0]), gen[1])
        if not self.is_gen(gen):
            raise QuiverError(f"({self.vertices[gen[0]]},{gen[1]}) is not a generator index")
        val = self.nu_values.get(gen)
        if val is None:
            if self.nu_default is None:
                return ONE_S
            return self.nu_default
        return val

    def validate_nu(self, max_height):
        for g in self.gen_indices(max_height):
            if self.nu(g).is_zero():
                raise MissingNuError(f"nu vanishes at {g}")

    def with_nu(self, nu, nu_default=None, name=None):
        """Copy with the ν table replaced."""
        return QuiverSpec(self.vertices, self.edges, nu, nu_default,
                          name=name or self.name)

    def gen_name(self, gen):
        return f"E[{self.vertices[gen[0]]},{gen[1]}]"

    def __repr__(self):
        return f"QuiverSpec({self.name or list(self.vertices)!r}, loops={self.loops})"


def height(alpha):
    return sum(alpha)


@lru_cache(maxsize=None)
def compositions(l):
    """All compositions of l, lexicographically descending."""
    if l == 0:
        return ((),)
    out = []
    for first in range(l, 0, -1):
        for rest in compositions(l - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(l, cap=None):
    """All partitions of l (weakly decreasing), lexicographically descending."""
    if cap is None:
        cap = l
    if l == 0:
        return ((),)
    out = []
    for first in range(min(l, cap), 0, -1):
        for rest in partitions(l - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_c(q, i, l):
    """The index set C_(i,l): partitions at isotropic vertices, else compositions."""
    i = q.index(i)
    if not q.is_imaginary(i):
        raise QuiverError(f"vertex {q.vertices[i]!r} is real")
    return list(partitions(l) if q.is_isotropic(i) else compositions(l))


@lru_cache(maxsize=None)
def quantum_integer(t):
    """[t]_v = (v^t - v^-t) / (v - v^-1)."""
    out = Scalar()
    for k in range(t):
        out = out + Scalar.vpow(t - 1 - 2 * k)
    return out


@lru_cache(maxsize=None)
def quantum_factorial(t):
    out = ONE_S
    for k in range(1, t + 1):
        out = out * quantum_integer(k)
    return out


def quantum_combinatorics(q, i, t):
    """Quantum factorial [t]_v! at a real vertex (where v_i = v)."""
    if not q.is_real(i):
        raise QuiverError("quantum factorials are only used at real vertices")
    if t < 0:
        raise ValueError("t must be nonnegative")
    return quantum_factorial(t)


# -- file format --------------------------------------------------------------

def parse_quiver(text, name=None):
    """Parse the line-oriented quiver format (vertex / edge / nu / nu-default)."""
    vertices, edges, nu = [], [], {}
    nu_default = None
    offset = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        parts = line.split()
        start = offset
        offset += len(raw) + 1
        if not parts:
            continue

        def fail(msg):
            raise ParseError(msg, text, start + (len(raw) - len(raw.lstrip())))

        key = parts[0]
        if key == "vertex":
            if len(parts) != 2:
                fail("usage: vertex <name>")
            vertices.append(parts[1])
        elif key == "edge":
            if len(parts) != 3:
                fail("usage: edge <name> <name>")
            edges.append((parts[1], parts[2]))
        elif key == "nu":
            if len(parts) < 4:
                fail("usage: nu <name> <level> <scalar-expr>")
            try:
                level = int(parts[2])
            except ValueError:
                fail(f"bad level {parts[2]!r}")
            expr = line.split(None, 3)[3]
            try:
                nu[(parts[1], level)] = parse_scalar(expr)
            except ParseError as exc:
                raise ParseError(f"in nu value: {exc}", text, start) from None
        elif key == "nu-default":
            if len(parts) < 2:
                fail("usage: nu-default <scalar-expr>")
            try:
                nu_default = parse_scalar(line.split(None, 1)[1])
            except ParseError as exc:
                raise ParseError(f"in nu-default: {exc}", text, start) from None
        else:
            fail(f"unknown directive {key!r}")
    for a, b in edges:
        for x in (a, b):
            if x not in vertices:
                raise QuiverError(f"edge {a}-{b} uses undeclared vertex {x!r}")
    for (vert, _level) in nu:
        if vert not in vertices:
            raise QuiverError(f"nu given for undeclared vertex {vert!r}")
    return QuiverSpec(vertices, edges, nu, nu_default, name=name)


def load_quiver(path):
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read(), name=str(path))


def dump_quiver(q):
    from .scalars import render
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"edge {a} {b}" for a, b in q.edges]
    if q.nu_default is not None:
        lines.append(f"nu-default {render(q.nu_default)}")
    for (i, l), val in sorted(q.nu_values.items()):
        lines.append(f"nu {q.vertices[i]} {l} {render(val)}")
    return "\n".join(lines) + "\n"


# -- presets ------------------------------------------------------------------

PRESETS = {
    "real": (["i"], []),
    "A2": (["i", "j"], [("i", "j")]),
    "jordan": (["i"], [("i", "i")]),
    "two-loop": (["i"], [("i", "i"), ("i", "i")]),
    "three-loop": (["i"], [("i", "i")] * 3),
    "A2-mixed": (["i", "j"], [("i", "j"), ("j", "j"), ("j", "j")]),
}

LUSZTIG_NU = parse_scalar("1/(1 - v^-2)")


def preset(name, nu_preset="one"):
    """A named test quiver; ``nu_preset`` is ``one`` or ``lusztig``."""
    try:
        verts, edges = PRESETS[name]
    except KeyError:
        raise QuiverError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    if nu_preset == "one":
        default = None
    elif nu_preset == "lusztig":
        default = LUSZTIG_NU
    else:
        raise QuiverError(f"unknown nu preset {nu_preset!r}")
    return QuiverSpec(verts, edges, nu_default=default, name=name)


def random_nu(q, seed, max_height):
    """Copy of ``q`` with seeded random ν_ι = 1 + a v^-1 + b v^-2, a, b in {0,1,2}.

    Every draw lies in 1 + v^-1 N[v^-1]; the draw order is vertex-major then
    level, so results are reproducible from the seed.
    """
    rng = random.Random(seed)
    nu = {}
    for g in q.gen_indices(max_height):
        a, b = rng.randint(0, 2), rng.randint(0, 2)
        nu[g] = ONE_S + a * Scalar.vpow(-1) + b * Scalar.vpow(-2)
    return q.with_nu(nu, q.nu_default, name=f"{q.name}/seed={seed}")


__all__ = [
    "QuiverSpec", "QuiverError", "MissingNuError", "compositions", "partitions",
    "enumerate_c", "quantum_integer", "quantum_factorial", "quantum_combinatorics",
    "parse_quiver", "load_quiver", "dump_quiver", "preset", "random_nu",
    "height", "V", "LUSZTIG_NU",
]
