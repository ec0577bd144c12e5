"""The NI-graded free algebra F on the E_ι, its twisted square F⊗F and δ.

A word is a tuple of generator indices ``(vertex, level)``; the empty tuple is
the unit.  Elements are sparse maps word -> Scalar.  Words are ordered by
length, then lexicographically on (vertex position, level).
"""
from collections import defaultdict

from .expr import Parser
from .quiver import QuiverError, quantum_factorial
from .scalars import ONE_S, V, Scalar


def word_key(w):
    return (len(w), w)


def word_degree(q, w):
    out = [0] * q.n
    for i, l in w:
        out[i] += l
    return tuple(out)


def word_height(w):
    return sum(l for _, l in w)


def _vpow_counts_to_scalar(d):
    # {exponent: integer multiplicity} -> Scalar
    d = {e: c for e, c in d.items() if c}
    if not d:
        return Scalar()
    lo = min(d)
    hi = max(d)
    coeffs = [0] * (hi - lo + 1)
    for e, c in d.items():
        coeffs[e - lo] = c
    if lo >= 0:
        return Scalar((0,) * lo + tuple(coeffs))
    return Scalar(tuple(coeffs), (0,) * (-lo) + (1,))


class FreeElem:
    """Finite linear combination of words with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def one(cls):
        return cls._raw({(): ONE_S})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def gen(cls, g):
        return cls._raw({(tuple(g),): ONE_S})

    @classmethod
    def word(cls, w, coeff=ONE_S):
        coeff = Scalar.coerce(coeff)
        return cls._raw({tuple(w): coeff} if coeff else {})

    @classmethod
    def scalar(cls, c):
        return cls.word((), c)

    # -- linear structure ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FreeElem):
            try:
                other = FreeElem.scalar(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return FreeElem._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElem._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElem):
            try:
                other = FreeElem.scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return FreeElem.scalar(other) - self

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return FreeElem.zero()
        return FreeElem._raw({w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElem):
            return fa_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, FreeElem):
            if len(other.terms) == 1 and () in other.terms:
                other = other.terms[()]
            else:
                raise TypeError("can only divide by scalars")
        return self.scale(ONE_S / Scalar.coerce(other))

    def __pow__(self, e):
        if isinstance(e, int) and set(self.terms) <= {()}:
            return FreeElem.scalar(self.coeff(()) ** e)
        if not isinstance(e, int) or e < 0:
            raise ValueError("free-algebra powers need a nonnegative integer exponent")
        out = FreeElem.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FreeElem):
            return self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == FreeElem.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coeff(self, w):
        return self.terms.get(tuple(w), Scalar())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def components(self, q):
        """Homogeneous components keyed by degree."""
        out = defaultdict(dict)
        for w, c in self.terms.items():
            out[word_degree(q, w)][w] = c
        return {d: FreeElem._raw(t) for d, t in out.items()}

    def degree(self, q):
        """Degree of a nonzero homogeneous element (error otherwise)."""
        degs = {word_degree(q, w) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("element is not homogeneous" if degs else "zero element has no degree")
        return degs.pop()

    def height(self):
        return max((word_height(w) for w in self.terms), default=0)

    def __repr__(self):
        return f"FreeElem({len(self.terms)} terms)"


def fa_mul(a, b):
    out = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = w1 + w2
            c = c1 * c2
            s = out.get(w)
            out[w] = c if s is None else s + c
    return FreeElem._raw({w: c for w, c in out.items() if c})


def bar(x):
    """Q-linear involution fixing every word and sending v to 1/v."""
    return FreeElem._raw({w: c.bar() for w, c in x.terms.items()})


class TensorElem:
    """Element of F⊗F as a sparse map (left word, right word) -> Scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    self.terms[(tuple(k[0]), tuple(k[1]))] = c

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def pure(cls, x, y):
        """x ⊗ y for free-algebra elements."""
        out = {}
        for a, c in x.terms.items():
            for b, d in y.terms.items():
                out[(a, b)] = c * d
        return cls._raw({k: c for k, c in out.items() if c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElem._raw(out)

    def __neg__(self):
        return TensorElem._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar.coerce(c)
        return TensorElem._raw({k: x * c for k, x in self.terms.items()} if c else {})

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def bidegrees(self, q):
        return {(word_degree(q, a), word_degree(q, b)) for a, b in self.terms}

    def __repr__(self):
        return f"TensorElem({len(self.terms)} terms)"


def tensor_mul(q, x, y):
    """(a⊗b)(c⊗d) = v^((|b|,|c|)) ac⊗bd."""
    out = defaultdict(Scalar)
    for (a, b), c1 in x.terms.items():
        db = word_degree(q, b)
        for (c, d), c2 in y.terms.items():
            e = q.euler_form(db, word_degree(q, c))
            out[(a + c, b + d)] = out[(a + c, b + d)] + c1 * c2 * Scalar.vpow(e)
    return TensorElem._raw({k: c for k, c in out.items() if c})


def _delta_word_counts(q, w):
    # (left, right) -> {v-exponent: multiplicity} for δ(w)
    form = q.form
    n = q.n
    states = {((), (), (0,) * n): {0: 1}}
    for (i, l) in w:
        half = form[i][i] // 2
        new = defaultdict(lambda: defaultdict(int))
        for (lw, rw, rdeg), exps in states.items():
            twist_unit = sum(rdeg[j] * form[j][i] for j in range(n) if rdeg[j])
            for t in range(l + 1):
                tp = l - t
                shift = half * t * tp + twist_unit * t
                nl = lw + ((i, t),) if t else lw
                if tp:
                    nr = rw + ((i, tp),)
                    nd = list(rdeg)
                    nd[i] += tp
                    nd = tuple(nd)
                else:
                    nr, nd = rw, rdeg
                bucket = new[(nl, nr, nd)]
                for e, c in exps.items():
                    bucket[e + shift] += c
        states = new
    out = defaultdict(lambda: defaultdict(int))
    for (lw, rw, _), exps in states.items():
        for e, c in exps.items():
            out[(lw, rw)][e] += c
    return out


def delta_word(q, w):
    """δ on a single word as a TensorElem (cached per quiver)."""
    cache = q.__dict__.setdefault("_delta_cache", {})
    res = cache.get(w)
    if res is None:
        terms = {}
        for k, exps in _delta_word_counts(q, w).items():
            s = _vpow_counts_to_scalar(exps)
            if s:
                terms[k] = s
        res = TensorElem._raw(terms)
        cache[w] = res
    return res


def delta(q, x):
    """The comultiplication δ: F -> F⊗F (twisted), an algebra morphism."""
    out = defaultdict(Scalar)
    for w, c in x.terms.items():
        for k, d in delta_word(q, w).terms.items():
            out[k] = out[k] + c * d
    return TensorElem._raw({k: c for k, c in out.items() if c})


def divided_power_word(q, j, t):
    """E_j^(t) = E_j^t / [t]_v! at a real vertex j."""
    j = q.index(j)
    if not q.is_real(j):
        raise QuiverError("divided powers are only defined at real vertices")
    if t < 0:
        raise ValueError("t must be nonnegative")
    return FreeElem.word(((j, 1),) * t, ONE_S / quantum_factorial(t))


# -- triple tensors for coassociativity -----------------------------------------

def delta_left(q, t):
    """(δ ⊗ id) applied to a TensorElem; returns {(w1, w2, w3): Scalar}."""
    out = defaultdict(Scalar)
    for (a, b), c in t.terms.items():
        for (a1, a2), d in delta_word(q, a).terms.items():
            out[(a1, a2, b)] = out[(a1, a2, b)] + c * d
    return {k: c for k, c in out.items() if c}


def delta_right(q, t):
    """(id ⊗ δ) applied to a TensorElem."""
    out = defaultdict(Scalar)
    for (a, b), c in t.terms.items():
        for (b1, b2), d in delta_word(q, b).terms.items():
            out[(a, b1, b2)] = out[(a, b1, b2)] + c * d
    return {k: c for k, c in out.items() if c}


def all_words(q, alpha):
    """Every word of degree ``alpha``, in canonical order."""
    alpha = tuple(alpha)
    cache = q.__dict__.setdefault("_words_cache", {})
    res = cache.get(alpha)
    if res is not None:
        return res
    if any(a < 0 for a in alpha):
        res = []
    elif not any(alpha):
        res = [()]
    else:
        res = []
        for i, a in enumerate(alpha):
            if a == 0:
                continue
            top = a if q.loops[i] >= 1 else 1
            for l in range(1, top + 1):
                rest = list(alpha)
                rest[i] -= l
                for w in all_words(q, tuple(rest)):
                    res.append(((i, l),) + w)
        res.sort(key=word_key)
    cache[alpha] = res
    return res


def degrees_up_to(q, max_height):
    """All nonzero-or-zero dimension vectors in NI of height <= max_height."""
    out = []

    def rec(prefix, left):
        if len(prefix) == q.n:
            out.append(tuple(prefix))
            return
        for a in range(left + 1):
            rec(prefix + [a], left - a)

    rec([], max_height)
    out.sort(key=lambda d: (sum(d), tuple(-x for x in d)))
    return out


# -- text form ------------------------------------------------------------------

def render_word(q, w, letter="E"):
    if not w:
        return "1"
    return "*".join(f"{letter}[{q.vertices[i]},{l}]" for i, l in w)


def render_coeff_term(c, body):
    from .scalars import render
    text = render(c)
    if text.startswith("-") and " " not in text:
        # single negative term: pull the sign out so sums read "a - (1/2)*b"
        return "-" + render_coeff_term(-c, body)
    if body == "1":
        return f"({text})"
    if c == 1:
        return body
    return f"({text})*{body}"


def render(q, x):
    """Text form ``(coef)*E[i,l]*E[j,k] + ...``; ``parse_free`` inverts it."""
    if not x.terms:
        return "0"
    parts = [render_coeff_term(c, render_word(q, w)) for w, c in x.sorted_terms()]
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def gen_from_args(q, args):
    if len(args) != 2:
        raise ValueError("expected [vertex,level]")
    i = q.index(str(args[0]))
    level = int(args[1])
    if not q.is_gen((i, level)):
        raise ValueError(f"({args[0]},{level}) is not in I_inf")
    return (i, level)


def parse_free(q, text):
    def const(x):
        return FreeElem.scalar(V if x == "v" else Scalar.coerce(x))

    def atom(name, args):
        if name != "E":
            raise ValueError("only E generators live in F")
        return FreeElem.gen(gen_from_args(q, args))

    return Parser(text, const, atom).parse()
