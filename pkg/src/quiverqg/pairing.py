"""The Hopf pairing on F, Gram tables, the radical and relation elements."""
from collections import defaultdict
from dataclasses import dataclass, field

from . import linalg
from .freealg import (FreeElem, all_words, divided_power_word, word_degree,
                      word_height)
from .quiver import QuiverError
from .scalars import ONE_S, Scalar


class HeightCutoffError(ValueError):
    """An operation would touch degrees above the session height cutoff."""


@dataclass
class GramTable:
    degree: tuple
    words: list
    matrix: list
    rank: int
    kernel_basis: list
    pivots: list = field(default_factory=list)
    row_pivots: list = field(default_factory=list)

    @property
    def kernel_dim(self):
        return len(self.kernel_basis)

    def is_symmetric(self):
        n = len(self.words)
        return all(self.matrix[r][c] == self.matrix[c][r]
                   for r in range(n) for c in range(r + 1, n))


class Pairing:
    """The bilinear form ⟨-,-⟩ on F for a fixed quiver, ν and height cutoff.

    Word-pair values, Gram tables and pairing coordinates are memoized; the
    instance is the per-session cache.
    """

    def __init__(self, q, max_height):
        if max_height < 1:
            raise ValueError("max_height must be at least 1")
        self.q = q
        self.max_height = max_height
        q.validate_nu(max_height)
        self._pw = {}
        self._rstar = {}
        self._gram = {}
        self._coords = {}
        self._deg = {}
        self._vi = [q.v_sub_i(i) for i in range(q.n)]

    # -- helpers -----------------------------------------------------------
    def check_height(self, h):
        if h > self.max_height:
            raise HeightCutoffError(
                f"height cutoff exceeded: {h} > {self.max_height}")

    def degree(self, w):
        d = self._deg.get(w)
        if d is None:
            d = word_degree(self.q, w)
            self._deg[w] = d
        return d

    def nu(self, gen):
        return self.q.nu(gen)

    # -- the form ------------------------------------------------------------
    def rstar(self, gen, y):
        """Σ ⟨E_gen, y₍₁₎⟩ y₍₂₎ over the terms of δ(y) with |y₍₁₎| = |gen|."""
        key = (gen, y)
        res = self._rstar.get(key)
        if res is not None:
            return res
        i, l = gen
        if l == 0:
            res = {y: ONE_S}
        elif not y:
            res = {}
        else:
            form = self.q.form
            i0, l0 = y[0]
            rest = y[1:]
            acc = defaultdict(Scalar)
            tmax = min(l0, l) if i0 == i else 0
            for t in range(tmax + 1):
                tp = l0 - t
                base = self._vi[i0] ** (t * tp)
                if t:
                    base = base * self._vi[i] ** (t * (l - t)) * self.nu((i, t))
                sub = self.rstar((i, l - t), rest)
                if not sub:
                    continue
                twist = Scalar.vpow(tp * (l - t) * form[i0][i])
                coef = base * twist
                for b, c in sub.items():
                    w = ((i0, tp),) + b if tp else b
                    acc[w] = acc[w] + coef * c
            res = {w: c for w, c in acc.items() if c}
        self._rstar[key] = res
        return res

    def pair_words(self, x, y):
        if x == y == ():
            return ONE_S
        key = (x, y)
        res = self._pw.get(key)
        if res is not None:
            return res
        if not x or not y or self.degree(x) != self.degree(y):
            res = Scalar()
        else:
            self.check_height(word_height(x))
            acc = Scalar()
            head, tail = x[0], x[1:]
            for w, c in self.rstar(head, y).items():
                p = self.pair_words(tail, w)
                if p:
                    acc = acc + c * p
            res = acc
        self._pw[key] = res
        return res

    def pair(self, x, y):
        """⟨x, y⟩ for free-algebra elements (bilinear)."""
        acc = Scalar()
        for a, c in x.terms.items():
            da = self.degree(a)
            for b, d in y.terms.items():
                if self.degree(b) != da:
                    continue
                p = self.pair_words(a, b)
                if p:
                    acc = acc + c * d * p
        return acc

    def pair_tensor(self, s, t):
        """⟨a⊗b, c⊗d⟩ = ⟨a,c⟩⟨b,d⟩ extended bilinearly."""
        acc = Scalar()
        for (a, b), c in s.terms.items():
            for (x, y), d in t.terms.items():
                p = self.pair_words(a, x)
                if p:
                    p2 = self.pair_words(b, y)
                    if p2:
                        acc = acc + c * d * p * p2
        return acc

    # -- Gram tables ----------------------------------------------------------
    def gram(self, alpha):
        alpha = self.q.dimvec(alpha)
        res = self._gram.get(alpha)
        if res is not None:
            return res
        self.check_height(sum(alpha))
        words = all_words(self.q, alpha)
        mat = [[self.pair_words(a, b) for b in words] for a in words]
        if words:
            ech = linalg.bareiss(mat)
            pivots = ech[1]
            tr = linalg.transpose(mat)
            # for a symmetric matrix the transposed elimination is the same computation
            row_pivots = pivots if tr == mat else linalg.bareiss(tr)[1]
            kern = linalg.kernel(mat, len(words), echelon=ech)
        else:
            pivots, row_pivots, kern = [], [], []
        kb = [FreeElem({w: c for w, c in zip(words, vec) if c}) for vec in kern]
        res = GramTable(alpha, words, mat, len(pivots), kb, pivots, row_pivots)
        self._gram[alpha] = res
        return res

    def graded_dim(self, alpha):
        return self.gram(alpha).rank

    # -- coordinates and radical -----------------------------------------------
    def coords(self, w):
        """Values ⟨u, w⟩ for u over a basis of the row space of the Gram matrix."""
        res = self._coords.get(w)
        if res is None:
            g = self.gram(self.degree(w))
            res = tuple(self.pair_words(g.words[r], w) for r in g.row_pivots)
            self._coords[w] = res
        return res

    def uplus_coords(self, x):
        """Vector (⟨w, x⟩) over every word w of degree |x| (x homogeneous)."""
        if x.is_zero():
            return []
        g = self.gram(x.degree(self.q))
        return [self.pair(FreeElem.word(w), x) for w in g.words]

    def in_radical(self, x):
        """True iff every homogeneous component of x pairs to 0 with all words."""
        for comp in x.components(self.q).values():
            acc = None
            for w, c in comp.terms.items():
                vec = self.coords(w)
                if acc is None:
                    acc = [c * a for a in vec]
                else:
                    acc = [s + c * a for s, a in zip(acc, vec)]
            if acc and any(acc):
                return False
        return True

    def is_zero_mod_radical(self, x):
        return self.in_radical(x)

    def tensor_is_zero(self, terms):
        """Multi-leg zero test in U⁺⊗...⊗U⁺.

        ``terms`` maps tuples of words to Scalars; the tensor vanishes iff it
        pairs to zero with every tuple of words of matching degrees.
        """
        current = {((), k): c for k, c in terms.items() if c}
        if not current:
            return True
        nlegs = len(next(iter(terms)))
        for _ in range(nlegs):
            nxt = defaultdict(Scalar)
            for (done, rest), c in current.items():
                w = rest[0]
                d = self.degree(w)
                for j, g in enumerate(self.coords(w)):
                    if g:
                        key = (done + ((d, j),), rest[1:])
                        nxt[key] = nxt[key] + c * g
            current = {k: c for k, c in nxt.items() if c}
            if not current:
                return True
        return not current


# -- relation elements ----------------------------------------------------------

def serre_element(q, gen, j):
    """Σ_{t+t'=-(ι,j)+1} (-1)^t E_j^(t) E_ι E_j^(t') for a real vertex j."""
    j = q.index(j)
    gen = (q.index(gen[0]), gen[1])
    if not q.is_real(j):
        raise QuiverError("Serre elements need a real vertex j")
    if not q.is_gen(gen):
        raise QuiverError(f"{gen} is not in I_inf")
    top = -q.gen_pairing(gen, j) + 1
    if top < 0:
        raise QuiverError(f"-(ι,j)+1 = {top} is negative")
    e = FreeElem.gen(gen)
    out = FreeElem.zero()
    for t in range(top + 1):
        term = divided_power_word(q, j, t) * e * divided_power_word(q, j, top - t)
        out = out + (term if t % 2 == 0 else -term)
    return out


def iso_commutator(q, i, l, k):
    """[E_(i,l), E_(i,k)] at an isotropic vertex."""
    i = q.index(i)
    if not q.is_isotropic(i):
        raise QuiverError(f"vertex {q.vertices[i]!r} is not isotropic")
    a, b = FreeElem.gen((i, l)), FreeElem.gen((i, k))
    return a * b - b * a
