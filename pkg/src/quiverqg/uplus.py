"""U⁺ = F / radical: bases with dual data, primitive elements, δ-components.

Equality in U⁺ is always decided through pairing coordinates; lifts to F are
whatever the pivoted solves produce and are only meaningful modulo the
radical.
"""
from dataclasses import dataclass

from . import linalg
from .freealg import FreeElem, TensorElem, bar, delta
from .quiver import QuiverError, compositions, enumerate_c, partitions
from .scalars import ONE_S


class DegenerateFormError(ArithmeticError):
    pass


@dataclass
class UPlusBasis:
    degree: tuple
    pivot_words: list
    gram: list
    gram_inverse: list


@dataclass
class PrimitiveData:
    vertex: int
    level: int
    representative: FreeElem
    tau: object
    lower_words: list


def _word(i, c):
    return tuple((i, part) for part in c)


class UPlus:
    def __init__(self, pairing):
        self.P = pairing
        self.q = pairing.q
        self._basis = {}
        self._prim = {}
        self._extract = {}

    # -- bases ------------------------------------------------------------------
    def basis(self, alpha):
        """Pivot words spanning U⁺[alpha] with the inverse of their Gram block."""
        alpha = self.q.dimvec(alpha)
        res = self._basis.get(alpha)
        if res is None:
            g = self.P.gram(alpha)
            words = [g.words[k] for k in g.pivots]
            block = [[self.P.pair_words(a, b) for b in words] for a in words]
            try:
                inv = linalg.inverse(block)
            except linalg.SingularMatrixError:
                raise ArithmeticError(
                    f"internal consistency error: pivot Gram block at {alpha} is singular") from None
            res = UPlusBasis(alpha, words, block, inv)
            self._basis[alpha] = res
        return res

    def coords(self, x):
        return self.P.uplus_coords(x)

    def equal(self, x, y):
        return self.P.in_radical(x - y)

    # -- primitive elements ------------------------------------------------------
    def primitive(self, i, l):
        """The element a_(i,l): E_(i,l) corrected to be orthogonal to lower products."""
        i = self.q.index(i)
        key = (i, l)
        res = self._prim.get(key)
        if res is not None:
            return res
        if not self.q.is_imaginary(i):
            if l != 1:
                raise QuiverError("real vertices only carry level 1")
            rep = FreeElem.gen((i, 1))
            res = PrimitiveData(i, 1, rep, self.q.nu((i, 1)), [])
            self._prim[key] = res
            return res
        self.P.check_height(l)
        span = partitions(l) if self.q.is_isotropic(i) else compositions(l)
        span = [c for c in span if c and max(c) < l]
        constraints = [c for c in compositions(l) if max(c) < l]
        head = _word(i, (l,))
        rep = FreeElem.gen((i, l))
        if span:
            pw = self.P.pair_words
            mat = [[pw(_word(i, c), _word(i, z)) for c in span] for z in constraints]
            rhs = [pw(head, _word(i, z)) for z in constraints]
            try:
                x = linalg.solve(mat, rhs)
            except linalg.InconsistentSystemError:
                raise DegenerateFormError(
                    "pairing degenerate beyond radical; hypothesis (hypo) violated") from None
            for c, coef in zip(span, x):
                if coef:
                    rep = rep - FreeElem.word(_word(i, c), coef)
        tau = self.P.pair(rep, rep)
        res = PrimitiveData(i, l, rep, tau, [_word(i, c) for c in span])
        self._prim[key] = res
        return res

    def uniqueness_check(self, p):
        """Every other solution of the orthogonality system agrees with a modulo the radical."""
        if not p.lower_words:
            return True
        i, l = p.vertex, p.level
        pw = self.P.pair_words
        constraints = [c for c in compositions(l) if max(c) < l]
        mat = [[pw(w, _word(i, z)) for w in p.lower_words] for z in constraints]
        for vec in linalg.kernel(mat, len(p.lower_words)):
            x = FreeElem({w: c for w, c in zip(p.lower_words, vec) if c})
            if not self.P.in_radical(x):
                return False
        return True

    def a_c(self, i, c):
        """a_(i,c) = Π_j a_(i,c_j)."""
        out = FreeElem.one()
        for part in c:
            out = out * self.primitive(i, part).representative
        return out

    def check_primitivity(self, p):
        """δ(a) - a⊗1 - 1⊗a vanishes in U⁺⊗U⁺."""
        rep = p.representative
        one = FreeElem.one()
        d = delta(self.q, rep) - TensorElem.pure(rep, one) - TensorElem.pure(one, rep)
        return self.P.tensor_is_zero(d.terms)

    def bar_invariance_check(self, p):
        return self.P.in_radical(bar(p.representative) - p.representative)

    def lower_orthogonality_check(self, p):
        """⟨a, z⟩ = 0 for every word z in the subalgebra of lower levels."""
        if p.level == 1 or not self.q.is_imaginary(p.vertex):
            return True
        i = p.vertex
        for z in compositions(p.level):
            if max(z) < p.level and self.P.pair(p.representative, FreeElem.word(_word(i, z))):
                return False
        return True

    def lower_span_check(self, p):
        """a - E_(i,l) only involves words E_(i,c) with every part below l."""
        diff = p.representative - FreeElem.gen((p.vertex, p.level))
        return all(all(g[0] == p.vertex and g[1] < p.level for g in w) and len(w) >= 2
                   for w in diff.terms)

    # -- δ-components --------------------------------------------------------------
    def _extraction(self, i, l):
        key = (i, l)
        res = self._extract.get(key)
        if res is None:
            cs = enumerate_c(self.q, i, l)
            elems = [self.a_c(i, c) for c in cs]
            mat = [[self.P.pair(a, b) for b in elems] for a in elems]
            try:
                inv = linalg.inverse(mat)
            except linalg.SingularMatrixError:
                raise DegenerateFormError(
                    f"products a_(i,c) do not form a basis of U+[{l}i]") from None
            res = (cs, elems, inv, {})
            self._extract[key] = res
        return res

    def _leg_coords(self, i, l, w):
        # coefficients of the word w in the basis {a_(i,c)} modulo the radical
        cs, elems, inv, memo = self._extraction(i, l)
        res = memo.get(w)
        if res is None:
            we = FreeElem.word(w)
            b = [self.P.pair(we, a) for a in elems]
            res = [sum((b[k] * inv[k][m] for k in range(len(cs))), 0 * ONE_S)
                   for m in range(len(cs))]
            memo[w] = res
        return res

    def delta_component(self, i, c, x, side="lower"):
        """δ_(i,c)(x) (side='lower', a_(i,c) in the right leg) or δ^(i,c)(x)."""
        i = self.q.index(i)
        if not self.q.is_imaginary(i):
            raise QuiverError("delta components are taken at imaginary vertices")
        c = tuple(c)
        l = sum(c)
        cs = enumerate_c(self.q, i, l)
        if c not in cs:
            raise QuiverError(f"{c} is not in C_(i,{l})")
        idx = cs.index(c)
        target = self.q.unit(i, l)
        out = {}
        for (a, b), coef in delta(self.q, x).terms.items():
            leg, other = (b, a) if side == "lower" else (a, b)
            if self.P.degree(leg) != target:
                continue
            m = self._leg_coords(i, l, leg)[idx]
            if m:
                s = out.get(other)
                out[other] = coef * m if s is None else s + coef * m
        return FreeElem({w: s for w, s in out.items() if s})

    def spanning_rank(self, i, l):
        """Rank of the Gram matrix of {a_(i,c) : c in C_(i,l)}."""
        cs = enumerate_c(self.q, i, l)
        elems = [self.a_c(i, c) for c in cs]
        mat = [[self.P.pair(a, b) for b in elems] for a in elems]
        return linalg.rank(mat)
