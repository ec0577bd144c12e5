"""Truncated quasi-R-matrix Θ, Verma modules and the Casimir operator Ω."""
from collections import defaultdict
from dataclasses import dataclass, field

from .double import DoubleElem, _add_into
from .freealg import degrees_up_to, word_degree, word_height
from .pairing import HeightCutoffError
from .scalars import ONE_S, Scalar


def f_of(q, alpha):
    """f(α) = (α, α) + Σ_i α_i (i, i); ρ itself is never formed."""
    alpha = q.dimvec(alpha)
    return q.euler_form(alpha, alpha) + sum(a * q.form[i][i] for i, a in enumerate(alpha))


def f_identity_holds(q, alpha, i, l):
    """f(α − l·i) − f(α) + 2l(i, α) == l(l−1)(i, i)."""
    alpha = q.dimvec(alpha)
    i = q.index(i)
    shifted = tuple(a - (l if k == i else 0) for k, a in enumerate(alpha))
    lhs = f_of(q, shifted) - f_of(q, alpha) + 2 * l * q.euler_form(q.unit(i), alpha)
    return lhs == l * (l - 1) * q.form[i][i]


# -- Θ ----------------------------------------------------------------------------

@dataclass
class ThetaTrunc:
    cutoff: int
    components: dict = field(default_factory=dict)  # α -> list of (b⁻, b*)

    def tensor(self, alpha):
        out = {}
        for bm, bs in self.components[alpha]:
            for k1, c1 in bm.terms.items():
                for k2, c2 in bs.terms.items():
                    _add_into(out, (k1, k2), c1 * c2)
        return out


def theta_build(uplus, alg, p):
    """Θ_α = Σ_b b⁻ ⊗ b* for every α of height ≤ p."""
    q = alg.q
    z = alg.zero_mu
    th = ThetaTrunc(p)
    th.components[z] = [(alg.one(), alg.one())]
    for alpha in degrees_up_to(q, p):
        if not any(alpha):
            continue
        b = uplus.basis(alpha)
        pairs = []
        for col, w in enumerate(b.pivot_words):
            star = {((), z, u): b.gram_inverse[r][col]
                    for r, u in enumerate(b.pivot_words) if b.gram_inverse[r][col]}
            pairs.append((DoubleElem(alg, {(w, z, ()): ONE_S}), DoubleElem(alg, star)))
        if pairs:
            th.components[alpha] = pairs
    return th


def _ht(d):
    return sum(d)


def theta_residue(theta, alg, u):
    """Retained components of Δ(u)Θ − ΘΔ̄(u), grouped by right-leg degree.

    A right-leg degree γ is kept only when every Θ_α contributing to it has
    ht(α) ≤ p, i.e. the truncation cannot have cut off part of the sum.
    """
    p = theta.cutoff
    cop = alg.coproduct(u)
    bcop = alg.bar_coproduct(u)
    rdeg = {k: alg.key_degree(k[1]) for k in list(cop) + list(bcop)}
    if not rdeg:
        return {}
    min_h = min(_ht(d) for d in rdeg.values())
    out = defaultdict(dict)
    for alpha in theta.components:
        th = theta.tensor(alpha)
        for src, sign, left in ((cop, ONE_S, True), (bcop, -ONE_S, False)):
            for k, c in src.items():
                gamma = tuple(a + b for a, b in zip(rdeg[k], alpha))
                if _ht(gamma) - min_h > p:
                    continue
                prod = alg.tensor_mul({k: c}, th) if left else alg.tensor_mul(th, {k: c})
                acc = out[gamma]
                for kk, cc in prod.items():
                    _add_into(acc, kk, sign * cc)
    return dict(out)


def theta_intertwine_check(theta, alg, u):
    res = theta_residue(theta, alg, u)
    if not res:
        raise HeightCutoffError("height cutoff exceeded: no component of Δ(u)Θ is retained")
    return all(alg.tensor_is_zero(t) for t in res.values())


def _f_height(u):
    return max((word_height(k[0]) for k in u.terms), default=0)


def theta_module_residue(theta, verma, u, m1, m2):
    """Δ(u)Θ(m1⊗m2) − ΘΔ̄(u)(m1⊗m2) in M(α)⊗M(β), as {(F-word, F-word): Scalar}.

    The E-legs of Θ_γ kill every vector of depth < ht γ, so the truncated Θ
    acts exactly once the cutoff reaches depth(m2) plus the F-height of u.
    """
    need = m2.depth() + _f_height(u)
    if need > theta.cutoff:
        raise HeightCutoffError(
            f"height cutoff exceeded: Θ cutoff {theta.cutoff} < {need} needed on this vector")
    alg = verma.alg
    th = {}
    for alpha in theta.components:
        for k, c in theta.tensor(alpha).items():
            _add_into(th, k, c)
    vec = {(w1, w2): c1 * c2 for w1, c1 in m1.terms.items() for w2, c2 in m2.terms.items()}
    a, b = m1.alpha, m2.alpha
    lhs = verma.tensor_act(alg.coproduct(u), verma.tensor_act(th, vec, a, b), a, b)
    rhs = verma.tensor_act(th, verma.tensor_act(alg.bar_coproduct(u), vec, a, b), a, b)
    for k, c in rhs.items():
        _add_into(lhs, k, -c)
    return lhs


def theta_module_check(theta, verma, u, m1, m2):
    return verma.alg.P.tensor_is_zero(theta_module_residue(theta, verma, u, m1, m2))


def perturb_theta(theta, alpha, pair_index=0, delta=ONE_S):
    """Copy of Θ with one b* coefficient shifted by ``delta``."""
    comps = {a: list(v) for a, v in theta.components.items()}
    bm, bs = comps[alpha][pair_index]
    key = min(bs.terms)
    terms = dict(bs.terms)
    terms[key] = terms[key] + delta
    comps[alpha][pair_index] = (bm, DoubleElem(bs.alg, terms))
    return ThetaTrunc(theta.cutoff, comps)


# -- Verma modules --------------------------------------------------------------------

class VermaVec:
    """Element of M(α) = U / (Σ U E_ι + Σ U (K_i − v^(i,α))), stored on F-words."""

    __slots__ = ("alpha", "terms")

    def __init__(self, alpha, terms=None):
        self.alpha = tuple(alpha)
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def highest(cls, alpha):
        return cls(alpha, {(): ONE_S})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, c)
        return VermaVec(self.alpha, out)

    def __neg__(self):
        return VermaVec(self.alpha, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return VermaVec(self.alpha, {w: x * c for w, x in self.terms.items()})

    def depth(self):
        return max((word_height(w) for w in self.terms), default=0)

    def __repr__(self):
        return f"VermaVec({self.alpha}, {len(self.terms)} terms)"


class Verma:
    """Actions on Verma modules over a fixed double."""

    def __init__(self, alg):
        self.alg = alg
        self.q = alg.q
        self._act = {}

    def _act_key(self, key, w, alpha):
        ck = (key, w, alpha)
        res = self._act.get(ck)
        if res is not None:
            return res
        alg = self.alg
        f, mu, e = key
        out = {}
        for (fp, mp, ep), c in alg.straighten(e, w).items():
            if ep:
                continue
            wt = [a for a in alpha]
            for i, l in fp:
                wt[i] -= l
            x = alg.form(mu, tuple(wt)) + alg.form(mp, alpha)
            nw = f + fp
            if word_height(nw) > alg.max_height:
                raise HeightCutoffError(
                    f"height cutoff exceeded: {word_height(nw)} > {alg.max_height}")
            _add_into(out, nw, c * Scalar.vpow(x) if x else c)
        self._act[ck] = out
        return out

    def act(self, u, m):
        out = {}
        for key, c in u.terms.items():
            for w, d in m.terms.items():
                for nw, e in self._act_key(key, w, m.alpha).items():
                    _add_into(out, nw, c * d * e)
        return VermaVec(m.alpha, out)

    def tensor_act(self, t, vec, alpha, beta):
        """Action of a two-leg tensor on {(w1, w2): c} in M(alpha)⊗M(beta)."""
        out = {}
        for (k1, k2), c in t.items():
            for (w1, w2), d in vec.items():
                r1 = self._act_key(k1, w1, alpha)
                if not r1:
                    continue
                r2 = self._act_key(k2, w2, beta)
                for n1, e1 in r1.items():
                    for n2, e2 in r2.items():
                        _add_into(out, (n1, n2), c * d * e1 * e2)
        return out

    def is_zero(self, m):
        """Pairing-certified zero test on each weight space."""
        return self.alg.P.tensor_is_zero({(w,): c for w, c in m.terms.items()})

    def equal(self, a, b):
        return self.is_zero(a - b)

    def basis(self, alpha, depth, uplus):
        """F-pivot-word basis vectors of M(α) with depth ≤ ``depth``."""
        out = [VermaVec.highest(alpha)]
        for beta in degrees_up_to(self.q, depth):
            if any(beta):
                out += [VermaVec(alpha, {w: ONE_S}) for w in uplus.basis(beta).pivot_words]
        return out


class Casimir:
    """Ω_{≤p} = m(S⊗1)(Σ_{ht α ≤ p} Θ_α) acting on Verma modules."""

    def __init__(self, uplus, alg, margin=0):
        self.U = uplus
        self.alg = alg
        self.verma = Verma(alg)
        self.margin = margin
        self._sf = {}

    def _s_of_f(self, w):
        res = self._sf.get(w)
        if res is None:
            res = self.alg.antipode(DoubleElem(self.alg, {(w, self.alg.zero_mu, ()): ONE_S}))
            self._sf[w] = res
        return res

    def apply(self, m, p=None):
        if p is None:
            p = m.depth() + self.margin
        alg = self.alg
        z = alg.zero_mu
        out = VermaVec(m.alpha, dict(m.terms))
        for alpha in degrees_up_to(alg.q, p):
            if not any(alpha):
                continue
            b = self.U.basis(alpha)
            em = [self.verma.act(DoubleElem(alg, {((), z, u): ONE_S}), m) for u in b.pivot_words]
            if not any(x.terms for x in em):
                continue
            for col, w in enumerate(b.pivot_words):
                acc = VermaVec(m.alpha)
                for r in range(len(b.pivot_words)):
                    x = b.gram_inverse[r][col]
                    if x and em[r].terms:
                        acc = acc + em[r].scale(x)
                if acc.terms:
                    out = out + self.verma.act(self._s_of_f(w), acc)
        return out

    def identity_checks(self, alpha, i, l, depth):
        """The three commutation identities of Ω on a basis of M(α) to ``depth``.

        Returns a list of (name, vector index, passed).
        """
        alg = self.alg
        q = alg.q
        i = q.index(i)
        V = self.verma
        a = alg.from_free(self.U.primitive(i, l).representative, "E")
        b = alg.omega(a)
        Ki = alg.K(q.unit(i))
        Kl, Kml = alg.K(q.unit(i, l)), alg.K(q.unit(i, -l))
        res = []
        for n, m in enumerate(V.basis(alpha, depth, self.U)):
            d = m.depth()
            om = self.apply(m, d + self.margin)
            ok1 = V.equal(V.act(Ki, om), self.apply(V.act(Ki, m), d + self.margin))
            am = V.act(a, m)
            ok2 = V.equal(V.act(Kml * a, om), V.act(Kl, self.apply(am, am.depth() + self.margin)))
            kmk = V.act(Kl, self.apply(V.act(Kl, m), d + self.margin))
            bm = V.act(b, m)
            ok3 = V.equal(V.act(b, kmk), self.apply(bm, bm.depth() + self.margin))
            res += [("K", n, ok1), ("a", n, ok2), ("b", n, ok3)]
        return res
