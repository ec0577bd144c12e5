"""The Drinfeld double U in triangular normal form F-word · K_μ · E-word.

A term key is ``(fword, mu, eword)``.  The only rewriting rule beyond the
K-commutations is the cross relation E_(i,l) F_(j,k) = F E + (lower terms),
obtained by instantiating the Drinfeld double relation with a = E_(i,l),
b = E_(j,k) and solving for the single E·F term.  Equality is decided by
pairing certificates (``is_zero``), never by comparing monomials.
"""
from collections import defaultdict

from .freealg import FreeElem, gen_from_args, word_height
from .expr import Parser
from .scalars import ONE_S, V, Scalar, render as render_scalar
from .quiver import QuiverError


def _neg(mu):
    return tuple(-m for m in mu)


def _addv(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _add_into(acc, key, c):
    s = acc.get(key)
    if s is None:
        acc[key] = c
    else:
        s = s + c
        if s:
            acc[key] = s
        else:
            del acc[key]


class DoubleElem:
    """Sparse combination of normal-form monomials of the double."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        other = self.alg.coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return DoubleElem(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return DoubleElem(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __rsub__(self, other):
        return self.alg.coerce(other) - self

    def scale(self, c):
        c = Scalar.coerce(c)
        return DoubleElem(self.alg, {k: x * c for k, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, DoubleElem):
            return self.alg.mul(self, other)
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, DoubleElem):
            c = self.alg.as_scalar(other)
            if c is None:
                raise TypeError("can only divide by scalars")
            other = c
        return self.scale(ONE_S / Scalar.coerce(other))

    def __pow__(self, e):
        if not isinstance(e, int):
            raise ValueError("integer exponent required")
        c = self.alg.as_scalar(self)
        if c is not None:
            return self.alg.scalar(c ** e)
        if e < 0:
            if len(self.terms) == 1:
                (f, mu, ee), coef = next(iter(self.terms.items()))
                if not f and not ee:
                    return DoubleElem(self.alg, {((), tuple(-m * 1 for m in mu), ()): ONE_S / coef}) ** (-e)
            raise ValueError("only K monomials can be inverted")
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, DoubleElem):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"DoubleElem({self.alg.render(self)!r})"


class DoubleAlgebra:
    def __init__(self, pairing):
        self.P = pairing
        self.q = pairing.q
        self.n = self.q.n
        self.zero_mu = (0,) * self.n
        self.max_height = pairing.max_height
        self._cross = {}
        self._straight = {}
        self._antipode = {}
        self._skew = {}
        self._cop_cache = {}
        self._vi = [self.q.v_sub_i(i) for i in range(self.n)]

    # -- construction ------------------------------------------------------------
    def elem(self, terms):
        return DoubleElem(self, terms)

    def one(self):
        return DoubleElem(self, {((), self.zero_mu, ()): ONE_S})

    def scalar(self, c):
        return DoubleElem(self, {((), self.zero_mu, ()): Scalar.coerce(c)})

    def coerce(self, x):
        if isinstance(x, DoubleElem):
            return x
        return self.scalar(x)

    def as_scalar(self, x):
        if not x.terms:
            return Scalar()
        if set(x.terms) == {((), self.zero_mu, ())}:
            return x.terms[((), self.zero_mu, ())]
        return None

    def E(self, gen):
        return DoubleElem(self, {((), self.zero_mu, (tuple(gen),)): ONE_S})

    def F(self, gen):
        return DoubleElem(self, {((tuple(gen),), self.zero_mu, ()): ONE_S})

    def K(self, mu):
        return DoubleElem(self, {((), self.q.dimvec(mu), ()): ONE_S})

    def from_free(self, x, letter="E"):
        """Image of a free-algebra element as E-words (or F-words)."""
        z = self.zero_mu
        if letter == "E":
            return DoubleElem(self, {((), z, w): c for w, c in x.terms.items()})
        return DoubleElem(self, {(w, z, ()): c for w, c in x.terms.items()})

    # -- degree helpers -------------------------------------------------------------
    def wdeg(self, w):
        return self.P.degree(w)

    def form(self, a, b):
        f = self.q.form
        n = self.n
        return sum(a[i] * f[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def _check(self, key):
        h = max(word_height(key[0]), word_height(key[2]))
        if h > self.max_height:
            from .pairing import HeightCutoffError
            raise HeightCutoffError(f"height cutoff exceeded: {h} > {self.max_height}")

    # -- multiplication -------------------------------------------------------------
    def cross(self, egen, fgen):
        """Normal form of E_egen · F_fgen."""
        key = (egen, fgen)
        res = self._cross.get(key)
        if res is not None:
            return res
        z = self.zero_mu
        i, l = egen
        j, k = fgen
        out = {((fgen,), z, (egen,)): ONE_S}
        if i == j:
            vi = self._vi[i]
            ii = self.q.form[i][i]
            for t in range(1, min(l, k) + 1):
                c = vi ** (t * (l - t) + t * (k - t)) * self.q.nu((i, t))
                # LHS Sweedler term  F_(i,k-t) K_(-ti) E_(i,l-t)
                f = ((i, k - t),) if k > t else ()
                e = ((i, l - t),) if l > t else ()
                mu = self.q.unit(i, -t)
                _add_into(out, (f, mu, e), c)
                # RHS term  E_(i,l-t) K_(ti) F_(i,k-t), moved to the other side
                kf = Scalar.vpow(-t * (k - t) * ii)  # K_(ti) F_(i,k-t) = kf · F K
                ef = self._mul_keys(((), z, e), (f, z, ()))
                kt = ((), self.q.unit(i, t), ())
                for kk, cc in ef.items():
                    for k2, c2 in self._mul_keys(kk, kt).items():
                        _add_into(out, k2, -c * kf * cc * c2)
        self._cross[key] = out
        return out

    def straighten(self, e, f):
        """Normal form of E_e · F_f as a term dict."""
        if not e or not f:
            return {(f, self.zero_mu, e): ONE_S}
        key = (e, f)
        res = self._straight.get(key)
        if res is not None:
            return res
        if len(e) == 1 and len(f) == 1:
            res = self.cross(e[0], f[0])
        else:
            z = self.zero_mu
            left = {((), z, e[:-1]): ONE_S}
            mid = self._mul_dicts(left, self.cross(e[-1], f[0]))
            res = self._mul_dicts(mid, {(f[1:], z, ()): ONE_S})
        self._straight[key] = res
        return res

    def _mul_keys(self, k1, k2):
        f1, m1, e1 = k1
        f2, m2, e2 = k2
        if not e1 or not f2:
            # no straightening needed: K_m1 past f2 and e1 past K_m2
            x = 0
            if f2:
                x -= self.form(m1, self.wdeg(f2))
            if e1:
                x -= self.form(m2, self.wdeg(e1))
            return {(f1 + f2, _addv(m1, m2), e1 + e2): Scalar.vpow(x)}
        out = {}
        for (fp, mp, ep), c in self.straighten(e1, f2).items():
            x = 0
            if fp:
                x -= self.form(m1, self.wdeg(fp))
            if ep:
                x -= self.form(m2, self.wdeg(ep))
            key = (f1 + fp, _addv(_addv(m1, mp), m2), ep + e2)
            _add_into(out, key, c * Scalar.vpow(x) if x else c)
        return out

    def _mul_dicts(self, a, b):
        out = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                for k, c in self._mul_keys(k1, k2).items():
                    _add_into(out, k, c1 * c2 * c)
        return out

    def mul(self, a, b):
        out = self._mul_dicts(a.terms, b.terms)
        for k in out:
            self._check(k)
        return DoubleElem(self, out)

    # -- involutions ------------------------------------------------------------------
    def omega(self, x):
        """Automorphism E ↔ F, K_μ ↦ K_-μ."""
        out = {}
        z = self.zero_mu
        for (f, mu, e), c in x.terms.items():
            t = self._mul_keys(((), z, f), ((), _neg(mu), ()))
            t = self._mul_dicts(t, {(e, z, ()): ONE_S})
            for k, d in t.items():
                _add_into(out, k, c * d)
        return DoubleElem(self, out)

    def bar(self, x):
        """E, F fixed, K_μ ↦ K_-μ, v ↦ 1/v (the normal form is preserved)."""
        return DoubleElem(self, {(f, _neg(mu), e): c.bar() for (f, mu, e), c in x.terms.items()})

    def counit(self, x):
        acc = Scalar()
        for (f, mu, e), c in x.terms.items():
            if not f and not e:
                acc = acc + c
        return acc

    # -- coproduct ----------------------------------------------------------------------
    def _cop_letter(self, letter, gen):
        i, l = gen
        vi = self._vi[i]
        ii = self.q.form[i][i]
        z = self.zero_mu
        out = {}
        for t in range(l + 1):
            tp = l - t
            if letter == "E":
                # v_i^{tt'} E_(i,t) K_(t'i) ⊗ E_(i,t'), with E K = v^{-(t'i,ti)} K E
                c = vi ** (t * tp) * Scalar.vpow(-t * tp * ii)
                left = ((), self.q.unit(i, tp), ((i, t),) if t else ())
                right = ((), z, ((i, tp),) if tp else ())
            else:
                # v_i^{-tt'} F_(i,t) ⊗ K_(-ti) F_(i,t'), with K F = v^{tt'(i,i)} F K
                c = vi ** (-t * tp) * Scalar.vpow(t * tp * ii)
                left = (((i, t),) if t else (), z, ())
                right = (((i, tp),) if tp else (), self.q.unit(i, -t), ())
            out[(left, right)] = c
        return out

    def _tensor_mul_dicts(self, a, b):
        out = {}
        for (l1, r1), c1 in a.items():
            for (l2, r2), c2 in b.items():
                ls = self._mul_keys(l1, l2)
                rs = self._mul_keys(r1, r2)
                c12 = c1 * c2
                for kl, cl in ls.items():
                    for kr, cr in rs.items():
                        _add_into(out, (kl, kr), c12 * cl * cr)
        return out

    def _cop_word(self, letter, w):
        key = (letter, w)
        res = self._cop_cache.get(key)
        if res is None:
            z = self.zero_mu
            res = {(((), z, ()), ((), z, ())): ONE_S}
            for g in w:
                res = self._tensor_mul_dicts(res, self._cop_letter(letter, g))
            self._cop_cache[key] = res
        return res

    def coproduct(self, x):
        """Δ(x) as a dict (left key, right key) -> Scalar."""
        out = {}
        for (f, mu, e), c in x.terms.items():
            kk = {(((), mu, ()), ((), mu, ())): ONE_S}
            t = self._tensor_mul_dicts(self._cop_word("F", f), kk)
            t = self._tensor_mul_dicts(t, self._cop_word("E", e))
            for k, d in t.items():
                _add_into(out, k, c * d)
        return out

    def tensor_mul(self, a, b):
        return self._tensor_mul_dicts(a, b)

    def tensor_bar(self, t):
        return {((fl, _neg(ml), el), (fr, _neg(mr), er)): c.bar()
                for ((fl, ml, el), (fr, mr, er)), c in t.items()}

    def tensor_swap(self, t):
        return {(r, l): c for (l, r), c in t.items()}

    # -- antipodes ------------------------------------------------------------------------
    def _antipode_gen(self, letter, gen, skew):
        cache = self._skew if skew else self._antipode
        key = (letter, gen)
        res = cache.get(key)
        if res is not None:
            return res
        i, l = gen
        vi = self._vi[i]
        z = self.zero_mu
        unit = self.q.unit
        one = {((), z, ()): ONE_S}

        def K(m):
            return {((), m, ()): ONE_S}

        def Eg(t):
            return {((), z, ((i, t),)): ONE_S}

        def Fg(t):
            return {(((i, t),), z, ()): ONE_S}

        md = self._mul_dicts
        acc = {}
        if letter == "E" and not skew:
            # S(E_l) = -K_(-l i) E_l - Σ_{0<t<l} v_i^{t(l-t)} K_(-(l-t)i) S(E_t) E_(l-t)
            for k, c in md(K(unit(i, -l)), Eg(l)).items():
                _add_into(acc, k, c)
            for t in range(1, l):
                term = md(md(K(unit(i, -(l - t))), self._antipode_gen("E", (i, t), False)), Eg(l - t))
                cf = vi ** (t * (l - t))
                for k, c in term.items():
                    _add_into(acc, k, cf * c)
        elif letter == "F" and not skew:
            # S(F_l) = -(F_l + Σ_{0<t<l} v_i^{-t(l-t)} S(F_t) K_(-ti) F_(l-t)) K_(l i)
            inner = dict(Fg(l))
            for t in range(1, l):
                term = md(md(self._antipode_gen("F", (i, t), False), K(unit(i, -t))), Fg(l - t))
                cf = vi ** (-t * (l - t))
                for k, c in term.items():
                    _add_into(inner, k, cf * c)
            acc = md(inner, K(unit(i, l)))
        elif letter == "E":
            # S'(E_l) = -(E_l + Σ_{0<t'<l} v_i^{t t'} S'(E_t') E_(l-t') K_(t' i)) K_(-l i)
            inner = dict(Eg(l))
            for tp in range(1, l):
                term = md(md(self._antipode_gen("E", (i, tp), True), Eg(l - tp)), K(unit(i, tp)))
                cf = vi ** (tp * (l - tp))
                for k, c in term.items():
                    _add_into(inner, k, cf * c)
            acc = md(inner, K(unit(i, -l)))
        else:
            # S'(F_l) = -K_(l i) F_l - Σ_{0<t'<l} v_i^{-t t'} S'(F_t') K_((l-t') i) F_(l-t')
            for k, c in md(K(unit(i, l)), Fg(l)).items():
                _add_into(acc, k, c)
            for tp in range(1, l):
                term = md(md(self._antipode_gen("F", (i, tp), True), K(unit(i, l - tp))), Fg(l - tp))
                cf = vi ** (-tp * (l - tp))
                for k, c in term.items():
                    _add_into(acc, k, cf * c)
        res = {k: -c for k, c in acc.items()}
        del one
        cache[key] = res
        return res

    def _antipode_key(self, key, skew):
        f, mu, e = key
        z = self.zero_mu
        out = {((), z, ()): ONE_S}
        for g in reversed(e):
            out = self._mul_dicts(out, self._antipode_gen("E", g, skew))
        out = self._mul_dicts(out, {((), _neg(mu), ()): ONE_S})
        for g in reversed(f):
            out = self._mul_dicts(out, self._antipode_gen("F", g, skew))
        return out

    def antipode(self, x, skew=False):
        """S (or the skew antipode S^op = S^-1 when ``skew``), anti-multiplicative."""
        out = {}
        for k, c in x.terms.items():
            for k2, d in self._antipode_key(k, skew).items():
                _add_into(out, k2, c * d)
        return DoubleElem(self, out)

    def m_s1(self, t, skew=False):
        """m ∘ (S ⊗ 1) on a tensor dict."""
        out = {}
        for (l, r), c in t.items():
            sl = self._antipode_key(l, skew)
            for k, d in self._mul_dicts(sl, {r: ONE_S}).items():
                _add_into(out, k, c * d)
        return DoubleElem(self, out)

    def m_1s(self, t, skew=False):
        """m ∘ (1 ⊗ S) on a tensor dict."""
        out = {}
        for (l, r), c in t.items():
            sr = self._antipode_key(r, skew)
            for k, d in self._mul_dicts({l: ONE_S}, sr).items():
                _add_into(out, k, c * d)
        return DoubleElem(self, out)

    # -- zero tests ---------------------------------------------------------------------------
    def is_zero(self, x):
        """Pairing-certified test that x vanishes in U (per K-sector)."""
        terms = x.terms if isinstance(x, DoubleElem) else x
        sectors = defaultdict(dict)
        for (f, mu, e), c in terms.items():
            sectors[mu][(f, e)] = c
        return all(self.P.tensor_is_zero(t) for t in sectors.values())

    def tensor_is_zero(self, t):
        sectors = defaultdict(dict)
        for ((fl, ml, el), (fr, mr, er)), c in t.items():
            sectors[(ml, mr)][(fl, el, fr, er)] = c
        return all(self.P.tensor_is_zero(s) for s in sectors.values())

    # -- the Drinfeld double relation -------------------------------------------------------
    def nonneg_pair(self, k1, k2):
        """⟨K_μ E_e, K_ν E_e'⟩ on Ũ^{≥0} via ⟨x K_i, y K_j⟩ = ⟨x, y⟩ v^{(i,j)}."""
        f1, m1, e1 = k1
        f2, m2, e2 = k2
        if f1 or f2:
            raise ValueError("pairing is only defined on the nonnegative part")
        p = self.P.pair_words(e1, e2)
        if not p:
            return p
        x = self.form(m1, m2)
        if e1:
            x += self.form(m1, self.wdeg(e1))
        if e2:
            x += self.form(m2, self.wdeg(e2))
        return p * Scalar.vpow(x)

    def dd_residue(self, a, b):
        """Σ⟨a₁,b₂⟩ω(b₁)a₂ − Σ⟨a₂,b₁⟩a₁ω(b₂) for a, b in Ũ^{≥0}."""
        da, db = self.coproduct(a), self.coproduct(b)
        out = {}
        for (a1, a2), ca in da.items():
            for (b1, b2), cb in db.items():
                p = self.nonneg_pair(a1, b2)
                if p:
                    t = self._mul_dicts(self.omega(DoubleElem(self, {b1: ONE_S})).terms, {a2: ONE_S})
                    for k, c in t.items():
                        _add_into(out, k, ca * cb * p * c)
                p = self.nonneg_pair(a2, b1)
                if p:
                    t = self._mul_dicts({a1: ONE_S}, self.omega(DoubleElem(self, {b2: ONE_S})).terms)
                    for k, c in t.items():
                        _add_into(out, k, -ca * cb * p * c)
        return DoubleElem(self, out)

    # -- text form ---------------------------------------------------------------------------
    def render_key(self, key):
        f, mu, e = key
        parts = [f"F[{self.q.vertices[i]},{l}]" for i, l in f]
        for i, m in enumerate(mu):
            if m:
                parts.append(f"K[{self.q.vertices[i]}]" + (f"^{m}" if m != 1 else ""))
        parts += [f"E[{self.q.vertices[i]},{l}]" for i, l in e]
        return "*".join(parts) if parts else "1"

    def render(self, x):
        from .freealg import render_coeff_term
        if not x.terms:
            return "0"
        keys = sorted(x.terms, key=lambda k: (word_height(k[0]) + word_height(k[2]), k))
        out = ""
        for n, k in enumerate(keys):
            p = render_coeff_term(x.terms[k], self.render_key(k))
            if n == 0:
                out = p
            else:
                out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def parse(self, text):
        """Parse products/sums of E[i,l], F[i,l], K[i] (with ^±n) and scalars."""
        def const(x):
            return self.scalar(V if x == "v" else Scalar.coerce(x))

        def atom(name, args):
            if name == "E":
                return self.E(gen_from_args(self.q, args))
            if name == "F":
                return self.F(gen_from_args(self.q, args))
            if name == "K":
                if len(args) != 1:
                    raise ValueError("K takes one vertex")
                return self.K(self.q.unit(str(args[0])))
            raise ValueError(f"unknown generator {name}")

        return Parser(text, const, atom).parse()

    def bar_coproduct(self, x):
        """Δ̄ = (bar⊗bar)∘Δ∘bar, built letter by letter (it is Q(v)-linear)."""
        z = self.zero_mu
        unit = {(((), z, ()), ((), z, ())): ONE_S}
        out = {}
        for (f, mu, e), c in x.terms.items():
            t = unit
            for g in f:
                t = self._tensor_mul_dicts(t, self.tensor_bar(self._cop_letter("F", g)))
            t = self._tensor_mul_dicts(t, {(((), mu, ()), ((), mu, ())): ONE_S})
            for g in e:
                t = self._tensor_mul_dicts(t, self.tensor_bar(self._cop_letter("E", g)))
            for k, d in t.items():
                _add_into(out, k, c * d)
        return out

    def key_degree(self, key):
        """Degree |e| − |f| of a normal-form monomial."""
        f, _, e = key
        d = list(self.zero_mu)
        for i, l in e:
            d[i] += l
        for i, l in f:
            d[i] -= l
        return tuple(d)

    def coassoc_residue(self, x):
        """(Δ⊗1)Δ(x) − (1⊗Δ)Δ(x) as a dict of key triples."""
        out = {}
        for (a, b), c in self.coproduct(x).items():
            for (a1, a2), d in self.coproduct(DoubleElem(self, {a: ONE_S})).items():
                _add_into(out, (a1, a2, b), c * d)
            for (b1, b2), d in self.coproduct(DoubleElem(self, {b: ONE_S})).items():
                _add_into(out, (a, b1, b2), -c * d)
        return out

    def triple_is_zero(self, t):
        sectors = defaultdict(dict)
        for keys, c in t.items():
            mus = tuple(k[1] for k in keys)
            legs = tuple(w for k in keys for w in (k[0], k[2]))
            sectors[mus][legs] = c
        return all(self.P.tensor_is_zero(s) for s in sectors.values())
