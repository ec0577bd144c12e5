"""Verification suites.

Each suite takes a Session and returns a list of records
``{"check", "input", "result", "witness"?}`` in a deterministic order.
``result`` is ``"pass"`` or ``"fail"``; witnesses carry exact values
rendered in the scalar grammar.
"""
import itertools
import random

from .casimir import (VermaVec, f_identity_holds, perturb_theta,
                      theta_build, theta_intertwine_check)
from .double import DoubleElem
from .freealg import FreeElem, all_words, degrees_up_to, render as render_free
from .pairing import iso_commutator, serre_element
from .quiver import compositions, enumerate_c, partitions
from .scalars import ONE_S, Scalar, in_one_plus_vinv_nat, in_vinv_nat, render


def record(check, inp, ok, witness=None):
    out = {"check": check, "input": inp, "result": "pass" if ok else "fail"}
    if witness is not None and not ok:
        out["witness"] = witness
    return out


def _rng(s, name):
    return random.Random(f"{s.seed}:{name}")


def _vname(q, i):
    return q.vertices[i]


def _word(i, c):
    return tuple((i, part) for part in c)


# -- pairing -----------------------------------------------------------------------

def suite_modulo(s, max_len=5, draws=3):
    """⟨E_(i,|c|), E_(i,c)⟩ = v_i^{Σ_{k<j} c_k c_j} ν_(i,c) at every imaginary vertex."""
    out = []
    top = min(max_len, s.max_height)
    for label, ss in _variants(s, draws):
        q, P = ss.q, ss.pairing
        for i in range(q.n):
            if not q.is_imaginary(i):
                continue
            vi = q.v_sub_i(i)
            for l in range(1, top + 1):
                for c in compositions(l):
                    lhs = P.pair_words(((i, l),), _word(i, c))
                    e = sum(c[a] * c[b] for a in range(len(c)) for b in range(a + 1, len(c)))
                    rhs = vi ** e
                    for part in c:
                        rhs = rhs * q.nu((i, part))
                    out.append(record("pairing-modulo",
                                      {"nu": label,
                                       "vertex": _vname(q, i), "c": list(c)},
                                      lhs == rhs, {"lhs": render(lhs), "rhs": render(rhs)}))
    return out


def suite_nondeg(s, max_len=4, max_rank_level=5):
    """Window check of ⟨E_c, E_c'⟩ − δ and rank 2^(l−1) at vertices with ≥ 2 loops."""
    out = []
    q, P = s.q, s.pairing
    for i in range(q.n):
        if q.omega(i) < 2:
            continue
        top = min(max_len, s.max_height)
        if not all(in_one_plus_vinv_nat(q.nu((i, l)), s.series_order) for l in range(1, top + 1)):
            continue
        for l in range(1, top + 1):
            for c in compositions(l):
                for c2 in compositions(l):
                    d = P.pair_words(_word(i, c), _word(i, c2))
                    if c == c2:
                        d = d - ONE_S
                    ok = d.is_zero() or in_vinv_nat(d, s.series_order)
                    out.append(record("nondeg-window",
                                      {"vertex": _vname(q, i), "c": list(c), "c2": list(c2),
                                       "order": s.series_order},
                                      ok, {"difference": render(d)}))
        for l in range(1, min(max_rank_level, s.max_height) + 1):
            r = P.graded_dim(q.unit(i, l))
            out.append(record("nondeg-rank", {"vertex": _vname(q, i), "level": l},
                              r == 2 ** (l - 1), {"rank": r, "expected": 2 ** (l - 1)}))
    return out


def suite_dims(s, max_level=6):
    """dim U⁺[l·i] equals the partition number at isotropic vertices."""
    out = []
    q, P = s.q, s.pairing
    for i in range(q.n):
        if not q.is_isotropic(i):
            continue
        for l in range(1, min(max_level, s.max_height) + 1):
            r = P.graded_dim(q.unit(i, l))
            exp = len(partitions(l))
            out.append(record("isotropic-dims", {"vertex": _vname(q, i), "level": l},
                              r == exp, {"rank": r, "expected": exp}))
    return out


def _variants(s, draws):
    out = [("session", s)]
    out += [(f"seed={s.seed + d}", s.random_variant(d)) for d in range(draws)]
    return out


def suite_serre(s, max_height=5, draws=5):
    """Serre elements of height ≤ max_height lie in the radical."""
    out = []
    top = min(max_height, s.max_height)
    for label, ss in _variants(s, draws):
        q, P = ss.q, ss.pairing
        for j in range(q.n):
            if not q.is_real(j):
                continue
            for gen in q.gen_indices(top):
                if gen[0] == j:
                    continue
                n = -q.gen_pairing(gen, j) + 1
                if gen[1] + n > top:
                    continue
                x = serre_element(q, gen, j)
                out.append(record("serre-radical",
                                  {"nu": label, "gen": [_vname(q, gen[0]), gen[1]],
                                   "j": _vname(q, j)},
                                  P.in_radical(x), {"element": render_free(q, x)}))
    return out


def suite_iso_commutators(s, max_height=6, draws=5):
    """[E_(i,l), E_(i,k)] with l + k ≤ max_height lies in the radical at isotropic i."""
    out = []
    top = min(max_height, s.max_height)
    for label, ss in _variants(s, draws):
        q, P = ss.q, ss.pairing
        for i in range(q.n):
            if not q.is_isotropic(i):
                continue
            for l in range(1, top):
                for k in range(l + 1, top - l + 1):
                    x = iso_commutator(q, i, l, k)
                    out.append(record("iso-commutator-radical",
                                      {"nu": label, "vertex": _vname(q, i), "l": l, "k": k},
                                      P.in_radical(x), {"element": render_free(q, x)}))
    return out


def suite_radical(s, draws=5):
    return suite_serre(s, draws=draws) + suite_iso_commutators(s, draws=draws)


# -- primitives and δ-components ---------------------------------------------------------

def suite_primitive(s, max_level=4):
    out = []
    q, U = s.q, s.uplus
    for i in range(q.n):
        if not q.is_imaginary(i):
            continue
        for l in range(1, min(max_level, s.max_height) + 1):
            inp = {"vertex": _vname(q, i), "level": l}
            try:
                p = U.primitive(i, l)
            except ArithmeticError as exc:
                out.append(record("primitive-exists", inp, False, {"error": str(exc)}))
                continue
            out.append(record("primitive-exists", inp, True))
            out.append(record("primitive-unique", inp, U.uniqueness_check(p)))
            out.append(record("primitive-orthogonal", inp, U.lower_orthogonality_check(p)))
            out.append(record("primitive-lower-span", inp, U.lower_span_check(p)))
            out.append(record("primitive-bar-invariant", inp, U.bar_invariance_check(p)))
            out.append(record("primitive-coproduct", inp, U.check_primitivity(p),
                              {"representative": render_free(q, p.representative)}))
        if (q.is_isotropic(i) and s.max_height >= 2
                and q.nu((i, 1)) == 1 and q.nu((i, 2)) == 1):
            p = U.primitive(i, 2)
            half = Scalar.coerce(1) / 2
            expected = FreeElem.gen((i, 2)) - FreeElem.word(((i, 1), (i, 1)), half)
            ok = p.representative == expected and p.tau == half
            out.append(record("primitive-isotropic-value", {"vertex": _vname(q, i), "level": 2},
                              ok, {"representative": render_free(q, p.representative),
                                   "tau": render(p.tau)}))
    return out


def _random_elem(rng, q, alpha, nterms=3):
    words = all_words(q, alpha)
    if not words:
        return FreeElem.zero()
    x = FreeElem.zero()
    for w in rng.sample(words, min(nterms, len(words))):
        c = Scalar.coerce(rng.randint(-3, 3) or 1) * Scalar.vpow(rng.randint(-1, 1))
        x = x + FreeElem.word(w, c)
    return x


def suite_delta(s, max_level=3, samples=10, max_height=4):
    """⟨a y, z⟩ = τ⟨y, δ^(i,l) z⟩ and ⟨y a, z⟩ = τ⟨y, δ_(i,l) z⟩ on random y, z."""
    out = []
    q, P, U = s.q, s.pairing, s.uplus
    rng = _rng(s, "delta")
    hmax = min(max_height, s.max_height)
    for i in range(q.n):
        if not q.is_imaginary(i):
            continue
        for l in range(1, min(max_level, hmax) + 1):
            p = U.primitive(i, l)
            a, tau = p.representative, p.tau
            for c in enumerate_c(q, i, l):
                v = P.pair(a, U.a_c(i, c))
                exp = tau if c == (l,) else Scalar()
                out.append(record("delta-orthogonality",
                                  {"vertex": _vname(q, i), "level": l, "c": list(c)},
                                  v == exp, {"value": render(v), "expected": render(exp)}))
            degs = degrees_up_to(q, hmax - l)
            for n in range(samples):
                beta = rng.choice(degs)
                y = _random_elem(rng, q, beta)
                zdeg = tuple(b + (l if k == i else 0) for k, b in enumerate(beta))
                z = _random_elem(rng, q, zdeg)
                inp = {"vertex": _vname(q, i), "level": l, "sample": n,
                       "y": render_free(q, y), "z": render_free(q, z)}
                up = U.delta_component(i, (l,), z, side="upper")
                lo = U.delta_component(i, (l,), z, side="lower")
                l1, r1 = P.pair(a * y, z), tau * P.pair(y, up)
                l2, r2 = P.pair(y * a, z), tau * P.pair(y, lo)
                out.append(record("delta-left", inp, l1 == r1, {"lhs": render(l1), "rhs": render(r1)}))
                out.append(record("delta-right", inp, l2 == r2, {"lhs": render(l2), "rhs": render(r2)}))
    return out


# -- the double ----------------------------------------------------------------------------

def _random_nonneg(rng, s, max_h):
    """K_μ · (random E-word) with μ ∈ {−1,0,1}^I and word height ≤ max_h."""
    D, q = s.double, s.q
    gens = q.gen_indices(max_h)
    w, h = [], 0
    target = rng.randint(1, max_h)
    while True:
        cand = [g for g in gens if h + g[1] <= target]
        if not cand:
            break
        g = rng.choice(cand)
        w.append(g)
        h += g[1]
    mu = tuple(rng.randint(-1, 1) for _ in range(q.n))
    return DoubleElem(D, {((), mu, tuple(w)): ONE_S})


def _random_mixed(rng, s, max_h):
    """A random product of E, F and K letters with E- and F-heights ≤ max_h."""
    D, q = s.double, s.q
    gens = q.gen_indices(max_h)
    x = D.one()
    he = hf = 0
    for _ in range(rng.randint(1, 4)):
        kind = rng.choice("EFK")
        if kind == "K":
            x = x * D.K(q.unit(rng.randrange(q.n), rng.choice((-1, 1))))
            continue
        used = he if kind == "E" else hf
        cand = [g for g in gens if used + g[1] <= max_h]
        if not cand:
            continue
        g = rng.choice(cand)
        if kind == "E":
            x, he = x * D.E(g), he + g[1]
        else:
            x, hf = x * D.F(g), hf + g[1]
    return x


def suite_double(s, gen_height=5, samples=20, sample_height=3):
    out = []
    q, D = s.q, s.double
    gens = q.gen_indices(min(gen_height, s.max_height))
    for g in gens:
        for h in gens:
            r = D.dd_residue(D.E(g), D.E(h))
            out.append(record("dd-generators",
                              {"a": q.gen_name(g), "b": q.gen_name(h)},
                              D.is_zero(r), {"residue": D.render(r)}))
    rng = _rng(s, "double")
    hs = min(sample_height, s.max_height)
    for n in range(samples):
        a, b = _random_nonneg(rng, s, hs), _random_nonneg(rng, s, hs)
        r = D.dd_residue(a, b)
        out.append(record("dd-random", {"sample": n, "a": D.render(a), "b": D.render(b)},
                          D.is_zero(r), {"residue": D.render(r)}))
    for i in range(q.n):
        g = (i, 1)
        lhs = D.E(g) * D.F(g) - D.F(g) * D.E(g)
        rhs = (D.K(q.unit(i, -1)) - D.K(q.unit(i))).scale(q.nu(g))
        out.append(record("dd-rank-one-rule", {"vertex": _vname(q, i)}, lhs == rhs,
                          {"lhs": D.render(lhs), "rhs": D.render(rhs)}))
    return out


def _hopf_records(s, x, label, inp):
    D = s.double
    t = D.coproduct(x)
    eps = D.scalar(D.counit(x))
    r1 = D.m_s1(t) - eps
    r2 = D.m_1s(t) - eps
    return [record(f"hopf-{label}-left", inp, D.is_zero(r1), {"residue": D.render(r1)}),
            record(f"hopf-{label}-right", inp, D.is_zero(r2), {"residue": D.render(r2)})]


def suite_hopf(s, gen_height=4, samples=10, sample_height=3):
    out = []
    q, D = s.q, s.double
    gens = q.gen_indices(min(gen_height, s.max_height))
    letters = [(q.gen_name(g), D.E(g)) for g in gens]
    letters += [(q.gen_name(g).replace("E", "F", 1), D.F(g)) for g in gens]
    letters += [(f"K[{v}]", D.K(v)) for v in q.vertices]
    for name, x in letters:
        out += _hopf_records(s, x, "antipode", {"x": name})
        for skew_first in (False, True):
            y = D.antipode(D.antipode(x, skew=skew_first), skew=not skew_first)
            out.append(record("hopf-skew-inverse",
                              {"x": name, "order": "S then S^op" if not skew_first else "S^op then S"},
                              D.is_zero(y - x), {"value": D.render(y)}))
    rng = _rng(s, "hopf")
    hs = min(sample_height, s.max_height)
    for n in range(samples):
        x = _random_mixed(rng, s, hs)
        out += _hopf_records(s, x, "antipode-random", {"sample": n, "x": D.render(x)})
    for name, x in letters:
        if all(max(sum(l for _, l in k[0]), sum(l for _, l in k[2])) <= hs for k in x.terms):
            out.append(record("coassociativity", {"x": name},
                              D.triple_is_zero(D.coassoc_residue(x))))
    for n in range(samples):
        x = _random_mixed(rng, s, hs)
        out.append(record("coassociativity-random", {"sample": n, "x": D.render(x)},
                          D.triple_is_zero(D.coassoc_residue(x))))
    return out


# -- Θ and Ω -------------------------------------------------------------------------------

def default_theta_cutoff(s):
    return min(s.max_height, 4 if s.q.n == 1 else 3)


def suite_theta(s, p=None):
    out = []
    q, D = s.q, s.double
    p = default_theta_cutoff(s) if p is None else p
    th = theta_build(s.uplus, D, p)
    us = []
    for g in q.gen_indices(p):
        us += [(q.gen_name(g), D.E(g)), (q.gen_name(g).replace("E", "F", 1), D.F(g))]
    us += [(f"K[{v}]", D.K(v)) for v in q.vertices]
    for name, u in us:
        out.append(record("theta-intertwine", {"u": name, "cutoff": p},
                          theta_intertwine_check(th, D, u)))
    # a perturbed Θ must fail for some generator
    for alpha in sorted(a for a in th.components if any(a)):
        bad = perturb_theta(th, alpha)
        broken = any(not theta_intertwine_check(bad, D, u) for _, u in us)
        out.append(record("theta-perturbation-detected",
                          {"alpha": list(alpha), "cutoff": p}, broken))
        break
    return out


def casimir_weights(q):
    ws = [(0,) * q.n, q.unit(0)]
    if q.n >= 2:
        ws.append(tuple(a + b for a, b in zip(q.unit(0), q.unit(1))))
    return ws


def suite_casimir(s, depth=2, max_level=2):
    out = []
    q, C = s.q, s.casimir
    V = C.verma
    depth = min(depth, s.max_height - max_level)
    if depth < 0:
        return [record("casimir-cutoff", {"max_height": s.max_height}, False,
                       {"error": "height cutoff exceeded: max-height too small for the Casimir suite"})]
    for alpha in casimir_weights(q):
        hv = VermaVec.highest(alpha)
        om = C.apply(hv, 0)
        out.append(record("casimir-highest-weight", {"alpha": list(alpha)},
                          V.equal(om, hv)))
        for i in range(q.n):
            for l in range(1, (max_level if q.is_imaginary(i) else 1) + 1):
                for name, n, ok in C.identity_checks(alpha, i, l, depth):
                    out.append(record(f"casimir-{name}-identity",
                                      {"alpha": list(alpha), "vertex": _vname(q, i),
                                       "level": l, "depth": depth, "vector": n}, ok))
        for n, m in enumerate(V.basis(alpha, depth, s.uplus)):
            d = m.depth()
            if d + 1 > s.max_height:
                continue
            out.append(record("casimir-stability", {"alpha": list(alpha), "vector": n, "p": d},
                              V.equal(C.apply(m, d), C.apply(m, d + 1))))
    return out


def suite_f(s, max_level=5, bound=3):
    out = []
    q = s.q
    bad = []
    count = 0
    for alpha in itertools.product(range(-bound, bound + 1), repeat=q.n):
        for i in range(q.n):
            for l in range(1, max_level + 1):
                count += 1
                if not f_identity_holds(q, alpha, i, l):
                    bad.append({"alpha": list(alpha), "vertex": _vname(q, i), "level": l})
    rec = record("f-identity", {"max_level": max_level, "bound": bound, "cases": count},
                 not bad, {"counterexamples": bad[:10]})
    return [rec]


SUITES = [
    ("pairing-modulo", suite_modulo),
    ("nondegeneracy", suite_nondeg),
    ("isotropic-dims", suite_dims),
    ("radical", suite_radical),
    ("primitive", suite_primitive),
    ("delta", suite_delta),
    ("double", suite_double),
    ("hopf", suite_hopf),
    ("theta", suite_theta),
    ("casimir", suite_casimir),
    ("f-identity", suite_f),
]


def verify_all(s):
    out = []
    for name, fn in SUITES:
        for r in fn(s):
            r = dict(r)
            r["suite"] = name
            out.append(r)
    return out
