"""Pointwise Kan extensions at finite scale.

right_kan computes the value at b as a limit over the comma category (b ↓ H):
exactly, through the canonical-limit capability of the target world when it
has one, and by exhaustive terminal-cone search otherwise.  Existence is per
object, with a recorded failure witness; non-existence is a value, not an
error.  left_kan is the formal dual, computed in opposite wrappers.

The module also hosts the factorization through a Kan extension (mediating
morphisms, never guessed), preservation/creation checks, the split-fork
tools, and the pointwise left adjoint to restriction between diagram worlds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import (
    Adjunction,
    FinCategory,
    Functor,
    NatTrans,
    OpCat,
    compose_functors,
    enumerate_functors,
    enumerate_nats,
    identity_functor,
    inverse_of,
    op_functor,
    whisker_left,
)


# -- comma categories -----------------------------------------------------------

@dataclass
class CommaCategory:
    cat: FinCategory
    objs: list      # object index -> (s, f)
    proj: Functor   # projection to the source of H
    index: dict     # (s, f) -> object index


def comma_category(b, H):
    """(b ↓ H): objects (s, f: b -> H s); morphisms u with H(u)∘f = f'."""
    S, B = H.src, H.dst
    objs = []
    for s in S.objects():
        for f in B.hom(b, H.ob(s)):
            objs.append((s, f))
    index = {o: i for i, o in enumerate(objs)}
    mors = []
    dom_cod = []
    for i, (s, f) in enumerate(objs):
        for j, (s2, f2) in enumerate(objs):
            for u in S.hom(s, s2):
                if B.compose(H.mor(u), f) == f2:
                    mors.append((i, j, u))
                    dom_cod.append((i, j))
    mor_index = {t: k for k, t in enumerate(mors)}
    identity_of = [mor_index[(i, i, S.identity(s))]
                   for i, (s, f) in enumerate(objs)]
    composition = {}
    for gk, (j2, k2, u2) in enumerate(mors):
        for fk, (i1, j1, u1) in enumerate(mors):
            if j1 == j2:
                composition[(gk, fk)] = mor_index[(i1, k2, S.compose(u2, u1))]
    cat = FinCategory(len(objs), dom_cod, identity_of, composition)
    proj = Functor(cat, S, {i: s for i, (s, _) in enumerate(objs)},
                   {k: u for k, (_, _, u) in enumerate(mors)})
    return CommaCategory(cat, objs, proj, index)


# -- limit backends -------------------------------------------------------------

def _canonical_limit(C, shape, ob, mor):
    try:
        fn = C.canonical_limit
    except AttributeError:
        return None
    try:
        return fn(shape, ob, mor)
    except AttributeError:
        # opposite wrapper over a world without the dual capability
        return None


def _search_limit(C, shape, ob, mor):
    """Exhaustive terminal-cone search; None when no limit exists."""
    objs = list(shape.objects())
    arrows = [(x, y, m) for x in objs for y in objs for m in shape.hom(x, y)]
    cones = []
    for a in C.objects():
        cands = [C.hom(a, ob[x]) for x in objs]
        if any(not c for c in cands):
            continue
        for choice in itertools.product(*cands):
            legs = dict(zip(objs, choice))
            if all(C.compose(mor[m], legs[x]) == legs[y]
                   for (x, y, m) in arrows):
                cones.append((a, legs))
    for (a, legs) in cones:
        terminal = True
        for (a2, legs2) in cones:
            hits = [h for h in C.hom(a2, a)
                    if all(C.compose(legs[x], h) == legs2[x] for x in objs)]
            if len(hits) != 1:
                terminal = False
                break
        if terminal:
            def mediate(c, cone, _a=a, _legs=legs):
                hits = [h for h in C.hom(c, _a)
                        if all(C.compose(_legs[x], h) == cone[x]
                               for x in objs)]
                if len(hits) != 1:
                    raise AssertionError("mediating morphism not unique")
                return hits[0]

            return a, legs, mediate
    return None


def _pointwise_limit(C, shape, ob, mor):
    got = _canonical_limit(C, shape, ob, mor)
    if got is None:
        got = _search_limit(C, shape, ob, mor)
    return got


# -- Kan extensions --------------------------------------------------------------

@dataclass
class KanExtension:
    direction: str
    along: Functor              # H
    of: Functor                 # J
    exists: bool
    value: object = None        # Functor when exists
    universal: object = None    # right: value∘H ⇒ J; left: J ⇒ value∘H
    failure_witness: object = None
    pointwise: dict = field(default_factory=dict, repr=False)
    op_side: object = field(default=None, repr=False)


def right_kan(J, H):
    """Pointwise right Kan extension of J along H."""
    S, B, C = H.src, H.dst, J.dst
    value_ob = {}
    pointwise = {}
    bobjs = list(B.objects())
    for b in bobjs:
        comma = comma_category(b, H)
        ob = {i: J.ob(s) for i, (s, _) in enumerate(comma.objs)}
        dmor = {k: J.mor(comma.proj.mor(k))
                for k in comma.cat.all_morphisms()}
        got = _pointwise_limit(C, comma.cat, ob, dmor)
        if got is None:
            return KanExtension("right", H, J, exists=False,
                                failure_witness=b)
        apex, legs, mediate = got
        value_ob[b] = apex
        pointwise[b] = (comma, legs, mediate)

    value_mor = {}
    for b in bobjs:
        for b2 in bobjs:
            for u in B.hom(b, b2):
                comma2, _, mediate2 = pointwise[b2]
                comma1, legs1, _ = pointwise[b]
                cone = {}
                for i2, (s, f2) in enumerate(comma2.objs):
                    f_restr = B.compose(f2, u)
                    cone[i2] = legs1[comma1.index[(s, f_restr)]]
                value_mor[u] = mediate2(value_ob[b], cone)

    value = Functor(B, C, value_ob, value_mor)
    gamma = {}
    for s in S.objects():
        b = H.ob(s)
        comma, legs, _ = pointwise[b]
        gamma[s] = legs[comma.index[(s, B.identity(b))]]
    universal = NatTrans(compose_functors(value, H), J, gamma)
    return KanExtension("right", H, J, True, value, universal,
                        pointwise=pointwise)


def left_kan(J, H):
    """Pointwise left Kan extension, via the formal dual."""
    Sop = OpCat(H.src)
    Bop = OpCat(H.dst)
    Cop = OpCat(J.dst)
    ke = right_kan(op_functor(J, Sop, Cop), op_functor(H, Sop, Bop))
    if not ke.exists:
        return KanExtension("left", H, J, exists=False,
                            failure_witness=ke.failure_witness, op_side=ke)
    value = Functor(H.dst, J.dst,
                    lambda b: ke.value.ob(b), lambda m: ke.value.mor(m))
    eta = NatTrans(J, compose_functors(value, H),
                   lambda s: ke.universal.at(s))
    return KanExtension("left", H, J, True, value, eta,
                        pointwise=ke.pointwise, op_side=ke)


def factor_through_ran(ke, Q, alpha):
    """The unique beta: Q ⇒ ran value with universal∘(beta∗H) = alpha."""
    if not (ke.direction == "right" and ke.exists):
        raise ValueError("need an existing right Kan extension")
    B, C = ke.along.dst, ke.of.dst
    comps = {}
    for b in B.objects():
        comma, _, mediate = ke.pointwise[b]
        cone = {i: C.compose(alpha.at(s), Q.mor(f))
                for i, (s, f) in enumerate(comma.objs)}
        comps[b] = mediate(Q.ob(b), cone)
    beta = NatTrans(Q, ke.value, comps)
    for s in ke.of.src.objects():
        got = C.compose(ke.universal.at(s), comps[ke.along.ob(s)])
        if got != alpha.at(s):
            raise AssertionError("factorization misses the defining pasting")
    return beta


def factor_through_lan(ke, Q, alpha):
    """The unique beta: lan value ⇒ Q with (beta∗H)∘universal = alpha."""
    if not (ke.direction == "left" and ke.exists):
        raise ValueError("need an existing left Kan extension")
    opke = ke.op_side
    Qop = op_functor(Q, opke.along.dst, opke.of.dst)
    alpha_op = NatTrans(compose_functors(Qop, opke.along), opke.of,
                        lambda s: alpha.at(s))
    beta_op = factor_through_ran(opke, Qop, alpha_op)
    return NatTrans(ke.value, Q, lambda b: beta_op.at(b))


def comparison_cell(ke, G):
    """The canonical cell comparing G applied to ke with the extension of G∘J.

    right: beta: G∘value ⇒ ran_H(G∘J);  left: beta: lan_H(G∘J) ⇒ G∘value.
    Returns (other_extension, beta) or (other_extension, None) when the
    other extension does not exist.
    """
    GJ = compose_functors(G, ke.of)
    if ke.direction == "right":
        ke2 = right_kan(GJ, ke.along)
        if not ke2.exists:
            return ke2, None
        beta = factor_through_ran(ke2, compose_functors(G, ke.value),
                                  whisker_left(G, ke.universal))
        return ke2, beta
    ke2 = left_kan(GJ, ke.along)
    if not ke2.exists:
        return ke2, None
    beta = factor_through_lan(ke2, compose_functors(G, ke.value),
                              whisker_left(G, ke.universal))
    return ke2, beta


def preserves(G, ke):
    """Does G send ke to a Kan extension?  (Canonical cell invertible.)"""
    if not ke.exists:
        raise ValueError("nothing to preserve")
    ke2, beta = comparison_cell(ke, G)
    if beta is None:
        return False
    C2 = G.dst
    return all(inverse_of(C2, beta.at(b)) is not None
               for b in ke.along.dst.objects())


def creates(G, J0, H):
    """Creation report for right Kan extensions along H through G.

    exists/preserved: ran_H J0 exists upstairs and G preserves it.
    reflects: every candidate pair (R, rho) upstairs whose G-image satisfies
    the downstairs universal property is itself a right Kan extension.
    Exhaustive over all functors and transformations; small instances only.
    """
    A = G.src
    B = H.dst
    ke_up = right_kan(J0, H)
    report = {
        "exists": ke_up.exists,
        "preserved": False,
        "reflects": True,
        "witness": None,
    }
    if ke_up.exists:
        report["preserved"] = preserves(G, ke_up)
    ke_down = right_kan(compose_functors(G, J0), H)
    if ke_down.exists:
        for R in enumerate_functors(B, A):
            RH = compose_functors(R, H)
            for rho in enumerate_nats(RH, J0):
                down = factor_through_ran(
                    ke_down, compose_functors(G, R),
                    NatTrans(compose_functors(G, RH),
                             compose_functors(G, J0),
                             lambda s, _r=rho: G.mor(_r.at(s))))
                down_ok = all(inverse_of(G.dst, down.at(b)) is not None
                              for b in B.objects())
                if not down_ok:
                    continue
                if not ke_up.exists:
                    report["reflects"] = False
                    report["witness"] = (R, rho)
                    break
                up = factor_through_ran(ke_up, R, rho)
                up_ok = all(inverse_of(A, up.at(b)) is not None
                            for b in B.objects())
                if not up_ok:
                    report["reflects"] = False
                    report["witness"] = (R, rho)
                    break
            if report["witness"] is not None:
                break
    report["creates"] = (report["exists"] and report["preserved"]
                         and report["reflects"])
    return report


def check_universal_bijection(ke, R):
    """Pasting with the universal cell bijects 2-cells on both sides of ke."""
    C = ke.of.dst
    S = ke.of.src
    RH = compose_functors(R, ke.along)
    if ke.direction == "right":
        upper = list(enumerate_nats(R, ke.value))
        lower = list(enumerate_nats(RH, ke.of))

        def transpose(beta):
            return tuple(C.compose(ke.universal.at(s), beta.at(ke.along.ob(s)))
                         for s in S.objects())
    else:
        upper = list(enumerate_nats(ke.value, R))
        lower = list(enumerate_nats(ke.of, RH))

        def transpose(beta):
            return tuple(C.compose(beta.at(ke.along.ob(s)), ke.universal.at(s))
                         for s in S.objects())

    seen = {}
    for beta in upper:
        key = transpose(beta)
        if key in seen:
            return False
        seen[key] = beta
    targets = {tuple(alpha.at(s) for s in S.objects()) for alpha in lower}
    return set(seen) == targets


# -- split forks ------------------------------------------------------------------

@dataclass(frozen=True)
class SplitFork:
    """A fork q∘f = q∘g with sections t (of q) and s (of f) satisfying
    q∘t = id, f∘s = id, g∘s = t∘q; such forks are absolute coequalizers."""

    f: object
    g: object
    q: object
    s: object
    t: object


def split_fork_tools(C):
    """(enumerator, recognizer) for split forks in a protocol category."""

    def recognize(f, g, q):
        a, b = C.dom(f), C.cod(f)
        if C.dom(g) != a or C.cod(g) != b or C.dom(q) != b:
            return None
        c = C.cod(q)
        if C.compose(q, f) != C.compose(q, g):
            return None
        for t in C.hom(c, b):
            if C.compose(q, t) != C.identity(c):
                continue
            for s in C.hom(b, a):
                if C.compose(f, s) == C.identity(b) and \
                        C.compose(g, s) == C.compose(t, q):
                    return SplitFork(f, g, q, s, t)
        return None

    def enumerate_forks():
        objs = list(C.objects())
        for a in objs:
            for b in objs:
                for f in C.hom(a, b):
                    for g in C.hom(a, b):
                        for c in objs:
                            for q in C.hom(b, c):
                                sf = recognize(f, g, q)
                                if sf is not None:
                                    yield sf

    return enumerate_forks, recognize


def is_coequalizer(C, f, g, q):
    """Exhaustive universal-property check for a cofork."""
    b, c = C.cod(f), C.cod(q)
    if C.compose(q, f) != C.compose(q, g):
        return False
    for x in C.objects():
        for h in C.hom(b, x):
            if C.compose(h, f) == C.compose(h, g):
                hits = [u for u in C.hom(c, x) if C.compose(u, q) == h]
                if len(hits) != 1:
                    return False
    return True


# -- left adjoint to restriction between diagram worlds ---------------------------

def _over_comma(b, p):
    """(p ↓ b) for a functor p between dense categories, densely."""
    E, B = p.src, p.dst
    objs = [(i, u) for i in range(E.object_count)
            for u in B.hom(p.ob(i), b)]
    index = {o: k for k, o in enumerate(objs)}
    mors = []
    dom_cod = []
    for o1, (i1, u1) in enumerate(objs):
        for o2, (i2, u2) in enumerate(objs):
            for k in E.hom(i1, i2):
                if B.compose(u2, p.mor(k)) == u1:
                    mors.append((o1, o2, k))
                    dom_cod.append((o1, o2))
    mor_index = {t: n for n, t in enumerate(mors)}
    identity_of = [mor_index[(o, o, E.identity(i))]
                   for o, (i, _) in enumerate(objs)]
    composition = {}
    for gk, (j2, k2, e2) in enumerate(mors):
        for fk, (i1, j1, e1) in enumerate(mors):
            if j1 == j2:
                composition[(gk, fk)] = mor_index[(i1, k2, E.compose(e2, e1))]
    cat = FinCategory(len(objs), dom_cod, identity_of, composition)
    return cat, objs, index, mors


def diagram_lan_adjunction(p, bound):
    """Pointwise extension along p, left adjoint to restriction along p."""
    from .finset import FinSetCat, compose_maps
    from .pseudo import FSFunctor, FSNat, FunctorCat, precompose_diagrams

    E, B = p.src, p.dst
    fs = FinSetCat(0)
    src = FunctorCat(E, bound)
    dst = FunctorCat(B, bound)
    restrict = precompose_diagrams(p, bound)

    commas = {}
    for b in range(B.object_count):
        commas[b] = _over_comma(b, p)

    cache = {}

    def colimit_at(f, b):
        key = (f, b)
        if key not in cache:
            cat, objs, _, mors = commas[b]
            ob = {o: f.ob[i] for o, (i, _) in enumerate(objs)}
            mor = {n: f.mor[k] for n, (_, _, k) in enumerate(mors)}
            cache[key] = fs.canonical_colimit(cat, ob, mor)
        return cache[key]

    def on_obj(f):
        apexes = []
        for b in range(B.object_count):
            apex, _, _ = colimit_at(f, b)
            apexes.append(apex)
        mor_out = []
        for mid, (b, b2) in enumerate(B.morphisms):
            _, legs2, _ = colimit_at(f, b2)
            cat1, objs1, _, _ = commas[b]
            _, _, comed1 = colimit_at(f, b)
            _, _, index2, _ = commas[b2]
            cocone = {}
            for o, (i, u) in enumerate(objs1):
                cocone[o] = legs2[index2[(i, B.compose(mid, u))]]
            mor_out.append(comed1(apexes[b2], cocone))
        return FSFunctor(tuple(apexes), tuple(mor_out))

    def on_mor(alpha):
        lf, lg = on_obj(alpha.src), on_obj(alpha.dst)
        comps = []
        for b in range(B.object_count):
            cat1, objs1, _, _ = commas[b]
            _, legs_g, _ = colimit_at(alpha.dst, b)
            _, _, comed_f = colimit_at(alpha.src, b)
            cocone = {o: compose_maps(legs_g[o], alpha.components[i])
                      for o, (i, _) in enumerate(objs1)}
            comps.append(comed_f(lg.ob[b], cocone))
        return FSNat(lf, lg, tuple(comps))

    lan = Functor(src, dst, on_obj, on_mor)

    def unit_at(f):
        target = restrict.ob(on_obj(f))
        comps = []
        for i in range(E.object_count):
            b = p.ob(i)
            _, legs, _ = colimit_at(f, b)
            _, _, index, _ = commas[b]
            comps.append(legs[index[(i, B.identity(b))]])
        return FSNat(f, target, tuple(comps))

    def counit_at(g):
        gp = restrict.ob(g)
        source = on_obj(gp)
        comps = []
        for b in range(B.object_count):
            cat1, objs1, _, _ = commas[b]
            _, _, comed = colimit_at(gp, b)
            cocone = {o: g.mor[u] for o, (i, u) in enumerate(objs1)}
            comps.append(comed(g.ob[b], cocone))
        return FSNat(source, g, tuple(comps))

    unit = NatTrans(identity_functor(src), compose_functors(restrict, lan),
                    unit_at)
    counit = NatTrans(compose_functors(lan, restrict), identity_functor(dst),
                      counit_at)
    return Adjunction(left=lan, right=restrict, unit=unit, counit=counit)
