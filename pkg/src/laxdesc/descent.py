"""Kernel-pair groupoids, internal actions, and effective descent.

The kernel pair of a map (or functor) p induces a contravariant assignment
out of the index category: level 1 is the domain of p, level 2 the
self-pullback, level 3 the triple pullback, with the projections and the
diagonal as structure maps.  Composing an indexed category with it and
taking descent data yields the factorization of the inverse-image functor
through the category of descent data; effectiveness is the comparison
being an equivalence.

Index conventions (typing-forced, pinned by the validator): a(d0) is the
second-coordinate projection, a(d1) the first; the triple-level faces
a(D0), a(D1), a(D2) drop the first, middle, and last coordinate.
"""

from dataclasses import dataclass

from .fincat import (
    FinCategory,
    FullSub,
    Functor,
    NatTrans,
    _isomorphic,
    compose_functors,
    functor_equal,
    inverse_of,
)
from .finset import FinSetMap, SliceCat, SliceMap, fsobj, pullback
from .laxdescent import DescentObject, build_lax_descent, factor_functor
from .pseudo import (
    CAT_WORLD,
    FINSET_WORLD,
    Precategory,
    constant_precategory,
    compose_indexed_with_precategory,
    precategory_from_generators,
    validate_precategory,
)


@dataclass
class KernelPair:
    """Self-pullback of p with its two projections (first/second coordinate)."""

    pair: object
    first: object
    second: object


def cat_pullback(F1, F2):
    """Strict pullback of dense categories along F1, F2 into a common target.

    Returns (cat, objs, mors, proj1, proj2) where objs[i] = (x, y) and
    mors[k] = (i, j, m, n).
    """
    A, B = F1.src, F2.src
    objs = [(x, y) for x in A.objects() for y in B.objects()
            if F1.ob(x) == F2.ob(y)]
    index = {o: i for i, o in enumerate(objs)}
    mors = []
    dom_cod = []
    for i, (x, y) in enumerate(objs):
        for j, (x2, y2) in enumerate(objs):
            for m in A.hom(x, x2):
                for n in B.hom(y, y2):
                    if F1.mor(m) == F2.mor(n):
                        mors.append((i, j, m, n))
                        dom_cod.append((i, j))
    mor_index = {t: k for k, t in enumerate(mors)}
    identity_of = [mor_index[(i, i, A.identity(x), B.identity(y))]
                   for i, (x, y) in enumerate(objs)]
    composition = {}
    for gk, (j2, k2, m2, n2) in enumerate(mors):
        for fk, (i1, j1, m1, n1) in enumerate(mors):
            if j1 == j2:
                composition[(gk, fk)] = mor_index[
                    (i1, k2, A.compose(m2, m1), B.compose(n2, n1))]
    cat = FinCategory(len(objs), dom_cod, identity_of, composition)
    proj1 = Functor(cat, A, {i: x for i, (x, _) in enumerate(objs)},
                    {k: m for k, (_, _, m, _) in enumerate(mors)})
    proj2 = Functor(cat, B, {i: y for i, (_, y) in enumerate(objs)},
                    {k: n for k, (_, _, _, n) in enumerate(mors)})
    return cat, objs, mors, proj1, proj2


def kernel_pair(p):
    if isinstance(p, FinSetMap):
        pb = pullback(p, p)
        return KernelPair(pb.apex, pb.projections[0], pb.projections[1])
    if isinstance(p, Functor):
        _, _, _, pr1, pr2 = cat_pullback(p, p)
        return KernelPair(pr1.src, pr1, pr2)
    raise TypeError(f"no kernel pair for {type(p).__name__}")


def _eq_groupoid_finset(p):
    E = p.dom
    n = len(E)
    pos = {x: i for i, x in enumerate(E)}
    pb = pullback(p, p)
    P = pb.apex

    def pair_label(x, y):
        return pos[x] * n + pos[y]

    triples = [(x, y, z) for x in E for y in E for z in E
               if p(x) == p(y) == p(z)]
    T = tuple(pos[x] * n * n + pos[y] * n + pos[z] for (x, y, z) in triples)

    def tmap(pick):
        return FinSetMap(T, P, tuple(pair_label(*pick(t)) for t in triples))

    gens = {
        "d0": pb.projections[1],
        "d1": pb.projections[0],
        "s0": FinSetMap(E, P, tuple(pair_label(x, x) for x in E)),
        "D0": tmap(lambda t: (t[1], t[2])),
        "D1": tmap(lambda t: (t[0], t[2])),
        "D2": tmap(lambda t: (t[0], t[1])),
    }
    a = precategory_from_generators({1: E, 2: P, 3: T}, gens, FINSET_WORLD)
    bad = validate_precategory(a)
    if bad:
        raise AssertionError("kernel-pair structure invalid: " + bad[0])
    return a


def _eq_groupoid_cat(p):
    E = p.src
    Pcat, pobjs, pmors, pr1, pr2 = cat_pullback(p, p)
    pindex = {o: i for i, o in enumerate(pobjs)}
    pmindex = {t: k for k, t in enumerate(pmors)}

    tobjs = [(x, y, z) for x in E.objects() for y in E.objects()
             for z in E.objects()
             if p.ob(x) == p.ob(y) == p.ob(z)]
    tindex = {o: i for i, o in enumerate(tobjs)}
    tmors = []
    dom_cod = []
    for i, (x, y, z) in enumerate(tobjs):
        for j, (x2, y2, z2) in enumerate(tobjs):
            for m in E.hom(x, x2):
                for n in E.hom(y, y2):
                    if p.mor(m) != p.mor(n):
                        continue
                    for o in E.hom(z, z2):
                        if p.mor(n) == p.mor(o):
                            tmors.append((i, j, m, n, o))
                            dom_cod.append((i, j))
    tmindex = {t: k for k, t in enumerate(tmors)}
    identity_of = [tmindex[(i, i, E.identity(x), E.identity(y),
                            E.identity(z))]
                   for i, (x, y, z) in enumerate(tobjs)]
    composition = {}
    for gk, (j2, k2, m2, n2, o2) in enumerate(tmors):
        for fk, (i1, j1, m1, n1, o1) in enumerate(tmors):
            if j1 == j2:
                composition[(gk, fk)] = tmindex[
                    (i1, k2, E.compose(m2, m1), E.compose(n2, n1),
                     E.compose(o2, o1))]
    Tcat = FinCategory(len(tobjs), dom_cod, identity_of, composition)

    def face(pick_ob, pick_mor):
        ob = {i: pindex[pick_ob(o)] for i, o in enumerate(tobjs)}
        mor = {k: pmindex[(ob[t[0]], ob[t[1]]) + pick_mor(t)]
               for k, t in enumerate(tmors)}
        return Functor(Tcat, Pcat, ob, mor)

    gens = {
        "d0": pr2,
        "d1": pr1,
        "s0": Functor(E, Pcat,
                      {x: pindex[(x, x)] for x in E.objects()},
                      {m: pmindex[(pindex[(E.dom(m), E.dom(m))],
                                   pindex[(E.cod(m), E.cod(m))], m, m)]
                       for m in E.all_morphisms()}),
        "D0": face(lambda o: (o[1], o[2]), lambda t: (t[3], t[4])),
        "D1": face(lambda o: (o[0], o[2]), lambda t: (t[2], t[4])),
        "D2": face(lambda o: (o[0], o[1]), lambda t: (t[2], t[3])),
    }
    a = precategory_from_generators({1: E, 2: Pcat, 3: Tcat}, gens, CAT_WORLD)
    bad = validate_precategory(a)
    if bad:
        raise AssertionError("kernel-pair structure invalid: " + bad[0])
    return a


def eq_groupoid(p):
    """The kernel-pair precategory of p, validated."""
    if isinstance(p, FinSetMap):
        return _eq_groupoid_finset(p)
    if isinstance(p, Functor):
        return _eq_groupoid_cat(p)
    raise TypeError(f"no kernel-pair structure for {type(p).__name__}")


def _slice_equivariant_hom(a):
    """Pruned enumeration of equivariant maps in the slice world.

    Equivariance of m: w_x -> w_y against the data (phi_x, phi_y) decomposes
    into one constraint per element z = (q, t) of the first-projection
    pullback of w_x: writing phi_x(z) = (q, t'), the image m(t') is forced
    to the second coordinate of phi_y at (q, m(t)).  Backtracking over the
    carrier elements in order therefore visits only consistent prefixes and
    emits exactly the maps the exhaustive filter accepts, in the same
    lexicographic order.
    """
    u1 = a.at("d1")
    u0 = a.at("d0")

    def fast(x, y):
        wx, wy = x.w, y.w
        nx = len(wx.total)
        pb1x = pullback(u1, wx.leg)
        pb0x = pullback(u0, wx.leg)
        pb1y = pullback(u1, wy.leg)
        pb0y = pullback(u0, wy.leg)
        enc1y = {pair: lbl for lbl, pair in pb1y.elements.items()}
        posx = {t: i for i, t in enumerate(wx.total)}
        fibers = {}
        for t in wy.total:
            fibers.setdefault(wy.leg(t), []).append(t)
        cands = []
        for t in wx.total:
            c = fibers.get(wx.leg(t), [])
            if not c:
                return []
            cands.append(c)
        stages = [[] for _ in range(nx)]
        for z in pb1x.apex:
            q, t = pb1x.elements[z]
            _, t2 = pb0x.elements[x.phi.map(z)]
            i, j = posx[t], posx[t2]
            stages[max(i, j)].append((i, j, q))
        phi_y = y.phi.map
        dec0y = pb0y.elements
        assign = [None] * nx
        out = []

        def consistent(k):
            for i, j, q in stages[k]:
                forced = dec0y[phi_y(enc1y[(q, assign[i])])][1]
                if assign[j] != forced:
                    return False
            return True

        def rec(k):
            if k == nx:
                out.append(SliceMap(wx, wy,
                                    FinSetMap(wx.total, wy.total,
                                              tuple(assign))))
                return
            for c in cands[k]:
                assign[k] = c
                if consistent(k):
                    rec(k + 1)

        rec(0)
        return out

    return fast


def _maybe_install_fast_hom(ld, F, a):
    if getattr(F, "kind", "") == "basic" and a.world is FINSET_WORLD:
        ld.fast_hom = _slice_equivariant_hom(a)


def internal_actions(F, a, bound=None):
    """Descent data of F composed with the precategory a, at the bound."""
    A = compose_indexed_with_precategory(F, a)
    ld, up = build_lax_descent(A, enumeration=bound)
    _maybe_install_fast_hom(ld, F, a)
    return ld, up


@dataclass
class DescentFactorization:
    Kp: Functor
    forgetful: Functor
    composite_check: bool
    lax: object
    pair: object
    world: object
    eq: Precategory


def canonical_datum(F, p, a=None):
    """The coherence-induced descent datum beta on the inverse image of p.

    beta.at(x): F(d1-image)(F(p)x) -> F(d0-image)(F(p)x), built from the two
    invertible composition cells over the common composite p∘proj.
    """
    if a is None:
        a = eq_groupoid(p)
    A = compose_indexed_with_precategory(F, a)
    Fp = F.on_mor(p)
    lvl2 = A.level(2)
    coh_first = F.coh(a.at("d1"), p)
    coh_second = F.coh(a.at("d0"), p)
    cache = {}

    def component(x):
        if x not in cache:
            fwd = coh_first.at(x)
            back = inverse_of(lvl2, coh_second.at(x))
            if back is None:
                raise AssertionError("composition cell not invertible")
            cache[x] = lvl2.compose(back, fwd)
        return cache[x]

    beta = NatTrans(compose_functors(A.at("d1"), Fp),
                    compose_functors(A.at("d0"), Fp), component)
    return a, A, beta


def descent_factorization(F, p, bound=None):
    """Factor the inverse image of p through its category of descent data.

    The comparison functor is defined on the full subcategory of objects
    whose canonical datum lands inside the built enumeration: pulling back
    can grow an object past the bound, and a carrier outside the
    enumeration has nothing to compare against.
    """
    a, A, beta = canonical_datum(F, p)
    ld, up = build_lax_descent(A, enumeration=bound)
    _maybe_install_fast_hom(ld, F, a)
    Fp = F.on_mor(p)
    lvl1 = A.level(1)
    limit = bound if isinstance(bound, int) else getattr(lvl1, "bound", None)
    if getattr(F, "kind", "") == "basic" and limit is not None:
        # carriers are only label-isomorphic to enumerated objects, so the
        # membership test is their total size
        kept = [x for x in Fp.src.objects()
                if len(Fp.ob(x).total) <= limit]
    else:
        kept = [x for x in Fp.src.objects()
                if ld.contains(DescentObject(Fp.ob(x), beta.at(x)))]
    sub = FullSub(Fp.src, kept)
    Fp_sub = Functor(sub, Fp.dst, Fp.ob, Fp.mor)
    beta_sub = NatTrans(compose_functors(A.at("d1"), Fp_sub),
                        compose_functors(A.at("d0"), Fp_sub), beta.at)
    Kp = factor_functor(ld, Fp_sub, beta_sub)
    composite = functor_equal(compose_functors(up.dA, Kp), Fp_sub)
    return DescentFactorization(Kp, up.dA, composite, ld, up, A, a)


def is_effective_descent(F, p, bound=None):
    """Equivalence report for the descent comparison K_p.

    For a surjective map of finite sets in the slice world the verdict is
    exact at the given bound: every fiber of p is nonempty, so an object is
    never larger than its inverse image, and a preimage of a descent datum
    with carrier w has size at most |w|; all candidates therefore sit
    inside the restricted source.  Other instances get a bound-relative
    verdict.
    """
    df = descent_factorization(F, p, bound)
    ld, Kp = df.lax, df.Kp
    Cb = Kp.src
    bobjs = list(Cb.objects())
    report = {
        "fully_faithful": True,
        "ess_surj": True,
        "witness": None,
        "mode": "bounded",
        "composite_check": df.composite_check,
    }

    for x in bobjs:
        for y in bobjs:
            upstairs = list(Cb.hom(x, y))
            images = [Kp.mor(m) for m in upstairs]
            downstairs = ld.hom(Kp.ob(x), Kp.ob(y))
            if len(set(images)) != len(upstairs) or \
                    set(images) != set(downstairs):
                report["fully_faithful"] = False
                report["witness"] = ("hom", x, y)
                break
        if not report["fully_faithful"]:
            break

    carriers = [o.w for o in ld.objects()]
    sized = all(hasattr(w, "total") for w in carriers)
    maxsz = max((len(w.total) for w in carriers), default=0) if sized else 0
    exact = (isinstance(p, FinSetMap) and getattr(F, "kind", "") == "basic"
             and p.is_surjective()
             and getattr(Cb.base, "bound", -1) >= maxsz)
    if exact:
        report["mode"] = "exact"
    pool = [(len(Kp.ob(x).w.total) if sized else None, Kp.ob(x))
            for x in bobjs]
    for o in ld.objects():
        size = len(o.w.total) if sized else None
        hits = (Kx for sz, Kx in pool if size is None or sz == size)
        if not any(_isomorphic(ld, Kx, o) for Kx in hits):
            report["ess_surj"] = False
            report["witness"] = ("object", o)
            break

    report["effective"] = report["fully_faithful"] and report["ess_surj"]
    return report


def underlying_discrete(a):
    """The constant precategory at level 1 of a."""
    return constant_precategory(a.ob[1], a.world)
