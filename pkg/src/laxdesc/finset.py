"""The category of finite sets with chosen limits, slices and change of base.

Encoding contracts (these are load-bearing for golden tests):

* a finite set is a strictly increasing tuple of integer labels;
* the chosen pullback of f and g has apex labels that are the lexicographic
  ranks of the matching pairs inside dom(f) x dom(g), i.e.
  ``pos(x) * len(dom g) + pos(y)``;
* general limits encode matching families by their lexicographic rank in the
  product of the object sets, in diagram-object order;
* colimit classes are labeled by the least global rank of their members in
  the tagged disjoint union.

Slice categories exist in two flavors: a lazy protocol category (``SliceCat``)
whose enumeration is bounded but whose hom/compose work on arbitrary valid
slice objects, and a dense materialization (``slice_category``) returning a
plain FinCategory plus indexing, for small bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import FinCategory, Functor, NatTrans, Adjunction


# -- objects and maps ---------------------------------------------------------

def fsobj(labels):
    t = tuple(int(x) for x in labels)
    if list(t) != sorted(set(t)):
        raise ValueError(f"not a valid finite-set object: {labels!r}")
    return t


def fs_range(n):
    return tuple(range(n))


@dataclass(frozen=True)
class FinSetMap:
    dom: tuple
    cod: tuple
    img: tuple  # img[i] is the image of dom[i]

    def __post_init__(self):
        if len(self.img) != len(self.dom):
            raise ValueError("assignment not total on the domain")
        cod = set(self.cod)
        if not set(self.img) <= cod:
            raise ValueError("image escapes the codomain")
        object.__setattr__(self, "_lk", dict(zip(self.dom, self.img)))
        object.__setattr__(self, "_h", None)

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.dom, self.cod, self.img))
            object.__setattr__(self, "_h", h)
        return h

    def __call__(self, x):
        return self._lk[x]

    def is_surjective(self):
        return set(self.img) == set(self.cod)

    def is_injective(self):
        return len(set(self.img)) == len(self.img)


def fsmap(dom, cod, img):
    return FinSetMap(fsobj(dom), fsobj(cod), tuple(img))


def identity_map(X):
    return FinSetMap(X, X, X)


def compose_maps(g, f):
    if f.cod != g.dom:
        raise ValueError("maps not composable")
    return FinSetMap(f.dom, g.cod, tuple(g(f(x)) for x in f.dom))


def all_maps(X, Y):
    """All maps X -> Y in lexicographic order of their image tuples."""
    if not X:
        yield FinSetMap(X, Y, ())
        return
    if not Y:
        return
    for img in itertools.product(Y, repeat=len(X)):
        yield FinSetMap(X, Y, img)


def invert_map(m):
    """The two-sided inverse of a bijection, or None."""
    if len(m.dom) != len(m.cod) or len(set(m.img)) != len(m.img):
        return None
    back = {v: k for k, v in zip(m.dom, m.img)}
    return FinSetMap(m.cod, m.dom, tuple(back[c] for c in m.cod))


# -- chosen limits ------------------------------------------------------------

@dataclass
class ChosenLimit:
    apex: tuple
    projections: list          # cone legs, FinSetMap from apex
    elements: dict             # apex label -> decoded tuple of members


@dataclass
class ChosenColimit:
    apex: tuple
    injections: list           # cocone legs, FinSetMap into apex
    class_of: dict             # (diagram position, element) -> apex label


_PULLBACK_CACHE = {}


def pullback(f, g):
    """Chosen pullback of a cospan f: X -> B <- Y :g.

    Results are cached by the cospan and shared; callers treat them as
    read-only.
    """
    hit = _PULLBACK_CACHE.get((f, g))
    if hit is not None:
        return hit
    if f.cod != g.cod:
        raise ValueError("pullback needs a common codomain")
    X, Y = f.dom, g.dom
    width = len(Y)
    apex = []
    elements = {}
    p1 = []
    p2 = []
    for i, x in enumerate(X):
        for j, y in enumerate(Y):
            if f(x) == g(y):
                label = i * width + j
                apex.append(label)
                elements[label] = (x, y)
                p1.append(x)
                p2.append(y)
    apex = tuple(apex)
    proj1 = FinSetMap(apex, X, tuple(p1))
    proj2 = FinSetMap(apex, Y, tuple(p2))
    out = ChosenLimit(apex, [proj1, proj2], elements)
    _PULLBACK_CACHE[(f, g)] = out
    return out


def limit(shape, ob, mor):
    """Limit of a FinSet diagram: matching families by lexicographic rank.

    shape: a FinCategory; ob: object -> finite set; mor: morphism id -> map.
    """
    objs = list(shape.objects())
    sets = [ob[x] for x in objs]
    arrows = [(x, y, m) for x in objs for y in objs for m in shape.hom(x, y)]
    apex = []
    elements = {}
    legs = {x: [] for x in objs}
    for rank, family in enumerate(itertools.product(*sets)):
        val = dict(zip(objs, family))
        if all(mor[m](val[x]) == val[y] for (x, y, m) in arrows):
            apex.append(rank)
            elements[rank] = family
            for x in objs:
                legs[x].append(val[x])
    apex = tuple(apex)
    projections = {x: FinSetMap(apex, ob[x], tuple(legs[x])) for x in objs}
    lim = ChosenLimit(apex, projections, elements)
    return lim


def colimit(shape, ob, mor):
    """Colimit: tagged disjoint union modulo the generated equivalence."""
    objs = list(shape.objects())
    offset = {}
    total = 0
    for x in objs:
        offset[x] = total
        total += len(ob[x])
    def rank(x, v):
        return offset[x] + ob[x].index(v)

    parent = list(range(total))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for x in objs:
        for y in objs:
            for m in shape.hom(x, y):
                for v in ob[x]:
                    union(rank(x, v), rank(y, mor[m](v)))

    label_of = {a: find(a) for a in range(total)}
    # least representative: union() always roots at the minimum
    apex = tuple(sorted(set(label_of.values())))
    injections = {}
    class_of = {}
    for x in objs:
        imgs = []
        for v in ob[x]:
            lbl = label_of[rank(x, v)]
            imgs.append(lbl)
            class_of[(x, v)] = lbl
        injections[x] = FinSetMap(ob[x], apex, tuple(imgs))
    return ChosenColimit(apex, injections, class_of)


class FinSetCat:
    """Finite sets as a protocol category.

    Enumeration is bounded: objects() yields the subsets of range(bound) by
    size then lexicographically.  hom/compose accept arbitrary label tuples,
    so values produced by limits and colimits (whose apex labels need not be
    initial segments) still live here.
    """

    def __init__(self, bound):
        self.bound = int(bound)

    def with_bound(self, bound):
        return FinSetCat(bound)

    def objects(self):
        pool = range(self.bound)
        for k in range(self.bound + 1):
            for sub in itertools.combinations(pool, k):
                yield sub

    def hom(self, x, y):
        return list(all_maps(x, y))

    def identity(self, x):
        return identity_map(x)

    def compose(self, g, f):
        return compose_maps(g, f)

    def invert(self, m):
        return invert_map(m)

    def dom(self, m):
        return m.dom

    def cod(self, m):
        return m.cod

    def canonical_limit(self, shape, ob, mor):
        objs = list(shape.objects())
        if not objs:
            apex = (0,)

            def mediate_top(c, cone):
                return FinSetMap(c, apex, (0,) * len(c))

            return apex, {}, mediate_top
        lim = limit(shape, ob, mor)
        enc = {lim.elements[l]: l for l in lim.apex}

        def mediate(c, cone):
            img = tuple(enc[tuple(cone[x](t) for x in objs)] for t in c)
            return FinSetMap(c, lim.apex, img)

        return lim.apex, lim.projections, mediate

    def canonical_colimit(self, shape, ob, mor):
        objs = list(shape.objects())
        colim = colimit(shape, ob, mor)
        rep_of = {}
        for x in objs:
            for v in ob[x]:
                rep_of.setdefault(colim.class_of[(x, v)], (x, v))

        def comediate(c, cocone):
            img = tuple(cocone[rep_of[l][0]](rep_of[l][1]) for l in colim.apex)
            return FinSetMap(colim.apex, c, img)

        return colim.apex, colim.injections, comediate


# -- slice categories ---------------------------------------------------------

@dataclass(frozen=True)
class SliceObj:
    total: tuple
    leg: FinSetMap

    def __post_init__(self):
        if self.leg.dom != self.total:
            raise ValueError("leg must start at the total")
        object.__setattr__(self, "_h", None)

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.total, self.leg))
            object.__setattr__(self, "_h", h)
        return h


@dataclass(frozen=True)
class SliceMap:
    src: SliceObj
    dst: SliceObj
    map: FinSetMap

    def __post_init__(self):
        if self.map.dom != self.src.total or self.map.cod != self.dst.total:
            raise ValueError("underlying map has wrong endpoints")
        over = self.dst.leg
        under = self.src.leg
        f = self.map
        for t in self.src.total:
            if over(f(t)) != under(t):
                raise ValueError("triangle over the base does not commute")
        object.__setattr__(self, "_h", None)

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.src, self.dst, self.map))
            object.__setattr__(self, "_h", h)
        return h


class SliceCat:
    """Set/b, lazily: bounded enumeration, unbounded hom/compose."""

    def __init__(self, base, bound):
        self.base = fsobj(base)
        self.bound = int(bound)
        self._hom_cache = {}

    def with_bound(self, bound):
        return SliceCat(self.base, bound)

    def objects(self):
        for k in range(self.bound + 1):
            total = fs_range(k)
            for leg in all_maps(total, self.base):
                yield SliceObj(total, leg)

    def hom(self, x, y):
        # fiberwise enumeration: each element of the source total can only go
        # to the part of the target fiber over the same base point; iterating
        # choices in element order gives ascending lex order on image tuples
        key = (x, y)
        hit = self._hom_cache.get(key)
        if hit is not None:
            return hit
        fibers = {}
        for t in y.total:
            fibers.setdefault(y.leg(t), []).append(t)
        cands = []
        for t in x.total:
            c = fibers.get(x.leg(t), [])
            if not c:
                self._hom_cache[key] = []
                return []
            cands.append(c)
        out = []
        for img in itertools.product(*cands):
            out.append(SliceMap(x, y, FinSetMap(x.total, y.total, img)))
        self._hom_cache[key] = out
        return out

    def invert(self, m):
        back = invert_map(m.map)
        if back is None:
            return None
        return SliceMap(m.dst, m.src, back)

    def identity(self, x):
        return SliceMap(x, x, identity_map(x.total))

    def compose(self, g, f):
        if f.dst != g.src:
            raise ValueError("slice maps not composable")
        return SliceMap(f.src, g.dst, compose_maps(g.map, f.map))

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.dst

    # exact canonical (co)limits, used by the Kan engine ---------------------
    #
    # Both return (apex, legs, mediate); mediate builds the unique morphism
    # into (out of) the apex from a competing (co)cone, so callers never need
    # the label encoding.

    def canonical_limit(self, shape, ob, mor):
        objs = list(shape.objects())
        if not objs:
            top = SliceObj(self.base, identity_map(self.base))

            def mediate_top(c, cone):
                return SliceMap(c, top, c.leg)

            return top, {}, mediate_top
        lim = limit(shape, {x: ob[x].total for x in objs},
                    {m: mor[m].map for m in mor})
        # keep only families whose legs agree on the base
        keep = []
        legval = {}
        for lbl in lim.apex:
            fam = lim.elements[lbl]
            vals = {ob[x].leg(v) for x, v in zip(objs, fam)}
            if len(vals) == 1:
                keep.append(lbl)
                legval[lbl] = vals.pop()
        apex_set = tuple(keep)
        leg = FinSetMap(apex_set, self.base, tuple(legval[l] for l in keep))
        apex = SliceObj(apex_set, leg)
        legs = {}
        for x in objs:
            proj = lim.projections[x]
            sub = FinSetMap(apex_set, ob[x].total,
                            tuple(proj(l) for l in keep))
            legs[x] = SliceMap(apex, ob[x], sub)
        enc = {lim.elements[l]: l for l in keep}

        def mediate(c, cone):
            img = []
            for t in c.total:
                fam = tuple(cone[x].map(t) for x in objs)
                img.append(enc[fam])
            return SliceMap(c, apex, FinSetMap(c.total, apex_set, tuple(img)))

        return apex, legs, mediate

    def canonical_colimit(self, shape, ob, mor):
        objs = list(shape.objects())
        colim = colimit(shape, {x: ob[x].total for x in objs},
                        {m: mor[m].map for m in mor})
        # slice colimits are computed on totals; legs glue (all maps commute
        # over the base, so a class has a single leg value)
        legval = {}
        rep_of = {}
        for x in objs:
            for v in ob[x].total:
                lbl = colim.class_of[(x, v)]
                legval[lbl] = ob[x].leg(v)
                rep_of.setdefault(lbl, (x, v))
        leg = FinSetMap(colim.apex, self.base,
                        tuple(legval[l] for l in colim.apex))
        apex = SliceObj(colim.apex, leg)
        legs = {x: SliceMap(ob[x], apex, colim.injections[x]) for x in objs}

        def comediate(c, cocone):
            img = []
            for lbl in colim.apex:
                x, v = rep_of[lbl]
                img.append(cocone[x].map(v))
            return SliceMap(apex, c,
                            FinSetMap(colim.apex, c.total, tuple(img)))

        return apex, legs, comediate


class DenseSlice:
    """slice_category output: a FinCategory plus object/morphism indexing."""

    def __init__(self, cat, objs, mors):
        self.cat = cat
        self.objs = objs            # object index -> SliceObj
        self.mors = mors            # morphism id -> SliceMap
        self.obj_index = {o: i for i, o in enumerate(objs)}
        self.mor_index = {m: i for i, m in enumerate(mors)}


def slice_category(b, bound):
    """Materialize Set/b up to total size ``bound`` as a FinCategory."""
    lazy = SliceCat(b, bound)
    objs = list(lazy.objects())
    mors = []
    dom_cod = []
    for i, x in enumerate(objs):
        for j, y in enumerate(objs):
            for u in lazy.hom(x, y):
                mors.append(u)
                dom_cod.append((i, j))
    mor_index = {m: k for k, m in enumerate(mors)}
    identity_of = [mor_index[lazy.identity(x)] for x in objs]
    composition = {}
    for gi, g in enumerate(mors):
        for fi, f in enumerate(mors):
            if f.dst == g.src:
                composition[(gi, fi)] = mor_index[lazy.compose(g, f)]
    cat = FinCategory(len(objs), dom_cod, identity_of, composition)
    return DenseSlice(cat, objs, mors)


# -- change of base and its left adjoint ---------------------------------------

def change_of_base(f, bound):
    """f*: Set/cod(f) -> Set/dom(f) by the chosen pullbacks."""
    src = SliceCat(f.cod, bound)
    # pulled-back totals can outgrow the bound; enumeration of the target is
    # rarely needed, but give it room when it is
    dst = SliceCat(f.dom, bound * max(1, len(f.dom)))
    obs = {}
    encs = {}

    def on_obj(s):
        hit = obs.get(s)
        if hit is None:
            pb = pullback(f, s.leg)
            hit = obs[s] = SliceObj(pb.apex, pb.projections[0])
        return hit

    def enc_of(s):
        hit = encs.get(s)
        if hit is None:
            pb = pullback(f, s.leg)
            hit = encs[s] = {pair: lbl for lbl, pair in pb.elements.items()}
        return hit

    def on_mor(u):
        a = on_obj(u.src)
        b = on_obj(u.dst)
        pa = pullback(f, u.src.leg)
        enc = enc_of(u.dst)
        um = u.map
        img = []
        for lbl in pa.apex:
            x, t = pa.elements[lbl]
            img.append(enc[(x, um(t))])
        return SliceMap(a, b, FinSetMap(a.total, b.total, tuple(img)))

    return Functor(src, dst, on_obj, on_mor)


def postcompose(f, bound):
    """Σ_f: Set/dom(f) -> Set/cod(f), (T,t) -> (T, f∘t)."""
    src = SliceCat(f.dom, bound)
    dst = SliceCat(f.cod, bound)

    def on_obj(s):
        return SliceObj(s.total, compose_maps(f, s.leg))

    def on_mor(u):
        return SliceMap(on_obj(u.src), on_obj(u.dst), u.map)

    return Functor(src, dst, on_obj, on_mor)


def sigma_adjunction(f, bound):
    """Σ_f ⊣ f* with unit t ↦ (leg t, t) and counit (x, s) ↦ s."""
    sigma = postcompose(f, bound)
    fstar = change_of_base(f, bound)
    C = sigma.src   # Set/dom f

    def unit_at(s):
        target = fstar.ob(sigma.ob(s))
        pb = pullback(f, compose_maps(f, s.leg))
        enc = {pair: lbl for lbl, pair in pb.elements.items()}
        img = tuple(enc[(s.leg(t), t)] for t in s.total)
        return SliceMap(s, target, FinSetMap(s.total, target.total, img))

    def counit_at(s):
        source = sigma.ob(fstar.ob(s))
        pb = pullback(f, s.leg)
        img = tuple(pb.elements[lbl][1] for lbl in pb.apex)
        return SliceMap(source, s, FinSetMap(source.total, s.total, img))

    from .fincat import identity_functor, compose_functors
    unit = NatTrans(identity_functor(C),
                    compose_functors(fstar, sigma), unit_at)
    counit = NatTrans(compose_functors(sigma, fstar),
                      identity_functor(sigma.dst), counit_at)
    return Adjunction(left=sigma, right=fstar, unit=unit, counit=counit)


def coherence_iso(f, g, bound):
    """The canonical natural isomorphism f*∘g* ⇒ (g∘f)*.

    f: X -> Y and g: Y -> Z composable; components send (x,(y,t)) to (x,t),
    mediating between the chosen iterated apex and the chosen direct apex.
    """
    gf = compose_maps(g, f)
    fstar = change_of_base(f, bound)
    gstar = change_of_base(g, bound)
    gfstar = change_of_base(gf, bound)
    from .fincat import compose_functors
    left = compose_functors(fstar, gstar)

    def component(s):
        a = left.ob(s)          # f*(g* s)
        b = gfstar.ob(s)        # (g∘f)* s
        pg = pullback(g, s.leg)
        pf = pullback(f, gstar.ob(s).leg)
        pgf = pullback(gf, s.leg)
        enc = {pair: lbl for lbl, pair in pgf.elements.items()}
        img = []
        for lbl in pf.apex:
            x, ylab = pf.elements[lbl]
            _, t = pg.elements[ylab]
            img.append(enc[(x, t)])
        return SliceMap(a, b, FinSetMap(a.total, b.total, tuple(img)))

    return NatTrans(left, gfstar, component)


def basic_indexed_category(bound):
    """The indexed category b ↦ Set/b over finite sets, with chosen pullbacks."""
    from .pseudo import IndexedCategory

    def on_obj(b):
        return SliceCat(b, bound)

    def on_mor(f):
        return change_of_base(f, bound)

    def coh(f, g):
        return coherence_iso(f, g, bound)

    def coh_id(b):
        # id ⇒ id*: component at (T,t) is the mediating iso into the chosen
        # pullback of id along t
        idb = identity_map(fsobj(b))
        target = change_of_base(idb, bound)
        src_cat = SliceCat(b, bound)
        from .fincat import identity_functor

        def component(s):
            pb = pullback(idb, s.leg)
            enc = {pair: lbl for lbl, pair in pb.elements.items()}
            img = tuple(enc[(s.leg(t), t)] for t in s.total)
            dstob = target.ob(s)
            return SliceMap(s, dstob, FinSetMap(s.total, dstob.total, img))

        return NatTrans(identity_functor(src_cat), target, component)

    def left_adjoint(f):
        return sigma_adjunction(f, bound)

    return IndexedCategory(
        base="finset",
        on_obj=on_obj,
        on_mor=on_mor,
        coh=coh,
        coh_id=coh_id,
        left_adjoint=left_adjoint,
        kind="basic",
        bound=bound,
    )
