"""Pseudofunctor machinery: truncated pseudocosimplicial objects, indexed
categories, precategories, and their composition.

A TruncCosimp assigns a category to each of the three objects of the index
category, a functor to every one of its 17 morphisms, and invertible
coherence cells to every composable pair and every identity.  Validation is
bounded: component quantifiers run over the (bounded) object enumeration of
the level categories, capped by ``objects_cap``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import delta3
from .fincat import (
    Functor,
    NatTrans,
    compose_functors,
    functor_equal,
    identity_functor,
    inverse_of,
)
from .finset import (FinSetMap, all_maps, compose_maps, fs_range,
                     identity_map, invert_map)


# -- indexed categories --------------------------------------------------------

@dataclass
class IndexedCategory:
    """A contravariant pseudofunctor from a base into Cat, given by callables.

    on_obj(b) is a protocol category; on_mor(u) a functor in the reversed
    direction; coh(u, v), for u: x -> y and v: y -> z composable in the base,
    is the invertible cell on_mor(u)∘on_mor(v) ⇒ on_mor(v∘u); coh_id(b) is
    the invertible cell id ⇒ on_mor(id_b).  left_adjoint(u), when available,
    returns an Adjunction whose right leg is on_mor(u).
    """

    base: str
    on_obj: object
    on_mor: object
    coh: object
    coh_id: object
    left_adjoint: object = None
    kind: str = "generic"
    bound: int = 0


# -- monoids -------------------------------------------------------------------

@dataclass
class Monoid:
    elements: tuple
    mult: dict        # (a, b) -> a·b
    unit: object

    def index(self, e):
        return self.elements.index(e)


def validate_monoid(m):
    report = []
    els = m.elements
    if m.unit not in els:
        report.append("unit is not an element")
        return report
    for a in els:
        for b in els:
            if (a, b) not in m.mult:
                report.append(f"product {a!r}·{b!r} missing")
            elif m.mult[(a, b)] not in els:
                report.append(f"product {a!r}·{b!r} escapes the carrier")
    if report:
        return report
    for a in els:
        if m.mult[(m.unit, a)] != a or m.mult[(a, m.unit)] != a:
            report.append(f"unit law fails at {a!r}")
    for a in els:
        for b in els:
            for c in els:
                if m.mult[(m.mult[(a, b)], c)] != m.mult[(a, m.mult[(b, c)])]:
                    report.append(f"associativity fails at {a!r},{b!r},{c!r}")
    return report


# -- precategories -------------------------------------------------------------

class FinSetWorld:
    """Base world whose objects are finite sets and morphisms FinSetMaps."""

    name = "finset"

    def compose(self, g, f):
        return compose_maps(g, f)

    def identity(self, x):
        return identity_map(x)

    def equal(self, f, g):
        return f == g

    def same_object(self, x, y):
        return x == y

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod


class CatWorld:
    """Base world whose objects are dense finite categories and morphisms
    functors between them; equality of functors is table equality."""

    name = "cat"

    def compose(self, g, f):
        return compose_functors(g, f)

    def identity(self, x):
        return identity_functor(x)

    def equal(self, f, g):
        return functor_equal(f, g)

    def same_object(self, x, y):
        return x is y

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.dst


FINSET_WORLD = FinSetWorld()
CAT_WORLD = CatWorld()


@dataclass
class Precategory:
    """A contravariant functor from the index category to a base world.

    ob maps levels 1,2,3 to base objects; mor maps every one of the 17
    index morphisms m to a base morphism a(m): ob[m.cod] -> ob[m.dom].
    """

    ob: dict
    mor: dict
    world: object

    def at(self, m):
        if isinstance(m, str):
            m = delta3.parse(m)
        return self.mor[m]


def precategory_from_generators(ob, gens, world):
    """Extend generator images (contravariantly) to all 17 morphisms."""
    mor = {}
    for x in (1, 2, 3):
        mor[delta3.IDS[x]] = world.identity(ob[x])
    for m in delta3.MORPHISMS:
        if not m.word:
            continue
        out = None
        for name in m.word:
            img = gens[name]
            out = img if out is None else world.compose(img, out)
        mor[m] = out
    return Precategory(ob=dict(ob), mor=mor, world=world)


def validate_precategory(a):
    report = []
    w = a.world
    for x in (1, 2, 3):
        if x not in a.ob:
            report.append(f"level {x} object missing")
    for m in delta3.MORPHISMS:
        if m not in a.mor:
            report.append(f"image of {m} missing")
    if report:
        return report
    for x in (1, 2, 3):
        if not w.equal(a.mor[delta3.IDS[x]], w.identity(a.ob[x])):
            report.append(f"identity at level {x} not preserved")
    for m in delta3.MORPHISMS:
        img = a.mor[m]
        if not w.same_object(w.dom(img), a.ob[m.cod]) \
                or not w.same_object(w.cod(img), a.ob[m.dom]):
            report.append(f"image of {m} has wrong endpoints")
    if report:
        return report
    for (h, g) in delta3.composable_pairs():
        want = a.mor[delta3.compose(h, g)]
        got = w.compose(a.mor[g], a.mor[h])
        if not w.equal(want, got):
            report.append(f"functoriality fails at {h}∘{g}")
    return report


def sigma_precategory(m):
    """One-object precategory of a finite monoid, over finite sets.

    Level 1 is a point, level 2 the carrier, level 3 the square of the
    carrier encoded by rank pairs (i,j) -> i·n+j.  The two outer face maps
    out of level 3 are the projections (D0 second, D2 first) and the middle
    one is the multiplication table; the degeneracy picks the unit.
    """
    bad = validate_monoid(m)
    if bad:
        raise ValueError("not a monoid: " + "; ".join(bad))
    n = len(m.elements)
    point = fs_range(1)
    carrier = fs_range(n)
    square = fs_range(n * n)
    idx = {e: i for i, e in enumerate(m.elements)}
    gens = {
        "d0": FinSetMap(carrier, point, (0,) * n),
        "d1": FinSetMap(carrier, point, (0,) * n),
        "s0": FinSetMap(point, carrier, (idx[m.unit],)),
        "D0": FinSetMap(square, carrier, tuple(r % n for r in square)),
        "D2": FinSetMap(square, carrier, tuple(r // n for r in square)),
        "D1": FinSetMap(square, carrier, tuple(
            idx[m.mult[(m.elements[r // n], m.elements[r % n])]]
            for r in square)),
    }
    a = precategory_from_generators({1: point, 2: carrier, 3: square},
                                    gens, FINSET_WORLD)
    bad = validate_precategory(a)
    if bad:
        raise AssertionError("monoid precategory invalid: " + "; ".join(bad))
    return a


def constant_precategory(obj, world):
    """The discrete precategory at one object: every image an identity."""
    gens = {name: world.identity(obj)
            for name in ("d0", "d1", "s0", "D0", "D1", "D2")}
    return precategory_from_generators({1: obj, 2: obj, 3: obj}, gens, world)


# -- truncated pseudocosimplicial objects ---------------------------------------

class TruncCosimp:
    """A pseudofunctor out of the index category, with explicit coherence.

    levels: {1,2,3} -> protocol category
    on_mor: Delta3Morphism -> Functor (covariant)
    coh_comp: (h, g) -> invertible NatTrans on_mor(h)∘on_mor(g) ⇒ on_mor(h∘g)
    coh_id: level -> invertible NatTrans id ⇒ on_mor(identity)
    """

    def __init__(self, levels, on_mor, coh_comp, coh_id):
        self.levels = dict(levels)
        self.on_mor = dict(on_mor)
        self.coh_comp = dict(coh_comp)
        self.coh_id = dict(coh_id)

    def level(self, x):
        return self.levels[x]

    def at(self, m):
        if isinstance(m, str):
            m = delta3.parse(m)
        return self.on_mor[m]

    def cell(self, h, g):
        if isinstance(h, str):
            h = delta3.parse(h)
        if isinstance(g, str):
            g = delta3.parse(g)
        return self.coh_comp[(h, g)]


def strict_trunc_cosimp(levels, gens):
    """Build a strict instance from a genuine functor on generators.

    gens: name -> Functor for the six generators; composites are formed by
    functor composition, so coherence cells can be identities.  The caller
    is responsible for the generator functors actually satisfying the index
    category's relations on the nose (validated afterwards).
    """
    on_mor = {}
    for x in (1, 2, 3):
        on_mor[delta3.IDS[x]] = identity_functor(levels[x])
    for m in delta3.MORPHISMS:
        if not m.word:
            continue
        out = None
        for name in m.word:
            f = gens[name]
            out = f if out is None else compose_functors(out, f)
        on_mor[m] = out
    coh_comp = {}
    for (h, g) in delta3.composable_pairs():
        left = compose_functors(on_mor[h], on_mor[g])
        right = on_mor[delta3.compose(h, g)]
        lvl = levels[h.cod]
        coh_comp[(h, g)] = NatTrans(
            left, right, lambda s, _l=left, _c=lvl: _c.identity(_l.ob(s)))
    coh_id = {}
    for x in (1, 2, 3):
        lvl = levels[x]
        coh_id[x] = NatTrans(identity_functor(lvl), on_mor[delta3.IDS[x]],
                             lambda s, _c=lvl: _c.identity(s))
    return TruncCosimp(levels, on_mor, coh_comp, coh_id)


def _sample(cat, cap):
    out = []
    for x in cat.objects():
        out.append(x)
        if len(out) >= cap:
            break
    return out


def validate_trunc_cosimp(A, objects_cap=40):
    """Law report for a TruncCosimp; empty iff no violation was found.

    Components are quantified over at most objects_cap objects per level
    (the enumeration order of the level categories decides which; bounded
    worlds enumerate small objects first, so the cap keeps the most
    informative prefix).  Pairs and triples of index morphisms are always
    exhaustive.
    """
    report = []
    for m in delta3.MORPHISMS:
        if m not in A.on_mor:
            report.append(f"functor for {m} missing")
    pairs = delta3.composable_pairs()
    for pair in pairs:
        if pair not in A.coh_comp:
            report.append(f"coherence cell for {pair[0]}∘{pair[1]} missing")
    for x in (1, 2, 3):
        if x not in A.coh_id:
            report.append(f"identity coherence at level {x} missing")
    if report:
        return report

    samples = {x: _sample(A.levels[x], objects_cap) for x in (1, 2, 3)}

    def functor_of(m):
        return A.on_mor[m]

    # each composition cell: typing, invertibility, naturality
    for (h, g) in pairs:
        cell = A.coh_comp[(h, g)]
        lvl_src = A.levels[g.dom]
        lvl_dst = A.levels[h.cod]
        hg = delta3.compose(h, g)
        objs = samples[g.dom]
        comp = {}
        bad = False
        for s in objs:
            c = cell.at(s)
            left_ob = functor_of(h).ob(functor_of(g).ob(s))
            right_ob = functor_of(hg).ob(s)
            if lvl_dst.dom(c) != left_ob or lvl_dst.cod(c) != right_ob:
                report.append(f"cell {h}∘{g} mistyped at {s!r}")
                bad = True
                break
            if inverse_of(lvl_dst, c) is None:
                report.append(f"cell {h}∘{g} not invertible at {s!r}")
                bad = True
                break
            comp[s] = c
        if bad:
            continue
        for s in objs:
            for t in objs:
                for u in lvl_src.hom(s, t):
                    lhs = lvl_dst.compose(
                        comp[t], functor_of(h).mor(functor_of(g).mor(u)))
                    rhs = lvl_dst.compose(functor_of(hg).mor(u), comp[s])
                    if lhs != rhs:
                        report.append(f"cell {h}∘{g} unnatural at {u!r}")
                        bad = True
                        break
                if bad:
                    break
            if bad:
                break

    # identity cells: typing, invertibility, naturality
    for x in (1, 2, 3):
        cell = A.coh_id[x]
        lvl = A.levels[x]
        idm = delta3.IDS[x]
        objs = samples[x]
        for s in objs:
            c = cell.at(s)
            if lvl.dom(c) != s or lvl.cod(c) != functor_of(idm).ob(s):
                report.append(f"identity cell at level {x} mistyped at {s!r}")
                break
            if inverse_of(lvl, c) is None:
                report.append(
                    f"identity cell at level {x} not invertible at {s!r}")
                break
        for s in objs:
            for t in objs:
                for u in lvl.hom(s, t):
                    lhs = lvl.compose(cell.at(t), u)
                    rhs = lvl.compose(functor_of(idm).mor(u), cell.at(s))
                    if lhs != rhs:
                        report.append(
                            f"identity cell at level {x} unnatural at {u!r}")
                        break

    if report:
        return report

    # associativity pasting over all composable triples
    for (f, g) in pairs:
        for e in delta3.MORPHISMS:
            if e.cod != g.dom:
                continue
            ge = delta3.compose(g, e)
            fg = delta3.compose(f, g)
            lvl = A.levels[f.cod]
            for s in samples[e.dom]:
                way1 = lvl.compose(A.coh_comp[(f, ge)].at(s),
                                   functor_of(f).mor(A.coh_comp[(g, e)].at(s)))
                way2 = lvl.compose(A.coh_comp[(fg, e)].at(s),
                                   A.coh_comp[(f, g)].at(functor_of(e).ob(s)))
                if way1 != way2:
                    report.append(
                        f"associativity pasting fails for {f},{g},{e} at {s!r}")
                    break

    # identity pasting for every morphism, on both sides
    for m in delta3.MORPHISMS:
        idc = delta3.IDS[m.cod]
        idd = delta3.IDS[m.dom]
        lvl = A.levels[m.cod]
        for s in samples[m.dom]:
            ms = functor_of(m).ob(s)
            left = lvl.compose(A.coh_comp[(idc, m)].at(s),
                               A.coh_id[m.cod].at(ms))
            if left != lvl.identity(ms):
                report.append(f"left identity pasting fails for {m} at {s!r}")
                break
            right = lvl.compose(A.coh_comp[(m, idd)].at(s),
                                functor_of(m).mor(A.coh_id[m.dom].at(s)))
            if right != lvl.identity(ms):
                report.append(f"right identity pasting fails for {m} at {s!r}")
                break
    return report


@dataclass
class DerivedCells:
    """The five structure cells of a TruncCosimp used by descent equations.

    sigma01: (D1)∘(d0) ⇒ (D0)∘(d0);  sigma02: (D2)∘(d0) ⇒ (D0)∘(d1);
    sigma12: (D2)∘(d1) ⇒ (D1)∘(d1);  n0: (s0)∘(d0) ⇒ id;  n1: (s0)∘(d1) ⇒ id.
    """

    sigma01: NatTrans
    sigma02: NatTrans
    sigma12: NatTrans
    n0: NatTrans
    n1: NatTrans


def _inv_cell(A, pair):
    """Componentwise inverse of a coherence cell, lazily."""
    cell = A.coh_comp[pair] if isinstance(pair, tuple) else A.coh_id[pair]
    lvl = A.levels[pair[0].cod] if isinstance(pair, tuple) else A.levels[pair]

    def component(s):
        inv = inverse_of(lvl, cell.at(s))
        if inv is None:
            raise ValueError(f"coherence cell at {s!r} is not invertible")
        return inv

    return NatTrans(cell.dst, cell.src, component)


def derived_cells(A):
    """The sigma and n cells, by the defining coherence composites."""
    D0, D1, D2 = delta3.GEN["D0"], delta3.GEN["D1"], delta3.GEN["D2"]
    d0, d1, s0 = delta3.GEN["d0"], delta3.GEN["d1"], delta3.GEN["s0"]
    lvl3 = A.levels[3]
    lvl1 = A.levels[1]

    def paste(inv_pair, pair, lvl):
        fwd = A.coh_comp[pair]
        bwd = _inv_cell(A, inv_pair) if isinstance(inv_pair, tuple) else inv_pair

        def component(s):
            return lvl.compose(bwd.at(s), fwd.at(s))

        left = compose_functors(A.on_mor[pair[0]], A.on_mor[pair[1]])
        return NatTrans(left, bwd.dst, component)

    sigma01 = paste((D0, d0), (D1, d0), lvl3)
    sigma02 = paste((D0, d1), (D2, d0), lvl3)
    sigma12 = paste((D1, d1), (D2, d1), lvl3)

    inv_id1 = NatTrans(A.coh_id[1].dst, A.coh_id[1].src,
                       lambda s: _must_invert(lvl1, A.coh_id[1].at(s)))
    n0 = paste(inv_id1, (s0, d0), lvl1)
    n1 = paste(inv_id1, (s0, d1), lvl1)
    return DerivedCells(sigma01, sigma02, sigma12, n0, n1)


def _must_invert(lvl, m):
    inv = inverse_of(lvl, m)
    if inv is None:
        raise ValueError("structure cell not invertible")
    return inv


# -- composing an indexed category with a precategory ---------------------------

def compose_indexed_with_precategory(F, a):
    """The pseudofunctor x ↦ F(a(x)) out of the index category.

    Levels are F.on_obj of the precategory's objects; the functor at an
    index morphism m is F.on_mor(a(m)); the coherence cell at a composable
    pair (h, g) is F.coh(a(h), a(g)), which typechecks because a reverses
    composition and F reverses it again.
    """
    levels = {x: F.on_obj(a.ob[x]) for x in (1, 2, 3)}
    on_mor = {m: F.on_mor(a.mor[m]) for m in delta3.MORPHISMS}
    coh_comp = {}
    for (h, g) in delta3.composable_pairs():
        coh_comp[(h, g)] = F.coh(a.mor[h], a.mor[g])
    coh_id = {x: F.coh_id(a.ob[x]) for x in (1, 2, 3)}
    return TruncCosimp(levels, on_mor, coh_comp, coh_id)


# -- the diagram world: functor categories as an indexed category ----------------

@dataclass(frozen=True)
class FSFunctor:
    """A set-valued diagram on a dense finite category, as explicit tables.

    ob[i] is the value at object i; mor[k] the map at morphism id k.
    """

    ob: tuple
    mor: tuple


@dataclass(frozen=True)
class FSNat:
    src: FSFunctor
    dst: FSFunctor
    components: tuple   # indexed by shape object


class FunctorCat:
    """Diagrams shape -> finite sets with values of size <= bound.

    Enumeration is bounded and canonical (value sets are initial segments);
    hom/compose accept diagrams with arbitrary label sets, so pointwise
    (co)limit values live here too.
    """

    def __init__(self, shape, bound):
        self.shape = shape
        self.bound = int(bound)
        self._hom_cache = {}

    def with_bound(self, bound):
        return FunctorCat(self.shape, bound)

    def objects(self):
        sh = self.shape
        n = sh.object_count
        nonid = [k for k in sh.all_morphisms()
                 if k not in sh.identity_of]
        for sizes in itertools.product(range(self.bound + 1), repeat=n):
            obs = tuple(fs_range(k) for k in sizes)
            cands = []
            for k in nonid:
                d, c = sh.morphisms[k]
                cands.append(list(all_maps(obs[d], obs[c])))
            if any(not c for c in cands):
                continue
            for choice in itertools.product(*cands):
                mor = [None] * len(sh.morphisms)
                for x in range(n):
                    mor[sh.identity_of[x]] = identity_map(obs[x])
                for k, u in zip(nonid, choice):
                    mor[k] = u
                cand = FSFunctor(obs, tuple(mor))
                if self._functorial(cand):
                    yield cand

    def _functorial(self, f):
        sh = self.shape
        for (g, u), h in sh.composition.items():
            if compose_maps(f.mor[g], f.mor[u]) != f.mor[h]:
                return False
        return True

    def hom(self, f, g):
        key = (f, g)
        hit = self._hom_cache.get(key)
        if hit is not None:
            return hit
        sh = self.shape
        n = sh.object_count
        cands = [list(all_maps(f.ob[i], g.ob[i])) for i in range(n)]
        if any(not c for c in cands):
            self._hom_cache[key] = []
            return []
        nonid = [k for k in sh.all_morphisms() if k not in sh.identity_of]
        out = []
        for choice in itertools.product(*cands):
            ok = True
            for k in nonid:
                d, c = sh.morphisms[k]
                if compose_maps(choice[c], f.mor[k]) != \
                        compose_maps(g.mor[k], choice[d]):
                    ok = False
                    break
            if ok:
                out.append(FSNat(f, g, tuple(choice)))
        self._hom_cache[key] = out
        return out

    def identity(self, f):
        return FSNat(f, f, tuple(identity_map(s) for s in f.ob))

    def compose(self, beta, alpha):
        if alpha.dst != beta.src:
            raise ValueError("diagram maps not composable")
        comps = tuple(compose_maps(b, a)
                      for b, a in zip(beta.components, alpha.components))
        return FSNat(alpha.src, beta.dst, comps)

    def invert(self, m):
        backs = []
        for c in m.components:
            b = invert_map(c)
            if b is None:
                return None
            backs.append(b)
        return FSNat(m.dst, m.src, tuple(backs))

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.dst

    # canonical pointwise (co)limits -----------------------------------------

    def _pointwise(self):
        from .finset import FinSetCat
        return FinSetCat(0)

    def canonical_limit(self, shape2, ob, mor):
        sh = self.shape
        fs = self._pointwise()
        objs2 = list(shape2.objects())
        per = []
        for i in range(sh.object_count):
            apex_i, legs_i, mediate_i = fs.canonical_limit(
                shape2,
                {x: ob[x].ob[i] for x in objs2},
                {m: mor[m].components[i] for m in mor})
            per.append((apex_i, legs_i, mediate_i))
        apex_ob = tuple(p[0] for p in per)
        apex_mor = []
        for k in sh.all_morphisms():
            i, j = sh.morphisms[k]
            cone = {x: compose_maps(ob[x].mor[k], per[i][1][x])
                    for x in objs2} if objs2 else {}
            apex_mor.append(per[j][2](per[i][0], cone))
        apex = FSFunctor(apex_ob, tuple(apex_mor))
        legs = {x: FSNat(apex, ob[x],
                         tuple(per[i][1][x] for i in range(sh.object_count)))
                for x in objs2}

        def mediate(c, cone):
            comps = tuple(
                per[i][2](c.ob[i], {x: cone[x].components[i] for x in objs2})
                for i in range(sh.object_count))
            return FSNat(c, apex, comps)

        return apex, legs, mediate

    def canonical_colimit(self, shape2, ob, mor):
        sh = self.shape
        fs = self._pointwise()
        objs2 = list(shape2.objects())
        per = []
        for i in range(sh.object_count):
            apex_i, legs_i, comediate_i = fs.canonical_colimit(
                shape2,
                {x: ob[x].ob[i] for x in objs2},
                {m: mor[m].components[i] for m in mor})
            per.append((apex_i, legs_i, comediate_i))
        apex_ob = tuple(p[0] for p in per)
        apex_mor = []
        for k in sh.all_morphisms():
            i, j = sh.morphisms[k]
            cocone = {x: compose_maps(per[j][1][x], ob[x].mor[k])
                      for x in objs2}
            apex_mor.append(per[i][2](per[j][0], cocone))
        apex = FSFunctor(apex_ob, tuple(apex_mor))
        legs = {x: FSNat(ob[x], apex,
                         tuple(per[i][1][x] for i in range(sh.object_count)))
                for x in objs2}

        def comediate(c, cocone):
            comps = tuple(
                per[i][2](c.ob[i], {x: cocone[x].components[i] for x in objs2})
                for i in range(sh.object_count))
            return FSNat(apex, c, comps)

        return apex, legs, comediate


def precompose_diagrams(p, bound):
    """Restriction along a functor p, as a functor between diagram worlds."""
    src = FunctorCat(p.dst, bound)
    dst = FunctorCat(p.src, bound)
    nsrc = p.src.object_count

    def on_obj(f):
        obs = tuple(f.ob[p.ob(i)] for i in range(nsrc))
        mors = tuple(f.mor[p.mor(k)] for k in p.src.all_morphisms())
        return FSFunctor(obs, mors)

    def on_mor(alpha):
        comps = tuple(alpha.components[p.ob(i)] for i in range(nsrc))
        return FSNat(on_obj(alpha.src), on_obj(alpha.dst), comps)

    return Functor(src, dst, on_obj, on_mor)


def diagram_indexed_category(bound):
    """The indexed category e ↦ (diagrams on e), strict coherence.

    Base objects are dense finite categories, base morphisms functors; the
    image of p is restriction along p.  Restriction composes strictly, so
    all coherence cells are identities.
    """

    def on_obj(e):
        return FunctorCat(e, bound)

    def on_mor(p):
        return precompose_diagrams(p, bound)

    def coh(u, v):
        # F(u)∘F(v) ⇒ F(v∘u), identity components (tables coincide)
        left = compose_functors(on_mor(u), on_mor(v))
        right = on_mor(compose_functors(v, u))
        world = FunctorCat(u.src, bound)
        return NatTrans(left, right, lambda f: world.identity(left.ob(f)))

    def coh_id(e):
        world = FunctorCat(e, bound)
        return NatTrans(identity_functor(world), on_mor(identity_functor(e)),
                        lambda f: world.identity(f))

    def left_adjoint(p):
        from .kan import diagram_lan_adjunction
        return diagram_lan_adjunction(p, bound)

    return IndexedCategory(
        base="cat",
        on_obj=on_obj,
        on_mor=on_mor,
        coh=coh,
        coh_id=coh_id,
        left_adjoint=left_adjoint,
        kind="diagram",
        bound=bound,
    )
