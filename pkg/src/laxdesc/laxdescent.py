"""Lax descent categories and their two universal-property factorizations.

Objects are pairs (w, phi) where phi is a coherence morphism between the two
face images of w, subject to an associativity equation over level 3 and an
identity equation over level 1.  The forgetful functor projects onto w; the
universal 2-cell has the phi's as components.

The factorization equations for a candidate (F, beta) are implemented by
their pointwise reduction: beta natural plus each component a descent datum.
Evaluating the corresponding pasting diagrams in Cat at a single object
yields exactly these conditions, so no symbolic pasting machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import (
    Functor,
    NatTrans,
    check_functor,
    check_natural,
    compose_functors,
    enumerate_functors,
    functor_equal,
    inverse_of,
    nat_equal,
)
from .pseudo import derived_cells


@dataclass(frozen=True)
class DescentObject:
    w: object
    phi: object

    def __post_init__(self):
        object.__setattr__(self, "_h", None)

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.w, self.phi))
            object.__setattr__(self, "_h", h)
        return h


@dataclass(frozen=True)
class DescentMorphism:
    src: DescentObject
    dst: DescentObject
    m: object

    def __post_init__(self):
        object.__setattr__(self, "_h", None)

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.src, self.dst, self.m))
            object.__setattr__(self, "_h", h)
        return h


class LaxDescentCategory:
    """Protocol category of descent data over a TruncCosimp.

    The object list is fixed at construction; hom sets are filtered from
    level-1 hom sets by the equivariance condition.
    """

    def __init__(self, A, objects):
        self.A = A
        self.cells = derived_cells(A)
        self._objects = list(objects)
        self._object_set = set(self._objects)
        self._lvl1 = A.level(1)
        self._lvl2 = A.level(2)
        self._d0 = A.at("d0")
        self._d1 = A.at("d1")
        self._hom_cache = {}
        # optional pruned enumerator (x, y) -> level-1 morphisms, installed
        # by world-specific builders; must agree with the equivariance filter
        self.fast_hom = None

    def objects(self):
        return list(self._objects)

    def contains(self, o):
        return o in self._object_set

    def equivariant(self, x, y, m):
        """Does m: x.w -> y.w commute with the two descent data?"""
        lhs = self._lvl2.compose(self._d0.mor(m), x.phi)
        rhs = self._lvl2.compose(y.phi, self._d1.mor(m))
        return lhs == rhs

    def hom(self, x, y):
        key = (x, y)
        hit = self._hom_cache.get(key)
        if hit is not None:
            return hit
        if self.fast_hom is not None:
            out = [DescentMorphism(x, y, m) for m in self.fast_hom(x, y)]
        else:
            out = [DescentMorphism(x, y, m)
                   for m in self._lvl1.hom(x.w, y.w)
                   if self.equivariant(x, y, m)]
        self._hom_cache[key] = out
        return out

    def identity(self, x):
        return DescentMorphism(x, x, self._lvl1.identity(x.w))

    def compose(self, g, f):
        if f.dst != g.src:
            raise ValueError("descent morphisms not composable")
        return DescentMorphism(f.src, g.dst, self._lvl1.compose(g.m, f.m))

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.dst

    def invert(self, dm):
        """Inverse of an invertible descent morphism.

        The inverse of the carrier morphism is automatically equivariant:
        conjugating the commuting square by the two inverses gives the
        square for the inverse.
        """
        back = inverse_of(self._lvl1, dm.m)
        if back is None:
            return None
        return DescentMorphism(dm.dst, dm.src, back)


@dataclass
class UniversalPair:
    dA: Functor     # forgetful, lax descent category -> level 1
    psi: NatTrans   # (d1-image)∘dA ⇒ (d0-image)∘dA, components the phi's


def is_descent_datum(A, w, phi, cells=None):
    """Check the associativity and identity equations for phi at w."""
    if cells is None:
        cells = derived_cells(A)
    lvl1, lvl2, lvl3 = A.level(1), A.level(2), A.level(3)
    d0w = A.at("d0").ob(w)
    d1w = A.at("d1").ob(w)
    if lvl2.dom(phi) != d1w or lvl2.cod(phi) != d0w:
        raise ValueError("phi has the wrong endpoints for a descent datum")
    lhs = lvl3.compose(
        A.at("D0").mor(phi),
        lvl3.compose(cells.sigma02.at(w), A.at("D2").mor(phi)))
    rhs = lvl3.compose(
        cells.sigma01.at(w),
        lvl3.compose(A.at("D1").mor(phi), cells.sigma12.at(w)))
    if lhs != rhs:
        return False
    left = lvl1.compose(cells.n0.at(w), A.at("s0").mor(phi))
    return left == cells.n1.at(w)


def _enumeration(A, enumeration):
    lvl1 = A.level(1)
    if enumeration is None:
        return list(lvl1.objects())
    if isinstance(enumeration, int):
        if hasattr(lvl1, "with_bound"):
            return list(lvl1.with_bound(enumeration).objects())
        return list(lvl1.objects())[:enumeration]
    return list(enumeration)


def build_lax_descent(A, enumeration=None):
    """All descent data over the enumerated w's, plus the universal pair."""
    cells = derived_cells(A)
    lvl2 = A.level(2)
    d0, d1 = A.at("d0"), A.at("d1")
    objects = []
    for w in _enumeration(A, enumeration):
        src = d1.ob(w)
        dst = d0.ob(w)
        for phi in lvl2.hom(src, dst):
            if is_descent_datum(A, w, phi, cells):
                objects.append(DescentObject(w, phi))
    ld = LaxDescentCategory(A, objects)
    dA = Functor(ld, A.level(1), lambda o: o.w, lambda dm: dm.m)
    psi = NatTrans(compose_functors(d1, dA), compose_functors(d0, dA),
                   lambda o: o.phi)
    return ld, UniversalPair(dA, psi)


def check_universal_pair(A, up):
    """Recheck the descent equations for (dA, psi), pointwise."""
    report = []
    ld = up.dA.src
    cells = ld.cells if isinstance(ld, LaxDescentCategory) else derived_cells(A)
    report.extend(check_functor(up.dA))
    report.extend(check_natural(up.psi))
    for o in ld.objects():
        if up.psi.at(o) != o.phi:
            report.append(f"universal component at {o!r} is not its datum")
        elif not is_descent_datum(A, o.w, o.phi, cells):
            report.append(f"component at {o!r} fails the descent equations")
    return report


def factor_functor(ld, F, beta):
    """The unique functor into the lax descent category induced by (F, beta).

    F lands in level 1, beta: (d1-image)∘F ⇒ (d0-image)∘F is natural, and
    every component must be a descent datum at the corresponding object
    (rejected with a witness otherwise).  The result composes with the
    forgetful functor back to F strictly, and whiskering the universal
    2-cell recovers beta.
    """
    A = ld.A
    bad = check_natural(beta)
    if bad:
        raise ValueError("beta is not natural: " + bad[0])
    for s in F.src.objects():
        if not is_descent_datum(A, F.ob(s), beta.at(s), ld.cells):
            raise ValueError(f"component at {s!r} is not a descent datum")

    def ob(s):
        return DescentObject(F.ob(s), beta.at(s))

    def mor(m):
        return DescentMorphism(ob(F.src.dom(m)), ob(F.src.cod(m)), F.mor(m))

    return Functor(F.src, ld, ob, mor)


def factor_2cell(ld, F1c, F0c, xi):
    """The unique 2-cell into the lax descent category lifting xi.

    F1c, F0c land in the lax descent category; xi relates their forgetful
    images.  Each component must be equivariant for the corresponding
    descent data (rejected with a witness otherwise); the lift has the same
    components.
    """
    bad = check_natural(xi)
    if bad:
        raise ValueError("xi is not natural: " + bad[0])
    for s in F1c.src.objects():
        x, y = F1c.ob(s), F0c.ob(s)
        if not ld.equivariant(x, y, xi.at(s)):
            raise ValueError(f"component at {s!r} is not equivariant")
    return NatTrans(F1c, F0c,
                    lambda s: DescentMorphism(F1c.ob(s), F0c.ob(s), xi.at(s)))


def factorization_count(ld, F, beta):
    """Number of functors satisfying both factorization equations.

    Brute-force enumeration over all functors from F's source into the lax
    descent category; used by the uniqueness tests on small instances.
    """
    d = ld.A.at("d1"), ld.A.at("d0")
    dA = Functor(ld, ld.A.level(1), lambda o: o.w, lambda dm: dm.m)
    count = 0
    for G in enumerate_functors(F.src, ld):
        if not functor_equal(compose_functors(dA, G), F):
            continue
        psi_g = NatTrans(compose_functors(d[0], compose_functors(dA, G)),
                         compose_functors(d[1], compose_functors(dA, G)),
                         lambda s: G.ob(s).phi)
        if nat_equal(psi_g, beta):
            count += 1
    return count


def materialize(ld):
    """Dense FinCategory copy of a lax descent category, with indexing.

    Returns (cat, objs, mors): objs[i] is the DescentObject of object i,
    mors[k] the DescentMorphism of morphism id k.
    """
    from .fincat import FinCategory
    objs = list(ld.objects())
    mors = []
    dom_cod = []
    for i, x in enumerate(objs):
        for j, y in enumerate(objs):
            for u in ld.hom(x, y):
                mors.append(u)
                dom_cod.append((i, j))
    mor_index = {m: k for k, m in enumerate(mors)}
    identity_of = [mor_index[ld.identity(x)] for x in objs]
    composition = {}
    for gi, g in enumerate(mors):
        for fi, f in enumerate(mors):
            if f.dst == g.src:
                composition[(gi, fi)] = mor_index[ld.compose(g, f)]
    cat = FinCategory(len(objs), dom_cod, identity_of, composition)
    return cat, objs, mors
