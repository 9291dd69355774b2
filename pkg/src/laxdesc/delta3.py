"""The three-object truncation of the simplex category, by rewriting.

Objects are called 1, 2, 3.  Generators (written in composition order, so a
word ("D1", "d0") means D1∘d0, d0 applied first):

    d0, d1 : 1 -> 2      s0 : 2 -> 1      D0, D1, D2 : 2 -> 3

Relations: s0∘d0 = s0∘d1 = id_1 and Dt∘dk = Dk∘d(t-1) for t > k.

The rewriting rules orient the relations left-to-right as

    s0.di        ->  (empty)
    Dt.dk (t>k)  ->  Dk.d(t-1)

Termination measure: a rule application either shortens the word or keeps
the length while strictly decreasing the superscript of the D letter, so
(length, sum of D indices) drops lexicographically.  Confluence is not
assumed: it is checked exhaustively on all typable words of length <= 6
in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import FinCategory

GENERATOR_TYPES = {
    "d0": (1, 2),
    "d1": (1, 2),
    "s0": (2, 1),
    "D0": (2, 3),
    "D1": (2, 3),
    "D2": (2, 3),
}


@dataclass(frozen=True)
class Delta3Morphism:
    dom: int
    cod: int
    word: tuple  # generator names, composition order (leftmost applied last)

    def __str__(self):
        if not self.word:
            return f"id{self.dom}"
        return ".".join(self.word)


def _typecheck(word):
    """Return (dom, cod) of a generator word, or None if untypable."""
    if not word:
        return None
    dom = GENERATOR_TYPES[word[-1]][0]
    cur = dom
    for gen in reversed(word):
        gd, gc = GENERATOR_TYPES[gen]
        if gd != cur:
            return None
        cur = gc
    return dom, cur


def _rewrite_once(word):
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a == "s0" and b in ("d0", "d1"):
            return word[:i] + word[i + 2:]
        if a.startswith("D") and b.startswith("d"):
            t, k = int(a[1]), int(b[1])
            if t > k:
                return word[:i] + (f"D{k}", f"d{t - 1}") + word[i + 2:]
    return None


def normalize(word, dom=None):
    """Normal form of a generator word; identities are empty words.

    word: iterable of generator names (composition order) or a string
    like "D1.d0".  For the empty word, dom must identify the object.
    """
    if isinstance(word, str):
        word = tuple(w for w in word.split(".") if w) if word else ()
    else:
        word = tuple(word)
    for gen in word:
        if gen not in GENERATOR_TYPES:
            raise ValueError(f"unknown generator {gen!r}")
    if not word:
        if dom is None:
            raise ValueError("empty word needs an explicit object")
        return Delta3Morphism(dom, dom, ())
    typed = _typecheck(word)
    if typed is None:
        raise ValueError(f"word not typable: {'.'.join(word)}")
    while True:
        nxt = _rewrite_once(word)
        if nxt is None:
            break
        word = nxt
    if not word:
        return Delta3Morphism(typed[0], typed[0], ())
    d, c = _typecheck(word)
    assert (d, c) == typed, "rewriting changed the typing"
    return Delta3Morphism(d, c, word)


def compose(h, g):
    """h∘g in Delta3 (g applied first), by concatenation plus rewriting."""
    if g.cod != h.dom:
        raise ValueError(f"not composable: {h}∘{g}")
    return normalize(h.word + g.word, dom=g.dom)


def identity(x):
    return Delta3Morphism(x, x, ())


def all_morphisms():
    """All 17 morphisms, deterministically ordered, by closure from generators."""
    found = {identity(x) for x in (1, 2, 3)}
    found |= {normalize((g,)) for g in GENERATOR_TYPES}
    while True:
        new = set()
        for h in found:
            for g in found:
                if g.cod == h.dom:
                    c = compose(h, g)
                    if c not in found:
                        new.add(c)
        if not new:
            break
        found |= new
    return sorted(found, key=lambda m: (m.dom, m.cod, len(m.word), m.word))


MORPHISMS = all_morphisms()
_INDEX = {m: i for i, m in enumerate(MORPHISMS)}

GEN = {g: normalize((g,)) for g in GENERATOR_TYPES}
IDS = {x: identity(x) for x in (1, 2, 3)}


def composable_pairs():
    """All pairs (h, g) with h∘g defined, identities included."""
    return [(h, g) for h in MORPHISMS for g in MORPHISMS if g.cod == h.dom]


def hom(x, y):
    return [m for m in MORPHISMS if m.dom == x and m.cod == y]


def as_fincategory():
    """Delta3 as an explicit FinCategory (objects 0,1,2 are 1,2,3)."""
    morphisms = [(m.dom - 1, m.cod - 1) for m in MORPHISMS]
    identity_of = [_INDEX[IDS[x]] for x in (1, 2, 3)]
    composition = {}
    for h in MORPHISMS:
        for g in MORPHISMS:
            if g.cod == h.dom:
                composition[(_INDEX[h], _INDEX[g])] = _INDEX[compose(h, g)]
    return FinCategory(3, morphisms, identity_of, composition)


def opposite():
    return as_fincategory().opposite()


def index_of(m):
    return _INDEX[m]


def parse(text):
    """Morphism from DSL notation: "D1.d0", a generator name, or "id1"."""
    t = text.strip()
    if t in ("id1", "id2", "id3"):
        return identity(int(t[2]))
    return normalize(t)
