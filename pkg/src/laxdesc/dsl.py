"""The .lcat input language: tokenizer, parser, printer, elaboration.

A document is a sequence of named declarations:

    category A { objects: x, y; hom(x, y): f; compose: f.id_x = f; }
    map p : [2] -> [1] = [0,0]
    monoid M2 { 1,e; e.e=e }
    functor F : A -> B { ob: x -> u; mor: f -> g; }
    nattrans t : F => G { at: x -> m; }
    precategory a { world: finset; ob: 1 = [1], 2 = [2], 3 = [3];
                    gens: d0 = p, d1 = q, s0 = r, D0 = u, D1 = v, D2 = w; }
    indexed W { kind: slice; }
    pseudofunctor P { indexed: W; over: a; }
    adjunction adj { left: F; right: G; unit: u; counit: c; }

Conventions.  `f.g` is the composite "f after g", both in category compose
lines and monoid tables.  Identity morphisms of a category declaration are
implicit and named id_<object>.  Monoid tables are completed with unit laws
for the first listed element before validation.  Map declarations use
ranges: `[n]` is the set {0, .., n-1}.  In a finset precategory the level
objects are range literals and generators name map declarations; in a cat
precategory they name category and functor declarations.  References
resolve to earlier declarations only.

parse gives the AST with source spans; elaborate builds the semantic
objects and runs each module's validator; load does both.  Spans never
participate in equality, so printing a document and reparsing it yields an
equal Document.
"""

import re
from dataclasses import dataclass, field

from .fincat import (
    Adjunction,
    FinCategory,
    Functor,
    NatTrans,
    check_adjunction,
    check_functor,
    check_natural,
    validate_category,
)
from .finset import FinSetMap, basic_indexed_category, fs_range
from .pseudo import (
    CAT_WORLD,
    FINSET_WORLD,
    Monoid,
    diagram_indexed_category,
    compose_indexed_with_precategory,
    precategory_from_generators,
    validate_monoid,
    validate_precategory,
)

GENERATORS = ("d0", "d1", "s0", "D0", "D1", "D2")


class ParseError(Exception):
    def __init__(self, line, col, message, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        tail = ""
        if expected:
            tail = "; expected " + ", ".join(sorted(self.expected))
        super().__init__(f"{line}:{col}: {message}{tail}")


class SemanticError(Exception):
    def __init__(self, message, span=None):
        self.span = span
        at = f"{span.line}:{span.col}: " if span is not None else ""
        super().__init__(at + message)


@dataclass(frozen=True)
class Span:
    line: int
    col: int


def _span_field():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    objects: tuple
    homs: tuple          # ((src, dst, (morphism names)), ...)
    compose: tuple       # ((f, g, h) for f.g = h, ...)
    span: Span = _span_field()


@dataclass(frozen=True)
class MapDecl:
    name: str
    dom: int
    cod: int
    img: tuple
    span: Span = _span_field()


@dataclass(frozen=True)
class MonoidDecl:
    name: str
    elements: tuple
    eqs: tuple           # ((a, b, c) for a.b = c, ...)
    span: Span = _span_field()


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    src: str
    dst: str
    ob: tuple            # ((x, u), ...)
    mor: tuple           # ((f, g), ...)
    span: Span = _span_field()


@dataclass(frozen=True)
class NatTransDecl:
    name: str
    src: str
    dst: str
    at: tuple            # ((object, morphism), ...)
    span: Span = _span_field()


@dataclass(frozen=True)
class PrecategoryDecl:
    name: str
    world: str           # "finset" | "cat"
    ob: tuple            # ((level, ref), ...); ref int for finset, name for cat
    gens: tuple          # ((generator, name), ...)
    span: Span = _span_field()


@dataclass(frozen=True)
class IndexedDecl:
    name: str
    kind: str            # "slice" | "diagram"
    span: Span = _span_field()


@dataclass(frozen=True)
class PseudofunctorDecl:
    name: str
    indexed: str
    over: str
    span: Span = _span_field()


@dataclass(frozen=True)
class AdjunctionDecl:
    name: str
    left: str
    right: str
    unit: str
    counit: str
    span: Span = _span_field()


@dataclass(frozen=True)
class Document:
    decls: tuple

    def names(self):
        return [d.name for d in self.decls]


# -- tokenizer --------------------------------------------------------------------

_TWO = ("->", "=>")
_ONE = "{}[]():;,.="
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NAT = re.compile(r"[0-9]+")


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i:i + 2]
        if two in _TWO:
            toks.append((two, two, line, col))
            i += 2
            col += 2
            continue
        if ch in _ONE:
            toks.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        m = _NAME.match(text, i)
        if m:
            toks.append(("name", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        m = _NAT.match(text, i)
        if m:
            toks.append(("nat", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        raise ParseError(line, col, f"unexpected character {ch!r}")
    toks.append(("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind):
        tok = self.toks[self.pos]
        if tok[0] != kind:
            self.fail(f"found {self._show(tok)}", [self._label(kind)])
        self.pos += 1
        return tok

    def fail(self, message, expected):
        tok = self.toks[self.pos]
        raise ParseError(tok[2], tok[3], message, expected)

    @staticmethod
    def _show(tok):
        return "end of input" if tok[0] == "eof" else repr(tok[1])

    @staticmethod
    def _label(kind):
        return {"name": "a name", "nat": "a number",
                "eof": "end of input"}.get(kind, repr(kind))

    # -- helpers ---------------------------------------------------------

    def name(self):
        return self.take("name")[1]

    def nat(self):
        return int(self.take("nat")[1])

    def atom(self):
        tok = self.peek()
        if tok[0] in ("name", "nat"):
            self.pos += 1
            return tok[1]
        self.fail(f"found {self._show(tok)}", ["a name", "a number"])

    def keyword(self, word):
        tok = self.peek()
        if tok[0] == "name" and tok[1] == word:
            self.pos += 1
            return
        self.fail(f"found {self._show(tok)}", [repr(word)])

    def section(self, word):
        self.keyword(word)
        self.take(":")

    def comma_list(self, item):
        out = [item()]
        while self.peek()[0] == ",":
            self.pos += 1
            out.append(item())
        return out

    def bracket_nat(self):
        self.take("[")
        v = self.nat()
        self.take("]")
        return v

    # -- declarations ------------------------------------------------------

    def document(self):
        decls = []
        heads = {"category": self.category, "map": self.mapdecl,
                 "monoid": self.monoid, "functor": self.functor,
                 "nattrans": self.nattrans, "precategory": self.precategory,
                 "indexed": self.indexed, "pseudofunctor": self.pseudofunctor,
                 "adjunction": self.adjunction}
        while True:
            tok = self.peek()
            if tok[0] == "eof":
                break
            if tok[0] != "name" or tok[1] not in heads:
                self.fail(f"found {self._show(tok)}",
                          [repr(h) for h in heads])
            self.pos += 1
            decls.append(heads[tok[1]](Span(tok[2], tok[3])))
        doc = Document(tuple(decls))
        seen = {}
        for d in doc.decls:
            if d.name in seen:
                raise SemanticError(f"duplicate name {d.name!r}", d.span)
            seen[d.name] = d
        return doc

    def category(self, span):
        name = self.name()
        self.take("{")
        self.section("objects")
        objects = tuple(self.comma_list(self.name))
        self.take(";")
        homs = []
        while self.peek()[0] == "name" and self.peek()[1] == "hom":
            self.pos += 1
            self.take("(")
            a = self.name()
            self.take(",")
            b = self.name()
            self.take(")")
            self.take(":")
            ms = tuple(self.comma_list(self.name))
            self.take(";")
            homs.append((a, b, ms))
        compose = []
        while self.peek()[0] == "name" and self.peek()[1] == "compose":
            self.pos += 1
            self.take(":")
            f = self.name()
            self.take(".")
            g = self.name()
            self.take("=")
            h = self.name()
            self.take(";")
            compose.append((f, g, h))
        self.take("}")
        return CategoryDecl(name, objects, tuple(homs), tuple(compose), span)

    def mapdecl(self, span):
        name = self.name()
        self.take(":")
        dom = self.bracket_nat()
        self.take("->")
        cod = self.bracket_nat()
        self.take("=")
        self.take("[")
        img = []
        if self.peek()[0] == "nat":
            img = self.comma_list(self.nat)
        self.take("]")
        return MapDecl(name, dom, cod, tuple(img), span)

    def monoid(self, span):
        name = self.name()
        self.take("{")
        elements = tuple(self.comma_list(self.atom))
        self.take(";")
        eqs = []
        if self.peek()[0] in ("name", "nat"):
            def eq():
                a = self.atom()
                self.take(".")
                b = self.atom()
                self.take("=")
                c = self.atom()
                return (a, b, c)
            eqs = self.comma_list(eq)
        self.take("}")
        return MonoidDecl(name, elements, tuple(eqs), span)

    def functor(self, span):
        name = self.name()
        self.take(":")
        src = self.name()
        self.take("->")
        dst = self.name()
        self.take("{")
        self.section("ob")
        ob = self._arrow_pairs()
        self.take(";")
        self.section("mor")
        mor = self._arrow_pairs()
        self.take(";")
        self.take("}")
        return FunctorDecl(name, src, dst, ob, mor, span)

    def _arrow_pairs(self):
        pairs = []
        if self.peek()[0] == "name":
            def pair():
                a = self.name()
                self.take("->")
                b = self.name()
                return (a, b)
            pairs = self.comma_list(pair)
        return tuple(pairs)

    def nattrans(self, span):
        name = self.name()
        self.take(":")
        src = self.name()
        self.take("=>")
        dst = self.name()
        self.take("{")
        self.section("at")
        at = self._arrow_pairs()
        self.take(";")
        self.take("}")
        return NatTransDecl(name, src, dst, at, span)

    def precategory(self, span):
        name = self.name()
        self.take("{")
        self.section("world")
        world = self.name()
        self.take(";")
        self.section("ob")

        def level():
            lv = self.nat()
            self.take("=")
            if self.peek()[0] == "[":
                return (lv, self.bracket_nat())
            return (lv, self.name())
        ob = tuple(self.comma_list(level))
        self.take(";")
        self.section("gens")

        def gen():
            g = self.name()
            self.take("=")
            return (g, self.name())
        gens = tuple(self.comma_list(gen))
        self.take(";")
        self.take("}")
        return PrecategoryDecl(name, world, ob, gens, span)

    def indexed(self, span):
        name = self.name()
        self.take("{")
        self.section("kind")
        kind = self.name()
        self.take(";")
        self.take("}")
        return IndexedDecl(name, kind, span)

    def pseudofunctor(self, span):
        name = self.name()
        self.take("{")
        self.section("indexed")
        indexed = self.name()
        self.take(";")
        self.section("over")
        over = self.name()
        self.take(";")
        self.take("}")
        return PseudofunctorDecl(name, indexed, over, span)

    def adjunction(self, span):
        name = self.name()
        self.take("{")
        out = {}
        for key in ("left", "right", "unit", "counit"):
            self.section(key)
            out[key] = self.name()
            self.take(";")
        self.take("}")
        return AdjunctionDecl(name, out["left"], out["right"],
                              out["unit"], out["counit"], span)


def parse(text):
    """Text -> Document with spans; raises ParseError / SemanticError."""
    return _Parser(text).document()


# -- printer ----------------------------------------------------------------------

def print_document(doc):
    return "\n".join(_print_decl(d) for d in doc.decls) + "\n"


def _print_decl(d):
    if isinstance(d, CategoryDecl):
        lines = [f"category {d.name} {{",
                 "  objects: " + ", ".join(d.objects) + ";"]
        for (a, b, ms) in d.homs:
            lines.append(f"  hom({a}, {b}): " + ", ".join(ms) + ";")
        for (f, g, h) in d.compose:
            lines.append(f"  compose: {f}.{g} = {h};")
        lines.append("}")
        return "\n".join(lines)
    if isinstance(d, MapDecl):
        img = ",".join(str(v) for v in d.img)
        return f"map {d.name} : [{d.dom}] -> [{d.cod}] = [{img}]"
    if isinstance(d, MonoidDecl):
        eqs = ", ".join(f"{a}.{b}={c}" for (a, b, c) in d.eqs)
        body = ", ".join(d.elements) + ";" + (" " + eqs if eqs else "")
        return f"monoid {d.name} {{ {body} }}"
    if isinstance(d, FunctorDecl):
        ob = ", ".join(f"{a} -> {b}" for (a, b) in d.ob)
        mor = ", ".join(f"{a} -> {b}" for (a, b) in d.mor)
        return (f"functor {d.name} : {d.src} -> {d.dst} {{\n"
                f"  ob: {ob};\n  mor: {mor};\n}}")
    if isinstance(d, NatTransDecl):
        at = ", ".join(f"{a} -> {b}" for (a, b) in d.at)
        return f"nattrans {d.name} : {d.src} => {d.dst} {{ at: {at}; }}"
    if isinstance(d, PrecategoryDecl):
        def ref(r):
            return f"[{r}]" if isinstance(r, int) else r
        ob = ", ".join(f"{lv} = {ref(r)}" for (lv, r) in d.ob)
        gens = ", ".join(f"{g} = {m}" for (g, m) in d.gens)
        return (f"precategory {d.name} {{\n  world: {d.world};\n"
                f"  ob: {ob};\n  gens: {gens};\n}}")
    if isinstance(d, IndexedDecl):
        return f"indexed {d.name} {{ kind: {d.kind}; }}"
    if isinstance(d, PseudofunctorDecl):
        return (f"pseudofunctor {d.name} {{ indexed: {d.indexed}; "
                f"over: {d.over}; }}")
    if isinstance(d, AdjunctionDecl):
        return (f"adjunction {d.name} {{ left: {d.left}; right: {d.right}; "
                f"unit: {d.unit}; counit: {d.counit}; }}")
    raise TypeError(f"unknown declaration {d!r}")


# -- elaboration ------------------------------------------------------------------

@dataclass
class BuiltCategory:
    cat: FinCategory
    object_names: tuple
    morphism_names: tuple

    def object_id(self, name):
        return self.object_names.index(name)

    def morphism_id(self, name):
        return self.morphism_names.index(name)


@dataclass
class IndexedSpec:
    kind: str

    def make(self, bound):
        if self.kind == "slice":
            return basic_indexed_category(bound)
        return diagram_indexed_category(bound)


@dataclass
class PseudoSpec:
    indexed: IndexedSpec
    over: object         # Precategory

    def make(self, bound):
        return compose_indexed_with_precategory(self.indexed.make(bound),
                                                self.over)


def _build_category(d):
    if len(set(d.objects)) != len(d.objects):
        raise SemanticError(f"duplicate object in category {d.name}", d.span)
    oid = {x: i for i, x in enumerate(d.objects)}
    mnames = [f"id_{x}" for x in d.objects]
    endpoints = [(i, i) for i in range(len(d.objects))]
    for (a, b, ms) in d.homs:
        for side in (a, b):
            if side not in oid:
                raise SemanticError(
                    f"unknown object {side!r} in category {d.name}", d.span)
        for m in ms:
            if m in mnames:
                raise SemanticError(
                    f"duplicate morphism {m!r} in category {d.name}", d.span)
            mnames.append(m)
            endpoints.append((oid[a], oid[b]))
    mid = {m: k for k, m in enumerate(mnames)}
    identity_of = list(range(len(d.objects)))
    composition = {}
    for k, (dm, cm) in enumerate(endpoints):
        composition[(k, identity_of[dm])] = k
        composition[(identity_of[cm], k)] = k
    for (f, g, h) in d.compose:
        for m in (f, g, h):
            if m not in mid:
                raise SemanticError(
                    f"unknown morphism {m!r} in category {d.name}", d.span)
        fj, gj, hj = mid[f], mid[g], mid[h]
        if endpoints[gj][1] != endpoints[fj][0]:
            raise SemanticError(
                f"{f}.{g} is not composable in category {d.name}", d.span)
        prior = composition.get((fj, gj))
        if prior is not None and prior != hj:
            raise SemanticError(
                f"conflicting composite {f}.{g} in category {d.name}", d.span)
        composition[(fj, gj)] = hj
    cat = FinCategory(len(d.objects), endpoints, identity_of, composition)
    problems = validate_category(cat)
    if problems:
        raise SemanticError(
            f"category {d.name}: {problems[0]}", d.span)
    return BuiltCategory(cat, tuple(d.objects), tuple(mnames))


def _build_map(d):
    if len(d.img) != d.dom:
        raise SemanticError(
            f"map {d.name} lists {len(d.img)} values for domain size {d.dom}",
            d.span)
    for v in d.img:
        if v >= d.cod:
            raise SemanticError(
                f"map {d.name} sends a point to {v}, outside [{d.cod}]",
                d.span)
    return FinSetMap(fs_range(d.dom), fs_range(d.cod), tuple(d.img))


def _build_monoid(d):
    els = d.elements
    if len(set(els)) != len(els):
        raise SemanticError(f"duplicate element in monoid {d.name}", d.span)
    unit = els[0]
    table = {}
    for x in els:
        table[(unit, x)] = x
        table[(x, unit)] = x
    for (a, b, c) in d.eqs:
        for e in (a, b, c):
            if e not in els:
                raise SemanticError(
                    f"unknown element {e!r} in monoid {d.name}", d.span)
        prior = table.get((a, b))
        if prior is not None and prior != c:
            raise SemanticError(
                f"conflicting entry {a}.{b} in monoid {d.name}", d.span)
        table[(a, b)] = c
    for x in els:
        for y in els:
            if (x, y) not in table:
                raise SemanticError(
                    f"monoid {d.name} leaves {x}.{y} undefined", d.span)
    m = Monoid(tuple(els), table, unit)
    problems = validate_monoid(m)
    if problems:
        raise SemanticError(f"monoid {d.name}: {problems[0]}", d.span)
    return m


def _built_category(env, name, span, who):
    entry = env.get(name)
    if entry is None or entry["kind"] != "category":
        raise SemanticError(f"{who} needs a category named {name!r}", span)
    return entry["value"]


def _build_functor(d, env):
    bs = _built_category(env, d.src, d.span, f"functor {d.name}")
    bt = _built_category(env, d.dst, d.span, f"functor {d.name}")
    ob = {}
    for (x, u) in d.ob:
        if x not in bs.object_names:
            raise SemanticError(
                f"functor {d.name}: unknown source object {x!r}", d.span)
        if u not in bt.object_names:
            raise SemanticError(
                f"functor {d.name}: unknown target object {u!r}", d.span)
        ob[bs.object_id(x)] = bt.object_id(u)
    missing = [x for x in bs.object_names if bs.object_id(x) not in ob]
    if missing:
        raise SemanticError(
            f"functor {d.name}: no image for object {missing[0]!r}", d.span)
    mor = {}
    for (f, g) in d.mor:
        if f not in bs.morphism_names:
            raise SemanticError(
                f"functor {d.name}: unknown source morphism {f!r}", d.span)
        if g not in bt.morphism_names:
            raise SemanticError(
                f"functor {d.name}: unknown target morphism {g!r}", d.span)
        mor[bs.morphism_id(f)] = bt.morphism_id(g)
    for x in bs.cat.objects():
        mor.setdefault(bs.cat.identity(x), bt.cat.identity(ob[x]))
    for k, mname in enumerate(bs.morphism_names):
        if k not in mor:
            raise SemanticError(
                f"functor {d.name}: no image for morphism {mname!r}", d.span)
    F = Functor(bs.cat, bt.cat, ob, mor)
    problems = check_functor(F)
    if problems:
        raise SemanticError(f"functor {d.name}: {problems[0]}", d.span)
    return F


def _functor_of(env, name, span, who):
    entry = env.get(name)
    if entry is None or entry["kind"] != "functor":
        raise SemanticError(f"{who} needs a functor named {name!r}", span)
    return entry["value"]


def _build_nattrans(d, env):
    F = _functor_of(env, d.src, d.span, f"nattrans {d.name}")
    G = _functor_of(env, d.dst, d.span, f"nattrans {d.name}")
    if F.src is not G.src or F.dst is not G.dst:
        raise SemanticError(
            f"nattrans {d.name}: {d.src} and {d.dst} are not parallel",
            d.span)
    bsrc = _find_built(env, F.src)
    btgt = _find_built(env, F.dst)
    comps = {}
    for (x, m) in d.at:
        if x not in bsrc.object_names:
            raise SemanticError(
                f"nattrans {d.name}: unknown object {x!r}", d.span)
        if m not in btgt.morphism_names:
            raise SemanticError(
                f"nattrans {d.name}: unknown morphism {m!r}", d.span)
        comps[bsrc.object_id(x)] = btgt.morphism_id(m)
    for x in bsrc.object_names:
        if bsrc.object_id(x) not in comps:
            raise SemanticError(
                f"nattrans {d.name}: no component at {x!r}", d.span)
    t = NatTrans(F, G, comps)
    problems = check_natural(t)
    if problems:
        raise SemanticError(f"nattrans {d.name}: {problems[0]}", d.span)
    return t


def _find_built(env, cat):
    for entry in env.values():
        if entry["kind"] == "category" and entry["value"].cat is cat:
            return entry["value"]
    raise SemanticError("category is not declared in this document")


def _build_precategory(d, env):
    ob = dict(d.ob)
    gens = dict(d.gens)
    for lv in (1, 2, 3):
        if lv not in ob:
            raise SemanticError(
                f"precategory {d.name}: level {lv} object missing", d.span)
    for g in GENERATORS:
        if g not in gens:
            raise SemanticError(
                f"precategory {d.name}: generator {g} missing", d.span)
    for g in gens:
        if g not in GENERATORS:
            raise SemanticError(
                f"precategory {d.name}: unknown generator {g!r}", d.span)
    if d.world == "finset":
        obs = {}
        for lv, r in ob.items():
            if not isinstance(r, int):
                raise SemanticError(
                    f"precategory {d.name}: finset level objects are range "
                    f"literals", d.span)
            obs[lv] = fs_range(r)
        images = {}
        for g, mname in gens.items():
            entry = env.get(mname)
            if entry is None or entry["kind"] != "map":
                raise SemanticError(
                    f"precategory {d.name}: generator {g} needs a map "
                    f"named {mname!r}", d.span)
            images[g] = entry["value"]
        world = FINSET_WORLD
    elif d.world == "cat":
        obs = {}
        for lv, r in ob.items():
            if isinstance(r, int):
                raise SemanticError(
                    f"precategory {d.name}: cat level objects are category "
                    f"names", d.span)
            obs[lv] = _built_category(env, r, d.span,
                                      f"precategory {d.name}").cat
        images = {}
        for g, fname in gens.items():
            images[g] = _functor_of(env, fname, d.span,
                                    f"precategory {d.name}")
        world = CAT_WORLD
    else:
        raise SemanticError(
            f"precategory {d.name}: world must be finset or cat", d.span)
    a = precategory_from_generators(obs, images, world)
    problems = validate_precategory(a)
    if problems:
        raise SemanticError(f"precategory {d.name}: {problems[0]}", d.span)
    return a


def _build_indexed(d):
    if d.kind not in ("slice", "diagram"):
        raise SemanticError(
            f"indexed {d.name}: kind must be slice or diagram", d.span)
    return IndexedSpec(d.kind)


def _build_pseudofunctor(d, env):
    ind = env.get(d.indexed)
    if ind is None or ind["kind"] != "indexed":
        raise SemanticError(
            f"pseudofunctor {d.name} needs an indexed family named "
            f"{d.indexed!r}", d.span)
    over = env.get(d.over)
    if over is None or over["kind"] != "precategory":
        raise SemanticError(
            f"pseudofunctor {d.name} needs a precategory named {d.over!r}",
            d.span)
    spec, a = ind["value"], over["value"]
    want = FINSET_WORLD if spec.kind == "slice" else CAT_WORLD
    if a.world is not want:
        raise SemanticError(
            f"pseudofunctor {d.name}: indexed kind {spec.kind} does not "
            f"match the precategory world", d.span)
    return PseudoSpec(spec, a)


def _build_adjunction(d, env):
    F = _functor_of(env, d.left, d.span, f"adjunction {d.name}")
    G = _functor_of(env, d.right, d.span, f"adjunction {d.name}")
    if F.src is not G.dst or F.dst is not G.src:
        raise SemanticError(
            f"adjunction {d.name}: functors are not opposed", d.span)
    entry_u = env.get(d.unit)
    entry_c = env.get(d.counit)
    for nm, entry in ((d.unit, entry_u), (d.counit, entry_c)):
        if entry is None or entry["kind"] != "nattrans":
            raise SemanticError(
                f"adjunction {d.name} needs a nattrans named {nm!r}", d.span)
    unit, counit = entry_u["value"], entry_c["value"]
    C, D = F.src, F.dst
    for c in C.objects():
        u = unit.at(c)
        if C.dom(u) != c or C.cod(u) != G.ob(F.ob(c)):
            raise SemanticError(
                f"adjunction {d.name}: unit component at {c} has wrong "
                f"endpoints", d.span)
    for x in D.objects():
        e = counit.at(x)
        if D.dom(e) != F.ob(G.ob(x)) or D.cod(e) != x:
            raise SemanticError(
                f"adjunction {d.name}: counit component at {x} has wrong "
                f"endpoints", d.span)
    adj = Adjunction(F, G, unit, counit)
    problems = check_adjunction(adj)
    if problems:
        raise SemanticError(f"adjunction {d.name}: {problems[0]}", d.span)
    return adj


_BUILDERS = {
    CategoryDecl: ("category", lambda d, env: _build_category(d)),
    MapDecl: ("map", lambda d, env: _build_map(d)),
    MonoidDecl: ("monoid", lambda d, env: _build_monoid(d)),
    FunctorDecl: ("functor", _build_functor),
    NatTransDecl: ("nattrans", _build_nattrans),
    PrecategoryDecl: ("precategory", _build_precategory),
    IndexedDecl: ("indexed", lambda d, env: _build_indexed(d)),
    PseudofunctorDecl: ("pseudofunctor", _build_pseudofunctor),
    AdjunctionDecl: ("adjunction", _build_adjunction),
}


def elaborate(doc):
    """Document -> {name: {"kind", "value", "decl"}} with validation.

    Declarations are processed in order and may only reference earlier
    ones; every built object passes its module validator or a
    SemanticError with the declaration's span is raised.
    """
    env = {}
    for d in doc.decls:
        kind, build = _BUILDERS[type(d)]
        env[d.name] = {"kind": kind, "value": build(d, env), "decl": d}
    return env


def load(path):
    """Parse and elaborate a .lcat file; returns (Document, environment)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = parse(text)
    return doc, elaborate(doc)
