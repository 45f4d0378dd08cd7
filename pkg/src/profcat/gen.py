"""Seeded random generators for property-test corpora.

Same seed, same caps: byte-identical output. Categories come out valid by
construction (posets, free categories on DAGs, iso gadgets); profunctors are
free bimodules on generator heteromorphisms. Planted violations are surgical
gadgets appended last, so the planted law is the only one that fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GenerationFailed, Mismatch
from .fincat import (
    FinCategory,
    FinFunctor,
    _enumerate_functors,
    identity_id,
    product_category,
    validate_category,
)
from .budget import WorkMeter
from .documents import Document, document_for
from .examples import BuiltSub2Cat, Sub2CatSpec, build_sub2cat
from .prof import FinProfunctor, validate_profunctor
from .twocat import Adjunction

PLANTS = {
    "category": ("category.unit", "category.assoc"),
    "profunctor": (
        "profunctor.action-identity",
        "profunctor.action-compose",
        "profunctor.action-commute",
    ),
}


@dataclass(frozen=True)
class GenSpec:
    seed: int
    kind: str
    max_objects: int = 4
    max_arrows: int = 12
    max_hets: int = 8
    max_zero_cells: int = 2
    plant: str | None = None


def normalize_plant(kind: str, plant: str) -> str:
    if "." in plant:
        full = plant
    else:
        full = f"{kind}.{plant}"
    if full not in PLANTS.get(kind, ()):
        raise Mismatch(f"no plant {plant!r} for kind {kind!r}")
    return full


# ---------------------------------------------------------------------------
# Poset and free-category raw material

def poset_category(name: str, elements, leq) -> FinCategory:
    """leq: set of (x, y) pairs with x strictly below y; must be transitive."""
    arrows = {identity_id(x): (x, x) for x in elements}
    for x, y in leq:
        arrows[f"{x}<{y}"] = (x, y)
    identity = {x: identity_id(x) for x in elements}
    by_pair = {(x, x): identity_id(x) for x in elements}
    for x, y in leq:
        by_pair[(x, y)] = f"{x}<{y}"
    compose = {}
    for g, (gs, gt) in arrows.items():
        for f, (fs, ft) in arrows.items():
            if ft == gs:
                compose[(g, f)] = by_pair[(fs, gt)]
    return FinCategory(name, frozenset(elements), arrows, identity, compose)


def chain_category(n: int, name: str | None = None) -> FinCategory:
    elems = [str(i) for i in range(n)]
    leq = {(str(i), str(j)) for i in range(n) for j in range(i + 1, n)}
    return poset_category(name or f"Chain{n}", elems, leq)


def random_poset(rnd: random.Random, max_elements: int, name: str = "P") -> FinCategory:
    n = rnd.randint(1, max_elements)
    elems = [f"p{i}" for i in range(n)]
    rel = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rnd.random() < 0.45:
                rel.add((i, j))
    closed = set(rel)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c, d in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    leq = {(elems[i], elems[j]) for i, j in closed}
    return poset_category(name, elems, leq)


def random_meet_poset(rnd: random.Random, max_elements: int, name: str = "L") -> FinCategory:
    """Posets with all binary meets: chains and products of chains."""
    style = rnd.choice(["chain", "grid"])
    if style == "chain":
        n = rnd.randint(2, max_elements)
        return poset_category(name, *_chain_data(n))
    a = rnd.randint(2, max(2, max_elements // 2))
    b = max_elements // a
    b = max(2, b)
    prod = product_category(chain_category(a), chain_category(b))
    elems = sorted(prod.objects)
    leq = {
        (x, y)
        for x in elems
        for y in elems
        if x != y and prod.hom(x, y)
    }
    return poset_category(name, elems, leq)


def _chain_data(n: int):
    elems = [str(i) for i in range(n)]
    leq = {(str(i), str(j)) for i in range(n) for j in range(i + 1, n)}
    return elems, leq


def _free_category(rnd: random.Random, n: int, max_arrows: int, prefix: str = "") -> FinCategory:
    """Free category on a random DAG; arrows are the nonempty paths."""
    objs = [f"{prefix}o{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rnd.random() < 0.4:
                edges.append((f"{prefix}e{len(edges)}", objs[i], objs[j]))
    while True:
        paths = {}
        for name, s, t in edges:
            paths[(name,)] = (s, t)
        grew = True
        while grew:
            grew = False
            for p, (ps, pt) in list(paths.items()):
                for name, s, t in edges:
                    if s == pt and p + (name,) not in paths:
                        paths[p + (name,)] = (ps, t)
                        grew = True
        if len(paths) + n <= max_arrows:
            break
        edges.pop(rnd.randrange(len(edges)))
    arrows = {identity_id(x): (x, x) for x in objs}
    for p, (s, t) in paths.items():
        arrows["+".join(p)] = (s, t)
    identity = {x: identity_id(x) for x in objs}
    compose = {}
    for q, (qs, qt) in arrows.items():
        for p, (ps, pt) in arrows.items():
            if pt != qs:
                continue
            if p.startswith("id:"):
                compose[(q, p)] = q
            elif q.startswith("id:"):
                compose[(q, p)] = p
            else:
                compose[(q, p)] = p + "+" + q
    return FinCategory(f"Free{n}", frozenset(objs), arrows, identity, compose)


def _iso_gadget(tag: str) -> FinCategory:
    u, v = f"{tag}u", f"{tag}v"
    p, q = f"{tag}p", f"{tag}q"
    arrows = {
        identity_id(p): (p, p), identity_id(q): (q, q),
        u: (p, q), v: (q, p),
    }
    compose = {
        (identity_id(p), identity_id(p)): identity_id(p),
        (identity_id(q), identity_id(q)): identity_id(q),
        (u, identity_id(p)): u, (identity_id(q), u): u,
        (v, identity_id(q)): v, (identity_id(p), v): v,
        (v, u): identity_id(p), (u, v): identity_id(q),
    }
    return FinCategory("Iso", frozenset([p, q]), arrows, {p: identity_id(p), q: identity_id(q)}, compose)


def disjoint_union(c: FinCategory, d: FinCategory) -> FinCategory:
    """Requires disjoint object and arrow id sets."""
    overlap = (c.objects & d.objects) or (set(c.arrows) & set(d.arrows))
    if overlap:
        raise Mismatch(f"union pieces share ids: {sorted(overlap)[:3]}")
    return FinCategory(
        f"{c.name}+{d.name}",
        c.objects | d.objects,
        {**c.arrows, **d.arrows},
        {**c.identity, **d.identity},
        {**c.compose, **d.compose},
    )


# ---------------------------------------------------------------------------
# Categories

def gen_category(rnd: random.Random, max_objects: int = 4, max_arrows: int = 12,
                 plant: str | None = None, style: str | None = None) -> FinCategory:
    style = style or rnd.choice(["poset", "poset", "free", "poset_iso", "free_iso"])
    with_iso = style.endswith("_iso")
    room = max_arrows - (4 if with_iso else 0)
    n = max(1, min(max_objects - (2 if with_iso else 0), max_objects))
    if style.startswith("poset"):
        base = random_poset(rnd, n)
        while len(base.arrows) > room:
            base = random_poset(rnd, max(1, n - 1))
            n = max(1, n - 1)
    else:
        base = _free_category(rnd, rnd.randint(1, n), room)
    if with_iso:
        base = disjoint_union(base, _iso_gadget("~i"))
    if plant is not None:
        base = plant_category(base, plant)
    return base


def plant_category(c: FinCategory, law: str) -> FinCategory:
    if law == "category.unit":
        pa, pb, u, v = "~pa", "~pb", "~u", "~v"
        arrows = {identity_id(pa): (pa, pa), identity_id(pb): (pb, pb), u: (pa, pb), v: (pa, pb)}
        compose = {}
        for a, (s, t) in arrows.items():
            compose[(identity_id(t), a)] = a
            compose[(a, identity_id(s))] = a
        gadget = FinCategory("g", frozenset([pa, pb]), arrows,
                             {pa: identity_id(pa), pb: identity_id(pb)}, compose)
        out = disjoint_union(c, gadget)
        new_compose = dict(out.compose)
        new_compose[(u, identity_id(pa))] = v
        planted = FinCategory(c.name, out.objects, out.arrows, out.identity, new_compose)
    elif law == "category.assoc":
        ox, oy, oz, ot = "~x", "~y", "~z", "~t"
        f, g, h, gf, hg, hgf, p = "~f", "~g", "~h", "~gf", "~hg", "~hgf", "~p"
        arrows = {identity_id(o): (o, o) for o in (ox, oy, oz, ot)}
        arrows.update({
            f: (ox, oy), g: (oy, oz), h: (oz, ot),
            gf: (ox, oz), hg: (oy, ot), hgf: (ox, ot), p: (ox, ot),
        })
        compose = {}
        for a, (s, t) in arrows.items():
            compose[(identity_id(t), a)] = a
            compose[(a, identity_id(s))] = a
        compose.update({(g, f): gf, (h, g): hg, (h, gf): hgf, (hg, f): hgf})
        gadget = FinCategory("g", frozenset([ox, oy, oz, ot]), arrows,
                             {o: identity_id(o) for o in (ox, oy, oz, ot)}, compose)
        out = disjoint_union(c, gadget)
        new_compose = dict(out.compose)
        new_compose[(h, gf)] = p
        planted = FinCategory(c.name, out.objects, out.arrows, out.identity, new_compose)
    else:
        raise Mismatch(f"unknown category plant {law!r}")
    got = validate_category(planted).failed_laws()
    if got != {law}:
        raise GenerationFailed(f"plant {law} produced failures {sorted(got)}")
    return planted


# ---------------------------------------------------------------------------
# Profunctors as free bimodules

def _bimodule_element(gen: int, a: str, b: str) -> str:
    return f"h{gen}[{a};{b}]"


def free_bimodule(r: FinCategory, s: FinCategory, positions) -> FinProfunctor:
    """Free profunctor on generator hets at the given (r-object, s-object)
    positions; both actions act formally and all laws hold by construction."""
    hets = {}
    meta = {}
    for i, (ri, si) in enumerate(positions):
        for a, (asrc, atgt) in r.arrows.items():
            if atgt != ri:
                continue
            for b, (bsrc, btgt) in s.arrows.items():
                if bsrc != si:
                    continue
                hid = _bimodule_element(i, a, b)
                hets[hid] = (asrc, btgt)
                meta[hid] = (i, a, b)
    left = {}
    right = {}
    for hid, (i, a, b) in meta.items():
        src, tgt = hets[hid]
        for a2, (a2s, a2t) in r.arrows.items():
            if a2t == src:
                left[(a2, hid)] = _bimodule_element(i, r.compose[(a, a2)], b)
        for b2, (b2s, b2t) in s.arrows.items():
            if b2s == tgt:
                right[(b2, hid)] = _bimodule_element(i, a, s.compose[(b2, b)])
    return FinProfunctor("FreeBimodule", r, s, hets, left, right)


def gen_profunctor(rnd: random.Random, max_objects: int = 3, max_arrows: int = 8,
                   max_hets: int = 8, plant: str | None = None) -> FinProfunctor:
    for attempt in range(16):
        r = gen_category(rnd, max_objects, max_arrows, style=rnd.choice(["poset", "free"]))
        s = gen_category(rnd, max_objects, max_arrows, style=rnd.choice(["poset", "free"]))
        k = rnd.randint(1, max_hets)
        robj = sorted(r.objects)
        sobj = sorted(s.objects)
        positions = [(rnd.choice(robj), rnd.choice(sobj)) for _ in range(k)]
        p = free_bimodule(r, s, positions)
        if len(p.hets) <= 16 * max_hets:
            break
    else:
        raise GenerationFailed("could not fit a free bimodule under the size caps")
    if plant is not None:
        p = plant_profunctor(p, plant)
    return p


def plant_profunctor(p: FinProfunctor, law: str) -> FinProfunctor:
    gen_base = 10_000  # gadget generator indices clear of the real ones
    if law == "profunctor.action-identity":
        rg = poset_category("gR", ["~cz"], set())
        sg = poset_category("gS", ["~cw"], set())
        gad = free_bimodule(rg, sg, [("~cz", "~cw"), ("~cz", "~cw")])
        pinned = (identity_id("~cz"), _bimodule_element(0, identity_id("~cz"), identity_id("~cw")))
        override = _bimodule_element(1, identity_id("~cz"), identity_id("~cw"))
    elif law == "profunctor.action-compose":
        rg = poset_category("gR", ["~cx", "~cy", "~cz"],
                            {("~cx", "~cy"), ("~cy", "~cz"), ("~cx", "~cz")})
        sg = poset_category("gS", ["~cw"], set())
        gad = free_bimodule(rg, sg, [("~cz", "~cw"), ("~cx", "~cw")])
        pinned = ("~cx<~cy", _bimodule_element(0, "~cy<~cz", identity_id("~cw")))
        override = _bimodule_element(1, identity_id("~cx"), identity_id("~cw"))
    elif law == "profunctor.action-commute":
        rg = poset_category("gR", ["~cr2", "~cr"], {("~cr2", "~cr")})
        sg = poset_category("gS", ["~cs", "~cs2"], {("~cs", "~cs2")})
        gad = free_bimodule(rg, sg, [("~cr", "~cs"), ("~cr2", "~cs2")])
        pinned = ("~cr2<~cr", _bimodule_element(0, identity_id("~cr"), "~cs<~cs2"))
        override = _bimodule_element(1, identity_id("~cr2"), identity_id("~cs2"))
    else:
        raise Mismatch(f"unknown profunctor plant {law!r}")

    def shift(hid: str) -> str:
        i, rest = hid[1:].split("[", 1)
        return f"h{int(i) + gen_base}[{rest}"

    r = disjoint_union(p.dom, gad.dom)
    s = disjoint_union(p.cod, gad.cod)
    hets = dict(p.hets)
    hets.update({shift(h): cell for h, cell in gad.hets.items()})
    left = dict(p.left_action)
    left.update({(a, shift(h)): shift(out) for (a, h), out in gad.left_action.items()})
    right = dict(p.right_action)
    right.update({(b, shift(h)): shift(out) for (b, h), out in gad.right_action.items()})
    left[(pinned[0], shift(pinned[1]))] = shift(override)
    planted = FinProfunctor(p.name, r, s, hets, left, right)
    got = validate_profunctor(planted).failed_laws()
    if got != {law}:
        raise GenerationFailed(f"plant {law} produced failures {sorted(got)}")
    return planted


# ---------------------------------------------------------------------------
# Functors, 2-categories, adjunctions

def gen_functor(rnd: random.Random, max_objects: int = 3, max_arrows: int = 8) -> FinFunctor:
    dom = gen_category(rnd, max_objects, max_arrows, style="poset")
    cod = gen_category(rnd, max_objects, max_arrows, style="poset")
    meter = WorkMeter(what="functor sampling")
    options = sorted(_enumerate_functors(dom, cod, meter), key=lambda f: f.content_key())
    pick = options[rnd.randrange(len(options))]
    return FinFunctor("gen", dom, cod, pick.object_map, pick.arrow_map)


def monotone_maps(p: FinCategory, q: FinCategory) -> list:
    meter = WorkMeter(what="monotone enumeration")
    return sorted(_enumerate_functors(p, q, meter), key=lambda f: f.content_key())


def gen_galois(rnd: random.Random, max_elements: int = 5):
    """A random Galois connection between chains: f with f(0)=0 and its right
    adjoint g(y) = max{x : f(x) <= y}."""
    a = rnd.randint(2, max_elements)
    b = rnd.randint(2, max_elements)
    p = chain_category(a, name="P")
    q = chain_category(b, name="Q")
    values = [0]
    for _ in range(1, a):
        values.append(min(b - 1, values[-1] + rnd.randint(0, b - 1)))
    f = _monotone_from_values(p, q, values, "f")
    gvals = []
    for y in range(b):
        gvals.append(max(x for x in range(a) if values[x] <= y))
    g = _monotone_from_values(q, p, gvals, "g")
    return p, q, f, g


def _monotone_from_values(p: FinCategory, q: FinCategory, values, name: str) -> FinFunctor:
    omap = {str(i): str(v) for i, v in enumerate(values)}
    amap = {}
    for a, (s, t) in p.arrows.items():
        x, y = omap[s], omap[t]
        amap[a] = q.identity[x] if x == y else f"{x}<{y}"
    return FinFunctor(name, p, q, omap, amap)


def gen_two_category(rnd: random.Random, max_zero_cells: int = 2,
                     include_terminal: bool = False) -> BuiltSub2Cat:
    cats = []
    for i in range(max(1, min(max_zero_cells, 2))):
        cats.append(random_poset(rnd, 3, name=f"Z{i}"))
    functors = []
    if len(cats) == 2:
        maps = monotone_maps(cats[0], cats[1])
        if maps:
            functors.append(maps[rnd.randrange(len(maps))])
        back = monotone_maps(cats[1], cats[0])
        if back:
            functors.append(back[rnd.randrange(len(back))])
    return build_sub2cat(Sub2CatSpec(tuple(cats), tuple(functors), (), include_terminal))


def galois_adjunction(built: BuiltSub2Cat, p: FinCategory, q: FinCategory,
                      f: FinFunctor, g: FinFunctor) -> Adjunction:
    """Locate the adjunction cells for a Galois pair inside its sub-2-category."""
    t = built.two_cat
    fid = built.one_cell_id(p.name, q.name, f)
    gid = built.one_cell_id(q.name, p.name, g)
    gf = t.compose1(p.name, q.name, p.name, gid, fid)
    etas = t.hom[(p.name, p.name)].hom(t.unit[p.name], gf)
    fg = t.compose1(q.name, p.name, q.name, fid, gid)
    epss = t.hom[(q.name, q.name)].hom(fg, t.unit[q.name])
    if len(etas) != 1 or len(epss) != 1:
        raise GenerationFailed("Galois pair does not induce unique unit/counit 2-cells")
    return Adjunction(p.name, q.name, fid, gid, etas[0], epss[0])


# ---------------------------------------------------------------------------
# Entry point

def generate(spec: GenSpec) -> Document:
    """Deterministic document generation; plants are applied last."""
    rnd = random.Random(f"{spec.kind}:{spec.seed}")
    plant = normalize_plant(spec.kind, spec.plant) if spec.plant else None
    if spec.kind == "category":
        value = gen_category(rnd, spec.max_objects, spec.max_arrows, plant=plant)
    elif spec.kind == "profunctor":
        value = gen_profunctor(rnd, min(spec.max_objects, 3), spec.max_arrows, spec.max_hets, plant=plant)
    elif spec.kind == "functor":
        if plant:
            raise Mismatch("functor generation supports no plants")
        value = gen_functor(rnd, min(spec.max_objects, 3), spec.max_arrows)
    elif spec.kind == "two_category":
        if plant:
            raise Mismatch("two_category generation supports no plants")
        value = gen_two_category(rnd, spec.max_zero_cells)
    elif spec.kind == "indexed_profunctor":
        if plant:
            raise Mismatch("indexed_profunctor generation supports no plants")
        from .examples import build_hom_ip

        value = build_hom_ip(gen_two_category(rnd, spec.max_zero_cells))
    elif spec.kind == "adjunction":
        if plant:
            raise Mismatch("adjunction generation supports no plants")
        p, q, f, g = gen_galois(rnd, max(2, min(spec.max_objects, 5)))
        built = build_sub2cat(Sub2CatSpec((p, q), (f, g)))
        value = galois_adjunction(built, p, q, f, g)
    else:
        raise Mismatch(f"cannot generate kind {spec.kind!r}")
    return document_for(value, name=f"{spec.kind}-{spec.seed}")


def generate_adjunction_bundle(spec: GenSpec):
    """The adjunction together with the 2-category it lives in."""
    rnd = random.Random(f"{spec.kind}:{spec.seed}")
    p, q, f, g = gen_galois(rnd, max(2, min(spec.max_objects, 5)))
    built = build_sub2cat(Sub2CatSpec((p, q), (f, g)))
    return built, galois_adjunction(built, p, q, f, g)
