"""Compile the classic limit notions (hom sets, cones, weights, wedges, right
Kan extensions) to explicit indexed-profunctor tables over finite bases.

Every builder produces tables that pass validate_indexed_profunctor; formula
definitions (whiskering, postcomposition) are evaluated to flat het maps at
build time so one uniform axiom checker covers them all.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .budget import WorkMeter
from .errors import Mismatch, NoTerminal, TooLarge
from .fincat import (
    FinCategory,
    FinFunctor,
    FinNatTrans,
    FunctorCategory,
    _enumerate_nats,
    compose_functor,
    compose_nat,
    constant_functor,
    functor_category,
    identity_functor,
    identity_id,
    opposite_category,
    pair_arrow,
    pair_obj,
    product_category,
)
from .fixtures import c1
from .indexed import IndexedCategory, IndexedProfunctor, inclusion_indexed_category
from .prof import FinProfunctor, hom_profunctor
from .twocat import FinTwoCategory, bang

DEFAULT_FINSET_CAP = 3
TERMINAL_NAME = "1"


# ---------------------------------------------------------------------------
# FinSet skeleton

def build_finset_skeleton(n: int, cap: int = DEFAULT_FINSET_CAP) -> FinCategory:
    """Objects 0..n as canonical finite sets, arrows all functions."""
    if n > cap:
        raise TooLarge(f"finset skeleton size {n} exceeds the cap {cap}")
    objects = [str(i) for i in range(n + 1)]

    def fn_id(i, j, values):
        if i == j and tuple(values) == tuple(range(i)):
            return identity_id(str(i))
        return f"fn:{i}>{j}:" + ",".join(str(v) for v in values)

    arrows = {}
    table = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i > 0 and j == 0:
                continue
            for values in _tuples(i, j):
                aid = fn_id(i, j, values)
                arrows[aid] = (str(i), str(j))
                table[aid] = tuple(values)
    identity = {str(i): identity_id(str(i)) for i in range(n + 1)}
    compose = {}
    for g, (j1, k) in arrows.items():
        for f, (i, j2) in arrows.items():
            if j1 != j2:
                continue
            values = tuple(table[g][v] for v in table[f])
            compose[(g, f)] = fn_id(int(i), int(k), values)
    return FinCategory(f"FinSet{n}", frozenset(objects), arrows, identity, compose)


def _tuples(i: int, j: int):
    if i == 0:
        yield ()
        return
    for rest in _tuples(i - 1, j):
        for v in range(j):
            yield rest + (v,)


def finset_function(arrow: str, src_size: int) -> tuple:
    """Decode a skeleton arrow id back into its value tuple."""
    if arrow.startswith("id:"):
        return tuple(range(src_size))
    return tuple(int(v) for v in arrow.rsplit(":", 1)[1].split(",") if v != "")


# ---------------------------------------------------------------------------
# Sub-2-categories of Cat

@dataclass(frozen=True)
class Sub2CatSpec:
    categories: tuple
    functors: tuple = ()
    nat_trans: tuple = ()
    include_terminal: bool = False


@dataclass(frozen=True)
class BuiltSub2Cat:
    """A concrete 2-category of categories plus its tautological indexing."""

    two_cat: FinTwoCategory
    inclusion: IndexedCategory

    def one_cell_id(self, x: str, y: str, f: FinFunctor) -> str:
        key = f.content_key()
        for (a, b, fid), g in self.inclusion.at1.items():
            if (a, b) == (x, y) and g.content_key() == key:
                return fid
        raise Mismatch(f"no 1-cell {x} -> {y} with the tables of {f.name}")

    def two_cell_id(self, x: str, y: str, t: FinNatTrans) -> str:
        comps = tuple(sorted(t.components.items()))
        dom_key = t.dom.content_key()
        for (a, b, nid), u in self.inclusion.at2.items():
            if (a, b) == (x, y) and u.dom.content_key() == dom_key:
                if tuple(sorted(u.components.items())) == comps:
                    return nid
        raise Mismatch(f"no 2-cell {x} -> {y} with the components of {t.name}")

    def category_of(self, x: str) -> FinCategory:
        return self.inclusion.at0[x]


def build_sub2cat(spec: Sub2CatSpec, budget: int | None = None) -> BuiltSub2Cat:
    """Close the generators under composition, then take full hom-categories.

    1-cells are the closure of {identities, the given functors, and (with the
    terminal flag) the bang functors and all constants}; 2-cells are all
    natural transformations between the included 1-cells, so each hom is a
    full subcategory of the functor category.
    """
    meter = WorkMeter(budget, what="sub-2-category closure")
    cats = {}
    for c in spec.categories:
        if c.name in cats:
            raise Mismatch(f"duplicate 0-cell name {c.name}")
        cats[c.name] = c
    if spec.include_terminal:
        if TERMINAL_NAME in cats:
            raise Mismatch(f"0-cell name {TERMINAL_NAME} is reserved for the terminal")
        cats[TERMINAL_NAME] = dataclasses.replace(c1(), name=TERMINAL_NAME)

    def locate(cat: FinCategory) -> str:
        # names disambiguate 0-cells whose tables happen to coincide
        if cat.name in cats and cats[cat.name] == cat:
            return cat.name
        matches = [name for name, c in cats.items() if c == cat]
        if len(matches) == 1:
            return matches[0]
        if matches:
            raise Mismatch(
                f"functor boundary {cat.name} matches several 0-cells {matches}; name it explicitly"
            )
        raise Mismatch(f"functor boundary {cat.name} is not a listed 0-cell")

    cells = {(x, y): {} for x in cats for y in cats}  # keyed by content

    def add(x, y, f: FinFunctor) -> bool:
        key = f.content_key()
        if key not in cells[(x, y)]:
            cells[(x, y)][key] = f
            return True
        return False

    for name, c in cats.items():
        add(name, name, identity_functor(c))
    for f in spec.functors:
        add(locate(f.dom), locate(f.cod), f)
    if spec.include_terminal:
        term = cats[TERMINAL_NAME]
        for name, c in cats.items():
            if name == TERMINAL_NAME:
                continue
            add(name, TERMINAL_NAME, constant_functor(c, term, "*"))
            for obj in sorted(c.objects):
                add(TERMINAL_NAME, name, constant_functor(term, c, obj))

    changed = True
    while changed:
        changed = False
        for (x, y), fs in list(cells.items()):
            for z in cats:
                gs = cells[(y, z)]
                for f in list(fs.values()):
                    for g in list(gs.values()):
                        meter.tick()
                        if add(x, z, compose_functor(g, f)):
                            changed = True

    one_ids = {}
    hom_cats = {}
    hom_funcs = {}
    hom_trans = {}
    nat_index = {}
    for (x, y), fs in cells.items():
        fs_sorted = sorted(fs.values(), key=lambda f: f.content_key())
        ids = {}
        funcs = {}
        for i, f in enumerate(fs_sorted):
            fid = f"1cell:{x}>{y}:{i}"
            ids[f.content_key()] = fid
            funcs[fid] = FinFunctor(fid, f.dom, f.cod, f.object_map, f.arrow_map)
        one_ids[(x, y)] = ids
        raw = []
        for fid, f in funcs.items():
            for gid, g in funcs.items():
                for comps in _enumerate_nats(f, g, meter):
                    raw.append((fid, gid, tuple(sorted(comps.items())), comps))
        raw.sort()
        trans = {}
        index = {}
        arrows = {}
        identity = {}
        counter = 0
        cod_cat = cats[y]
        for fid, gid, key, comps in raw:
            is_id = fid == gid and all(
                comps[o] == cod_cat.identity[funcs[fid].object_map[o]] for o in comps
            )
            nid = identity_id(fid) if is_id else f"2cell:{x}>{y}:{counter}"
            if not is_id:
                counter += 1
            trans[nid] = FinNatTrans(nid, funcs[fid], funcs[gid], comps)
            index[(fid, key)] = nid
            arrows[nid] = (fid, gid)
            if is_id:
                identity[fid] = nid
        compose = {}
        for bid, (bd, bc) in arrows.items():
            for aid, (ad, ac) in arrows.items():
                if ac != bd:
                    continue
                meter.tick()
                comps = {
                    o: cod_cat.compose[(trans[bid].components[o], trans[aid].components[o])]
                    for o in trans[aid].components
                }
                compose[(bid, aid)] = index[(ad, tuple(sorted(comps.items())))]
        hom_cats[(x, y)] = FinCategory(f"hom({x},{y})", frozenset(funcs), arrows, identity, compose)
        hom_funcs[(x, y)] = funcs
        hom_trans[(x, y)] = trans
        nat_index[(x, y)] = index

    comp = {}
    for x in cats:
        for y in cats:
            for z in cats:
                dom = product_category(hom_cats[(y, z)], hom_cats[(x, y)])
                object_map = {}
                for gid, g in hom_funcs[(y, z)].items():
                    for fid, f in hom_funcs[(x, y)].items():
                        object_map[pair_obj(gid, fid)] = one_ids[(x, z)][
                            compose_functor(g, f).content_key()
                        ]
                arrow_map = {}
                for bid, bt in hom_trans[(y, z)].items():
                    for aid, at in hom_trans[(x, y)].items():
                        meter.tick()
                        h = compose_nat("horizontal", bt, at)
                        dom_1cell = one_ids[(x, z)][h.dom.content_key()]
                        target = nat_index[(x, z)][(dom_1cell, tuple(sorted(h.components.items())))]
                        arrow_map[pair_arrow(hom_cats[(y, z)], hom_cats[(x, y)], bid, aid)] = target
                comp[(x, y, z)] = FinFunctor(
                    f"comp({x},{y},{z})", dom, hom_cats[(x, z)], object_map, arrow_map
                )

    unit = {x: one_ids[(x, x)][identity_functor(cats[x]).content_key()] for x in cats}
    two_cat = FinTwoCategory(
        "Sub2Cat(" + ",".join(sorted(cats)) + ")",
        frozenset(cats),
        hom_cats,
        comp,
        unit,
        TERMINAL_NAME if spec.include_terminal else None,
    )
    at1 = {}
    at2 = {}
    for (x, y), funcs in hom_funcs.items():
        for fid, f in funcs.items():
            at1[(x, y, fid)] = f
        for nid, tr in hom_trans[(x, y)].items():
            at2[(x, y, nid)] = tr
    inclusion = inclusion_indexed_category(two_cat, dict(cats), at1, at2)
    built = BuiltSub2Cat(two_cat, inclusion)

    for tr in spec.nat_trans:  # generators must have materialised
        built.two_cell_id(locate(tr.dom.dom), locate(tr.dom.cod), tr)
    return built


def full_sub2cat(categories, include_terminal: bool = False, budget: int | None = None) -> BuiltSub2Cat:
    """Sub-2-category spanned by all functors between the given categories."""
    functors = []
    cats = list(categories)
    for c in cats:
        for d in cats:
            functors.extend(functor_category(c, d, budget).functors.values())
    return build_sub2cat(Sub2CatSpec(tuple(cats), tuple(functors), (), include_terminal), budget)


# ---------------------------------------------------------------------------
# Indexed categories derived from a base 2-category

def hom_from(t: FinTwoCategory, w: str, name: str | None = None) -> IndexedCategory:
    """The indexed category X |-> hom(w, X), acting by postcomposition."""
    at0 = {x: t.hom[(w, x)] for x in t.zero_cells}
    at1 = {}
    at2 = {}
    for x in t.zero_cells:
        for y in t.zero_cells:
            for f in t.one_cells(x, y):
                at1[(x, y, f)] = t.postcompose_functor(w, x, y, f)
            for theta in t.two_cells(x, y):
                f, f2 = t.hom[(x, y)].arrows[theta]
                at2[(x, y, theta)] = FinNatTrans(
                    f"{theta}*-",
                    at1[(x, y, f)],
                    at1[(x, y, f2)],
                    {r: t.whisker_pre(w, x, y, theta, r) for r in t.hom[(w, x)].objects},
                )
    return IndexedCategory(name or f"hom({w},-)", t, at0, at1, at2)


def _theta_ends(t: FinTwoCategory, x: str, y: str, theta: str) -> tuple:
    return t.hom[(x, y)].arrows[theta]


def _product_functor(f: FinFunctor, g: FinFunctor, dom: FinCategory, cod: FinCategory) -> FinFunctor:
    object_map = {}
    arrow_map = {}
    for x in f.dom.objects:
        for y in g.dom.objects:
            object_map[pair_obj(x, y)] = pair_obj(f.object_map[x], g.object_map[y])
    for a in f.dom.arrows:
        for b in g.dom.arrows:
            arrow_map[pair_arrow(f.dom, g.dom, a, b)] = pair_arrow(
                f.cod, g.cod, f.arrow_map[a], g.arrow_map[b]
            )
    return FinFunctor(f"({f.name}x{g.name})", dom, cod, object_map, arrow_map)


def _product_indexed(t: FinTwoCategory, left_cat: FinCategory, right: IndexedCategory,
                     name: str) -> IndexedCategory:
    """Constant first factor times a varying second factor."""
    at0 = {x: product_category(left_cat, right.at0[x]) for x in t.zero_cells}
    at1 = {}
    at2 = {}
    id_left = identity_functor(left_cat)
    for (x, y, f), g in right.at1.items():
        at1[(x, y, f)] = _product_functor(id_left, g, at0[x], at0[y])
    for (x, y, th), u in right.at2.items():
        f, f2 = _theta_ends(t, x, y, th)
        comps = {}
        for wobj in left_cat.objects:
            for robj in right.at0[x].objects:
                comps[pair_obj(wobj, robj)] = pair_arrow(
                    left_cat, right.at0[y], left_cat.identity[wobj], u.components[robj]
                )
        at2[(x, y, th)] = FinNatTrans(u.name, at1[(x, y, f)], at1[(x, y, f2)], comps)
    return IndexedCategory(name, t, at0, at1, at2)


def _functor_cat_indexed(t: FinTwoCategory, incl: IndexedCategory, shape: FinCategory,
                         fcs: dict, name: str) -> IndexedCategory:
    """The indexed category X |-> [shape, X] over a base of categories."""
    at0 = {x: fcs[x].cat for x in t.zero_cells}
    at1 = {}
    at2 = {}
    for (x, y, fid), f in incl.at1.items():
        at1[(x, y, fid)] = _postcompose_on_fc(f, fcs[x], fcs[y])
    for (x, y, nid), u in incl.at2.items():
        f, f2 = _theta_ends(t, x, y, nid)
        comps = {}
        for did, d in fcs[x].functors.items():
            comps[did] = fcs[y].id_of_nat(compose_nat("whisker_right", u, d))
        at2[(x, y, nid)] = FinNatTrans(u.name, at1[(x, y, f)], at1[(x, y, f2)], comps)
    return IndexedCategory(name, t, at0, at1, at2)


def _postcompose_on_fc(f: FinFunctor, fc_dom: FunctorCategory, fc_cod: FunctorCategory) -> FinFunctor:
    object_map = {did: fc_cod.id_of_functor(compose_functor(f, d)) for did, d in fc_dom.functors.items()}
    arrow_map = {
        nid: fc_cod.id_of_nat(compose_nat("whisker_left", f, u))
        for nid, u in fc_dom.transformations.items()
    }
    return FinFunctor(f"{f.name}*-", fc_dom.cat, fc_cod.cat, object_map, arrow_map)


# ---------------------------------------------------------------------------
# The hom indexed profunctor

def build_hom_ip(built: BuiltSub2Cat) -> IndexedProfunctor:
    """Hom sets as an indexed endo-profunctor on the inclusion indexing."""
    incl = built.inclusion
    at0 = {x: hom_profunctor(incl.at0[x]) for x in built.two_cat.zero_cells}
    atf = {key: dict(functor.arrow_map) for key, functor in incl.at1.items()}
    return IndexedProfunctor("HomIP", incl, incl, at0, atf)


# ---------------------------------------------------------------------------
# Conical limits in 0-cells of a 2-category

def _conical_het(gamma: str, x: str) -> str:
    return f"{gamma}@{x}"


def _parse_conical(hid: str) -> tuple:
    at = hid.rfind("@")
    return hid[:at], hid[at + 1:]


def build_conical_ip(base, i_cell: str) -> IndexedProfunctor:
    """Cones as hets: H_X(x, d) is the set of 2-cells x . bang -> d in hom(I, X)."""
    t = base.two_cat if isinstance(base, BuiltSub2Cat) else base
    if t.terminal is None:
        raise NoTerminal(f"{t.name} has no designated terminal 0-cell")
    if i_cell not in t.zero_cells:
        raise Mismatch(f"{i_cell} is not a 0-cell of {t.name}")
    term = t.terminal
    bang_i = bang(t, i_cell)
    r_icat = hom_from(t, term, name="points")
    s_icat = hom_from(t, i_cell, name="diagrams")

    at0 = {}
    for x in t.zero_cells:
        pts = t.hom[(term, x)]
        dgs = t.hom[(i_cell, x)]
        hets = {}
        for p in pts.sorted_objects():
            apex = t.compose1(i_cell, term, x, p, bang_i)
            for gamma in dgs.sorted_arrows():
                if dgs.src(gamma) == apex:
                    hets[_conical_het(gamma, p)] = (p, dgs.tgt(gamma))
        left = {}
        right = {}
        for hid, (p, d) in hets.items():
            gamma, _ = _parse_conical(hid)
            for alpha in pts.arrows:
                if pts.tgt(alpha) == p:
                    moved = dgs.comp(gamma, t.whisker_pre(i_cell, term, x, alpha, bang_i))
                    left[(alpha, hid)] = _conical_het(moved, pts.src(alpha))
            for delta in dgs.arrows:
                if dgs.src(delta) == d:
                    right[(delta, hid)] = _conical_het(dgs.comp(delta, gamma), p)
        at0[x] = FinProfunctor(f"Cone@{x}", pts, dgs, hets, left, right)

    atf = {}
    for x in t.zero_cells:
        for y in t.zero_cells:
            for f in t.one_cells(x, y):
                table = {}
                for hid in at0[x].hets:
                    gamma, p = _parse_conical(hid)
                    moved = t.whisker_post(i_cell, x, y, f, gamma)
                    table[hid] = _conical_het(moved, t.compose1(term, x, y, f, p))
                atf[(x, y, f)] = table
    return IndexedProfunctor(f"ConicalIP[{i_cell}]", r_icat, s_icat, at0, atf)


# ---------------------------------------------------------------------------
# Right Kan extensions in a 2-category

def _kan_het(gamma: str, r: str, k: str) -> str:
    return f"{gamma}@{r}|{k}"


def _parse_kan(hid: str) -> tuple:
    at = hid.rfind("@")
    bar = hid.rfind("|")
    return hid[:at], hid[at + 1:bar], hid[bar + 1:]


def build_kan_ip(base, i_cell: str, a_cell: str) -> IndexedProfunctor:
    """Hets from r to (k, d) are 2-cells r . k -> d in hom(I, X); limits are
    right Kan extensions of d along k."""
    t = base.two_cat if isinstance(base, BuiltSub2Cat) else base
    for c in (i_cell, a_cell):
        if c not in t.zero_cells:
            raise Mismatch(f"{c} is not a 0-cell of {t.name}")
    r_icat = hom_from(t, a_cell, name="candidates")
    ks = opposite_category(t.hom[(i_cell, a_cell)])
    s_icat = _product_indexed(t, ks, hom_from(t, i_cell), name="along-diagram-pairs")

    at0 = {}
    for x in t.zero_cells:
        rs = t.hom[(a_cell, x)]
        dgs = t.hom[(i_cell, x)]
        hets = {}
        for r in rs.sorted_objects():
            for k in ks.sorted_objects():
                rk = t.compose1(i_cell, a_cell, x, r, k)
                for gamma in dgs.sorted_arrows():
                    if dgs.src(gamma) == rk:
                        hets[_kan_het(gamma, r, k)] = (r, pair_obj(k, dgs.tgt(gamma)))
        left = {}
        right = {}
        for hid in hets:
            gamma, r, k = _parse_kan(hid)
            d = dgs.tgt(gamma)
            for alpha in rs.arrows:
                if rs.tgt(alpha) == r:
                    moved = dgs.comp(gamma, t.whisker_pre(i_cell, a_cell, x, alpha, k))
                    left[(alpha, hid)] = _kan_het(moved, rs.src(alpha), k)
            for phi_op in ks.arrows:  # phi: k2 -> k in hom(I,A), reversed here
                if ks.src(phi_op) != k:
                    continue
                k2 = ks.tgt(phi_op)
                precomposed = dgs.comp(gamma, t.whisker_post(i_cell, a_cell, x, r, phi_op))
                for delta in dgs.arrows:
                    if dgs.src(delta) != d:
                        continue
                    moved = dgs.comp(delta, precomposed)
                    right[(pair_arrow(ks, dgs, phi_op, delta), hid)] = _kan_het(moved, r, k2)
        at0[x] = FinProfunctor(f"Kan@{x}", rs, s_icat.at0[x], hets, left, right)

    atf = {}
    for x in t.zero_cells:
        for y in t.zero_cells:
            for f in t.one_cells(x, y):
                table = {}
                for hid in at0[x].hets:
                    gamma, r, k = _parse_kan(hid)
                    moved = t.whisker_post(i_cell, x, y, f, gamma)
                    table[hid] = _kan_het(moved, t.compose1(a_cell, x, y, f, r), k)
                atf[(x, y, f)] = table
    return IndexedProfunctor(f"KanIP[{i_cell}->{a_cell}]", r_icat, s_icat, at0, atf)


# ---------------------------------------------------------------------------
# Ends in categories

def _wedge_het(x: str, d: str, fam: dict) -> str:
    return f"w@{x}|{d}[" + ",".join(f"{i}:{h}" for i, h in sorted(fam.items())) + "]"


def build_ends_ip(built: BuiltSub2Cat, i_cell: str, budget: int | None = None) -> IndexedProfunctor:
    """Hets from x to d: I^op x I -> X are the wedges from x to d."""
    incl = built.inclusion
    t = built.two_cat
    i_cat = incl.at0[i_cell]
    iop = opposite_category(i_cat)
    p_cat = product_category(iop, i_cat)
    meter = WorkMeter(budget, what="ends builder")

    fcs = {x: functor_category(p_cat, incl.at0[x], budget) for x in t.zero_cells}
    s_icat = _functor_cat_indexed(t, incl, p_cat, fcs, name="end-diagrams")
    objs = i_cat.sorted_objects()

    def wedges(cat: FinCategory, x: str, d: FinFunctor) -> list:
        out = []

        def ok(fam):
            for a in i_cat.non_identities():
                i, i2 = i_cat.arrows[a]
                if i in fam and i2 in fam:
                    lhs = cat.compose[(d.arrow_map[pair_arrow(iop, i_cat, i_cat.identity[i], a)], fam[i])]
                    rhs = cat.compose[(d.arrow_map[pair_arrow(iop, i_cat, a, i_cat.identity[i2])], fam[i2])]
                    if lhs != rhs:
                        return False
            return True

        def assign(n, fam):
            meter.tick()
            if n == len(objs):
                out.append(dict(fam))
                return
            i = objs[n]
            for h in cat.hom(x, d.object_map[pair_obj(i, i)]):
                fam[i] = h
                if ok(fam):
                    assign(n + 1, fam)
                del fam[i]

        assign(0, {})
        return out

    at0 = {}
    fams_by_cell = {}
    for x in t.zero_cells:
        cat = incl.at0[x]
        fc = fcs[x]
        hets = {}
        fams = {}
        for did, d in fc.functors.items():
            for xobj in cat.sorted_objects():
                for fam in wedges(cat, xobj, d):
                    hid = _wedge_het(xobj, did, fam)
                    hets[hid] = (xobj, did)
                    fams[hid] = (xobj, did, fam)
        left = {}
        right = {}
        for hid, (xobj, did, fam) in fams.items():
            for q in cat.arrows:
                if cat.tgt(q) == xobj:
                    moved = {i: cat.compose[(fam[i], q)] for i in fam}
                    left[(q, hid)] = _wedge_het(cat.src(q), did, moved)
            for nid, (nd, nc) in fc.cat.arrows.items():
                if nd != did:
                    continue
                delta = fc.transformations[nid]
                moved = {i: cat.compose[(delta.components[pair_obj(i, i)], fam[i])] for i in fam}
                right[(nid, hid)] = _wedge_het(xobj, nc, moved)
        at0[x] = FinProfunctor(f"Wedge@{x}", cat, fc.cat, hets, left, right)
        fams_by_cell[x] = fams

    atf = {}
    for x in t.zero_cells:
        for y in t.zero_cells:
            for fid in t.one_cells(x, y):
                f = incl.at1[(x, y, fid)]
                table = {}
                for hid, (xobj, did, fam) in fams_by_cell[x].items():
                    moved = {i: f.arrow_map[h] for i, h in fam.items()}
                    d2 = compose_functor(f, fcs[x].functors[did])
                    table[hid] = _wedge_het(f.object_map[xobj], fcs[y].id_of_functor(d2), moved)
                atf[(x, y, fid)] = table
    return IndexedProfunctor(f"EndsIP[{i_cell}]", incl, s_icat, at0, atf)


# ---------------------------------------------------------------------------
# Weighted limits in categories

def _weighted_het(x: str, w: str, d: str, comps: dict) -> str:
    body = ";".join(f"{i}:(" + ",".join(v) + ")" for i, v in sorted(comps.items()))
    return f"g@{x}|{w}|{d}[{body}]"


def build_weighted_ip(built: BuiltSub2Cat, i_cell: str, finset: FinCategory,
                      budget: int | None = None) -> IndexedProfunctor:
    """Hets from x to (w, d) are natural transformations w => X(x, d-), with
    the finite-set skeleton standing in for Set."""
    incl = built.inclusion
    t = built.two_cat
    i_cat = incl.at0[i_cell]
    meter = WorkMeter(budget, what="weighted builder")

    wfc = functor_category(i_cat, finset, budget)
    wop = opposite_category(wfc.cat)
    fcs = {x: functor_category(i_cat, incl.at0[x], budget) for x in t.zero_cells}
    diag = _functor_cat_indexed(t, incl, i_cat, fcs, name="diagrams")
    s_icat = _product_indexed(t, wop, diag, name="weighted-pairs")
    objs = i_cat.sorted_objects()

    def wsize(wid: str, i: str) -> int:
        return int(wfc.functors[wid].object_map[i])

    def transfos(cat: FinCategory, x: str, wid: str, d: FinFunctor) -> list:
        out = []

        def ok(comps):
            for a in i_cat.non_identities():
                i, i2 = i_cat.arrows[a]
                if i in comps and i2 in comps:
                    move = finset_function(wfc.functors[wid].arrow_map[a], wsize(wid, i))
                    for j in range(wsize(wid, i)):
                        if comps[i2][move[j]] != cat.compose[(d.arrow_map[a], comps[i][j])]:
                            return False
            return True

        def assign(n, comps):
            meter.tick()
            if n == len(objs):
                out.append({i: tuple(v) for i, v in comps.items()})
                return
            i = objs[n]
            cell = cat.hom(x, d.object_map[i])

            def pick(j, acc):
                if j == wsize(wid, i):
                    comps[i] = tuple(acc)
                    if ok(comps):
                        assign(n + 1, comps)
                    del comps[i]
                    return
                for arr in cell:
                    acc.append(arr)
                    pick(j + 1, acc)
                    acc.pop()

            pick(0, [])

        assign(0, {})
        return out

    at0 = {}
    fams_by_cell = {}
    for x in t.zero_cells:
        cat = incl.at0[x]
        fc = fcs[x]
        hets = {}
        fams = {}
        for wid in wfc.functors:
            for did, d in fc.functors.items():
                for xobj in cat.sorted_objects():
                    for comps in transfos(cat, xobj, wid, d):
                        hid = _weighted_het(xobj, wid, did, comps)
                        hets[hid] = (xobj, pair_obj(wid, did))
                        fams[hid] = (xobj, wid, did, comps)
        left = {}
        right = {}
        for hid, (xobj, wid, did, comps) in fams.items():
            for q in cat.arrows:
                if cat.tgt(q) == xobj:
                    moved = {i: tuple(cat.compose[(u, q)] for u in v) for i, v in comps.items()}
                    left[(q, hid)] = _weighted_het(cat.src(q), wid, did, moved)
            for phi_op in wop.arrows:  # phi: w2 -> w in [I, finset], reversed here
                if wop.src(phi_op) != wid:
                    continue
                w2 = wop.tgt(phi_op)
                phi = wfc.transformations[phi_op]
                for nid, (nd, nc) in fc.cat.arrows.items():
                    if nd != did:
                        continue
                    delta = fc.transformations[nid]
                    moved = {}
                    for i in objs:
                        fn = finset_function(phi.components[i], wsize(w2, i))
                        moved[i] = tuple(
                            cat.compose[(delta.components[i], comps[i][fn[j]])]
                            for j in range(wsize(w2, i))
                        )
                    right[(pair_arrow(wop, fc.cat, phi_op, nid), hid)] = _weighted_het(
                        xobj, w2, nc, moved
                    )
        at0[x] = FinProfunctor(f"Weighted@{x}", cat, s_icat.at0[x], hets, left, right)
        fams_by_cell[x] = fams

    atf = {}
    for x in t.zero_cells:
        for y in t.zero_cells:
            for fid in t.one_cells(x, y):
                f = incl.at1[(x, y, fid)]
                table = {}
                for hid, (xobj, wid, did, comps) in fams_by_cell[x].items():
                    moved = {i: tuple(f.arrow_map[u] for u in v) for i, v in comps.items()}
                    d2 = compose_functor(f, fcs[x].functors[did])
                    table[hid] = _weighted_het(f.object_map[xobj], wid, fcs[y].id_of_functor(d2), moved)
                atf[(x, y, fid)] = table
    return IndexedProfunctor(f"WeightedIP[{i_cell}]", incl, s_icat, at0, atf)
