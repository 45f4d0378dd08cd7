"""Finite categories, functors and natural transformations as validated tables.

Objects and arrows are opaque string ids; identity arrows use the reserved
form ``id:<object>``. Composition is a flat table keyed by (later, earlier)
pairs, so every law check is a dictionary walk.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .budget import WorkMeter
from .errors import MalformedDocument, Mismatch
from .report import VerificationReport, from_witnesses


def identity_id(obj: str) -> str:
    return f"id:{obj}"


@dataclass(frozen=True, eq=False)
class FinCategory:
    name: str
    objects: frozenset
    arrows: dict  # arrow id -> (src object, tgt object)
    identity: dict  # object id -> arrow id
    compose: dict  # (g, f) -> arrow id of g after f

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.identity == other.identity
            and self.compose == other.compose
        )

    def src(self, a: str) -> str:
        return self.arrows[a][0]

    def tgt(self, a: str) -> str:
        return self.arrows[a][1]

    def is_identity(self, a: str) -> bool:
        x = self.arrows[a][0]
        return self.identity.get(x) == a and self.arrows[a][1] == x

    def hom(self, x: str, y: str) -> list:
        return sorted(a for a, (s, t) in self.arrows.items() if s == x and t == y)

    def comp(self, g: str, f: str) -> str:
        """g after f; raises Mismatch when tgt(f) != src(g)."""
        if self.tgt(f) != self.src(g):
            raise Mismatch(f"cannot compose {g} after {f} in {self.name}")
        return self.compose[(g, f)]

    def non_identities(self) -> list:
        return sorted(a for a in self.arrows if not self.is_identity(a))

    def sorted_objects(self) -> list:
        return sorted(self.objects)

    def sorted_arrows(self) -> list:
        return sorted(self.arrows)


@dataclass(frozen=True, eq=False)
class FinFunctor:
    name: str
    dom: FinCategory
    cod: FinCategory
    object_map: dict
    arrow_map: dict

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.object_map == other.object_map
            and self.arrow_map == other.arrow_map
        )

    def on_obj(self, x: str) -> str:
        return self.object_map[x]

    def on_arr(self, a: str) -> str:
        return self.arrow_map[a]

    def content_key(self):
        return (
            tuple(sorted(self.object_map.items())),
            tuple(sorted(self.arrow_map.items())),
        )


@dataclass(frozen=True, eq=False)
class FinNatTrans:
    name: str
    dom: FinFunctor
    cod: FinFunctor
    components: dict  # object of dom.dom -> arrow of dom.cod

    def __eq__(self, other):
        if not isinstance(other, FinNatTrans):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.components == other.components

    def at(self, x: str) -> str:
        return self.components[x]


def _structural_check(c: FinCategory) -> None:
    for a, (s, t) in c.arrows.items():
        if s not in c.objects:
            raise MalformedDocument(f"arrow {a} has unknown src {s}")
        if t not in c.objects:
            raise MalformedDocument(f"arrow {a} has unknown tgt {t}")
    for x in c.objects:
        if x not in c.identity:
            raise MalformedDocument(f"object {x} has no identity arrow")
        if c.identity[x] not in c.arrows:
            raise MalformedDocument(f"identity of {x} is a dangling arrow id")
    for (g, f), gf in c.compose.items():
        if g not in c.arrows or f not in c.arrows or gf not in c.arrows:
            raise MalformedDocument(f"compose entry ({g},{f})->{gf} references unknown arrows")
    for f in c.arrows:
        for g in c.arrows:
            composable = c.tgt(f) == c.src(g)
            if composable and (g, f) not in c.compose:
                raise MalformedDocument(f"compose table missing composable pair ({g},{f})")
            if not composable and (g, f) in c.compose:
                raise MalformedDocument(f"compose table defined on non-composable pair ({g},{f})")


def validate_category(c: FinCategory) -> VerificationReport:
    """Exhaustively check the category laws; structural holes raise instead."""
    _structural_check(c)
    witnesses = []
    for x in c.sorted_objects():
        i = c.identity[x]
        if c.arrows[i] != (x, x):
            witnesses.append({"law": "category.identity-endpoints", "object": x, "arrow": i})
    for (g, f), gf in sorted(c.compose.items()):
        if (c.src(gf), c.tgt(gf)) != (c.src(f), c.tgt(g)):
            witnesses.append({"law": "category.compose-endpoints", "g": g, "f": f, "composite": gf})
    for f in c.sorted_arrows():
        left = c.compose[(c.identity[c.tgt(f)], f)]
        right = c.compose[(f, c.identity[c.src(f)])]
        if left != f:
            witnesses.append({"law": "category.unit", "f": f, "id": c.identity[c.tgt(f)], "got": left})
        if right != f:
            witnesses.append({"law": "category.unit", "f": f, "id": c.identity[c.src(f)], "got": right})
    for f in c.sorted_arrows():
        for g in c.sorted_arrows():
            if c.tgt(f) != c.src(g):
                continue
            gf = c.compose[(g, f)]
            for h in c.sorted_arrows():
                if c.tgt(g) != c.src(h):
                    continue
                lhs = c.compose[(h, gf)]
                rhs = c.compose[(c.compose[(h, g)], f)]
                if lhs != rhs:
                    witnesses.append({"law": "category.assoc", "h": h, "g": g, "f": f})
    return from_witnesses("category-laws", witnesses)


def opposite_category(c: FinCategory) -> FinCategory:
    """Reverse all arrows; applying it twice restores the original tables."""
    name = c.name[:-3] if c.name.endswith("^op") else c.name + "^op"
    arrows = {a: (t, s) for a, (s, t) in c.arrows.items()}
    compose = {(f, g): gf for (g, f), gf in c.compose.items()}
    return FinCategory(name, c.objects, arrows, dict(c.identity), compose)


def pair_obj(x: str, y: str) -> str:
    return f"({x},{y})"


def pair_arrow(c: FinCategory, d: FinCategory, a: str, b: str) -> str:
    """Canonical id of the arrow (a, b) in c x d."""
    if c.is_identity(a) and d.is_identity(b):
        return identity_id(pair_obj(c.src(a), d.src(b)))
    return f"({a},{b})"


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    objects = frozenset(pair_obj(x, y) for x in c.objects for y in d.objects)
    arrows = {}
    for a, (s1, t1) in c.arrows.items():
        for b, (s2, t2) in d.arrows.items():
            arrows[pair_arrow(c, d, a, b)] = (pair_obj(s1, s2), pair_obj(t1, t2))
    identity = {pair_obj(x, y): identity_id(pair_obj(x, y)) for x in c.objects for y in d.objects}
    compose = {}
    for (g1, f1), h1 in c.compose.items():
        for (g2, f2), h2 in d.compose.items():
            compose[(pair_arrow(c, d, g1, g2), pair_arrow(c, d, f1, f2))] = pair_arrow(c, d, h1, h2)
    return FinCategory(f"{c.name}x{d.name}", objects, arrows, identity, compose)


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(
        f"id_{c.name}", c, c,
        {x: x for x in c.objects},
        {a: a for a in c.arrows},
    )


def compose_functor(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    if f.cod != g.dom:
        raise Mismatch(f"cannot compose {g.name} after {f.name}: boundary categories differ")
    return FinFunctor(
        f"{g.name}*{f.name}", f.dom, g.cod,
        {x: g.object_map[y] for x, y in f.object_map.items()},
        {a: g.arrow_map[b] for a, b in f.arrow_map.items()},
    )


def constant_functor(dom: FinCategory, cod: FinCategory, obj: str) -> FinFunctor:
    if obj not in cod.objects:
        raise Mismatch(f"{obj} is not an object of {cod.name}")
    return FinFunctor(
        f"const_{obj}", dom, cod,
        {x: obj for x in dom.objects},
        {a: cod.identity[obj] for a in dom.arrows},
    )


def validate_functor(f: FinFunctor) -> VerificationReport:
    for x in f.dom.objects:
        if x not in f.object_map:
            raise MalformedDocument(f"functor {f.name} misses object {x}")
        if f.object_map[x] not in f.cod.objects:
            raise MalformedDocument(f"functor {f.name} maps {x} outside its codomain")
    for a in f.dom.arrows:
        if a not in f.arrow_map:
            raise MalformedDocument(f"functor {f.name} misses arrow {a}")
        if f.arrow_map[a] not in f.cod.arrows:
            raise MalformedDocument(f"functor {f.name} maps {a} outside its codomain")
    witnesses = []
    for a in f.dom.sorted_arrows():
        img = f.arrow_map[a]
        want = (f.object_map[f.dom.src(a)], f.object_map[f.dom.tgt(a)])
        if (f.cod.src(img), f.cod.tgt(img)) != want:
            witnesses.append({"law": "functor.endpoints", "arrow": a, "image": img})
    for x in f.dom.sorted_objects():
        if f.arrow_map[f.dom.identity[x]] != f.cod.identity[f.object_map[x]]:
            witnesses.append({"law": "functor.identity", "object": x})
    for (g, a), ga in sorted(f.dom.compose.items()):
        if f.arrow_map[ga] != f.cod.compose[(f.arrow_map[g], f.arrow_map[a])]:
            witnesses.append({"law": "functor.composition", "g": g, "f": a})
    return from_witnesses("functor-laws", witnesses)


def identity_nat(f: FinFunctor) -> FinNatTrans:
    return FinNatTrans(
        f"id_{f.name}", f, f,
        {x: f.cod.identity[f.object_map[x]] for x in f.dom.objects},
    )


def validate_nat_trans(t: FinNatTrans) -> VerificationReport:
    if t.dom.dom != t.cod.dom or t.dom.cod != t.cod.cod:
        raise MalformedDocument(f"nat trans {t.name} is not between parallel functors")
    cod = t.dom.cod
    for x in t.dom.dom.objects:
        if x not in t.components:
            raise MalformedDocument(f"nat trans {t.name} misses component at {x}")
        comp = t.components[x]
        if comp not in cod.arrows:
            raise MalformedDocument(f"component at {x} is a dangling arrow id")
        if (cod.src(comp), cod.tgt(comp)) != (t.dom.object_map[x], t.cod.object_map[x]):
            raise MalformedDocument(f"component at {x} has wrong endpoints")
    witnesses = []
    for a in t.dom.dom.sorted_arrows():
        x, y = t.dom.dom.arrows[a]
        lhs = cod.compose[(t.components[y], t.dom.arrow_map[a])]
        rhs = cod.compose[(t.cod.arrow_map[a], t.components[x])]
        if lhs != rhs:
            witnesses.append({"law": "nat_trans.naturality", "arrow": a})
    return from_witnesses("nat-trans-laws", witnesses)


def compose_nat(mode: str, x, y) -> FinNatTrans:
    """Composites of natural transformations.

    vertical:      x after y (y: F->G, x: G->H gives F->H)
    horizontal:    x beside y (y between C->D functors, x between D->E)
    whisker_left:  x a functor applied after the transformation y
    whisker_right: x a transformation precomposed with the functor y
    """
    if mode == "vertical":
        if y.cod != x.dom:
            raise Mismatch("vertical composite needs y.cod == x.dom")
        cat = x.dom.cod
        comps = {o: cat.compose[(x.components[o], y.components[o])] for o in y.dom.dom.objects}
        return FinNatTrans(f"{x.name}.{y.name}", y.dom, x.cod, comps)
    if mode == "horizontal":
        if y.dom.cod != x.dom.dom:
            raise Mismatch("horizontal composite needs matching middle category")
        cat = x.dom.cod
        comps = {
            o: cat.compose[(x.cod.arrow_map[y.components[o]], x.components[y.dom.object_map[o]])]
            for o in y.dom.dom.objects
        }
        return FinNatTrans(
            f"{x.name}*{y.name}",
            compose_functor(x.dom, y.dom),
            compose_functor(x.cod, y.cod),
            comps,
        )
    if mode == "whisker_left":
        return compose_nat("horizontal", identity_nat(x), y)
    if mode == "whisker_right":
        return compose_nat("horizontal", x, identity_nat(y))
    raise Mismatch(f"unknown composition mode: {mode}")


@dataclass(frozen=True)
class FunctorCategory:
    """A functor category together with the meaning of its opaque ids."""

    cat: FinCategory
    functors: dict = field(repr=False)  # object id -> FinFunctor
    transformations: dict = field(repr=False)  # arrow id -> FinNatTrans

    def id_of_functor(self, f: FinFunctor) -> str:
        key = f.content_key()
        for fid, g in self.functors.items():
            if g.content_key() == key:
                return fid
        raise Mismatch(f"functor {f.name} is not an object of {self.cat.name}")

    def id_of_nat(self, t: FinNatTrans) -> str:
        dom_id = self.id_of_functor(t.dom)
        comps = tuple(sorted(t.components.items()))
        for nid, u in self.transformations.items():
            if self.id_of_functor(u.dom) == dom_id and tuple(sorted(u.components.items())) == comps:
                return nid
        raise Mismatch(f"transformation {t.name} is not an arrow of {self.cat.name}")


def _enumerate_functors(c: FinCategory, d: FinCategory, meter: WorkMeter) -> list:
    objs = c.sorted_objects()
    gens = c.non_identities()
    found = []

    def close_arrows(omap, amap, i):
        meter.tick()
        if i == len(gens):
            # identities are forced; verify composition is preserved
            full = dict(amap)
            for x in objs:
                full[c.identity[x]] = d.identity[omap[x]]
            for (g, f), gf in c.compose.items():
                if d.compose[(full[g], full[f])] != full[gf]:
                    return
            found.append(FinFunctor("", c, d, dict(omap), full))
            return
        a = gens[i]
        for img in d.hom(omap[c.src(a)], omap[c.tgt(a)]):
            amap[a] = img
            close_arrows(omap, amap, i + 1)
            del amap[a]

    def assign_obj(i, omap):
        meter.tick()
        if i == len(objs):
            close_arrows(omap, {}, 0)
            return
        x = objs[i]
        for target in d.sorted_objects():
            omap[x] = target
            # prune object maps that leave some arrow with an empty hom cell
            ok = all(
                d.hom(omap[c.src(a)], omap[c.tgt(a)])
                for a in gens
                if c.src(a) in omap and c.tgt(a) in omap
            )
            if ok:
                assign_obj(i + 1, omap)
            del omap[x]

    assign_obj(0, {})
    return found


def _enumerate_nats(f: FinFunctor, g: FinFunctor, meter: WorkMeter) -> list:
    c, d = f.dom, f.cod
    objs = c.sorted_objects()
    found = []

    def assign(i, comps):
        meter.tick()
        if i == len(objs):
            found.append(dict(comps))
            return
        x = objs[i]
        for arr in d.hom(f.object_map[x], g.object_map[x]):
            comps[x] = arr
            ok = True
            for a in c.non_identities():
                s, t = c.arrows[a]
                if s in comps and t in comps:
                    if d.compose[(comps[t], f.arrow_map[a])] != d.compose[(g.arrow_map[a], comps[s])]:
                        ok = False
                        break
            if ok:
                assign(i + 1, comps)
            del comps[x]

    assign(0, {})
    return found


def functor_category(c: FinCategory, d: FinCategory, budget: int | None = None) -> FunctorCategory:
    """All functors c -> d with natural transformations, as one category.

    Enumeration work is metered; oversized instances raise BudgetExceeded
    rather than hang.
    """
    estimate = len(d.objects) ** len(c.objects) * max(1, len(d.arrows)) ** len(c.non_identities())
    meter = WorkMeter(budget, what=f"functor category [{c.name},{d.name}]", estimate=estimate)
    fs = sorted(_enumerate_functors(c, d, meter), key=lambda f: f.content_key())
    functors = {}
    for i, f in enumerate(fs):
        fid = f"f{i}"
        functors[fid] = FinFunctor(fid, c, d, f.object_map, f.arrow_map)
    order = {fid: i for i, fid in enumerate(functors)}

    raw = []
    for fid, f in functors.items():
        for gid, g in functors.items():
            for comps in _enumerate_nats(f, g, meter):
                raw.append((order[fid], order[gid], tuple(sorted(comps.items())), fid, gid, comps))
    raw.sort(key=lambda r: (r[0], r[1], r[2]))

    transformations = {}
    by_key = {}
    arrows = {}
    identity = {}
    counter = 0
    for _, _, key, fid, gid, comps in raw:
        f, g = functors[fid], functors[gid]
        is_id = fid == gid and all(comps[x] == d.identity[f.object_map[x]] for x in comps)
        nid = identity_id(fid) if is_id else f"n{counter}"
        if not is_id:
            counter += 1
        transformations[nid] = FinNatTrans(nid, f, g, comps)
        by_key[(fid, key)] = nid
        arrows[nid] = (fid, gid)
        if is_id:
            identity[fid] = nid

    compose = {}
    for bid, (b_dom, b_cod) in arrows.items():
        for aid, (a_dom, a_cod) in arrows.items():
            if a_cod != b_dom:
                continue
            meter.tick()
            bt, at = transformations[bid], transformations[aid]
            comps = {x: d.compose[(bt.components[x], at.components[x])] for x in at.components}
            compose[(bid, aid)] = by_key[(a_dom, tuple(sorted(comps.items())))]

    cat = FinCategory(f"[{c.name},{d.name}]", frozenset(functors), arrows, identity, compose)
    return FunctorCategory(cat, functors, transformations)


def is_iso(c: FinCategory, a: str) -> bool:
    s, t = c.arrows[a]
    return any(
        c.compose[(b, a)] == c.identity[s] and c.compose[(a, b)] == c.identity[t]
        for b in c.hom(t, s)
    )


def is_faithful(f: FinFunctor) -> bool:
    for x in f.dom.objects:
        for y in f.dom.objects:
            seen = [f.arrow_map[a] for a in f.dom.hom(x, y)]
            if len(set(seen)) != len(seen):
                return False
    return True


def is_full(f: FinFunctor) -> bool:
    for x in f.dom.objects:
        for y in f.dom.objects:
            image = {f.arrow_map[a] for a in f.dom.hom(x, y)}
            if not set(f.cod.hom(f.object_map[x], f.object_map[y])) <= image:
                return False
    return True


def is_essentially_surjective(f: FinFunctor) -> bool:
    hit = set(f.object_map.values())
    for y in f.cod.objects:
        if y in hit:
            continue
        if not any(is_iso(f.cod, a) for x in hit for a in f.cod.hom(x, y)):
            return False
    return True
