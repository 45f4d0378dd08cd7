"""Finite profunctors: action tables, limits by universal-element search,
pullbacks, opposites, ends and power profunctors.

A heteromorphism id is globally unique within its profunctor, so cells,
transformations and morphisms are all flat dictionaries on het ids.
Colimit logic is never duplicated: every colimit question is routed through
the opposite profunctor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import WorkMeter
from .errors import Mismatch, MalformedDocument, NotALimit
from .fincat import (
    FinCategory,
    FinFunctor,
    FunctorCategory,
    functor_category,
    identity_functor,
    opposite_category,
)
from .report import VerificationReport, from_witnesses


@dataclass(frozen=True, eq=False)
class FinProfunctor:
    name: str
    dom: FinCategory  # R
    cod: FinCategory  # S
    hets: dict  # het id -> (object of R, object of S)
    left_action: dict  # (arrow a: r'->r in R, het h at (r,s)) -> het at (r',s)
    right_action: dict  # (arrow b: s->s' in S, het h at (r,s)) -> het at (r,s')

    def __eq__(self, other):
        if not isinstance(other, FinProfunctor):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.hets == other.hets
            and self.left_action == other.left_action
            and self.right_action == other.right_action
        )

    def src(self, h: str) -> str:
        return self.hets[h][0]

    def tgt(self, h: str) -> str:
        return self.hets[h][1]

    def cell(self, r: str, s: str) -> list:
        return sorted(h for h, (a, b) in self.hets.items() if a == r and b == s)

    def lact(self, a: str, h: str) -> str:
        """Contravariant action a*(h) for a: r' -> r and h: r -> s."""
        if self.dom.tgt(a) != self.src(h):
            raise Mismatch(f"left action {a} on {h}: boundary mismatch")
        return self.left_action[(a, h)]

    def ract(self, b: str, h: str) -> str:
        """Covariant action b_*(h) for b: s -> s' and h: r -> s."""
        if self.cod.src(b) != self.tgt(h):
            raise Mismatch(f"right action {b} on {h}: boundary mismatch")
        return self.right_action[(b, h)]

    def sorted_hets(self) -> list:
        return sorted(self.hets)


def hom_profunctor(c: FinCategory) -> FinProfunctor:
    """Arrows of c as heteromorphisms; actions are pre- and postcomposition."""
    hets = {a: (s, t) for a, (s, t) in c.arrows.items()}
    left = {}
    right = {}
    for h in c.arrows:
        for a in c.arrows:
            if c.tgt(a) == c.src(h):
                left[(a, h)] = c.compose[(h, a)]
            if c.src(a) == c.tgt(h):
                right[(a, h)] = c.compose[(a, h)]
    return FinProfunctor(f"Hom({c.name})", c, c, hets, left, right)


def _structural(p: FinProfunctor) -> None:
    for h, (r, s) in p.hets.items():
        if r not in p.dom.objects or s not in p.cod.objects:
            raise MalformedDocument(f"het {h} has dangling endpoints ({r},{s})")
    seen_l, seen_r = set(), set()
    for (a, h), out in p.left_action.items():
        if a not in p.dom.arrows or h not in p.hets or out not in p.hets:
            raise MalformedDocument(f"left action entry ({a},{h}) references unknown ids")
        if p.dom.tgt(a) != p.src(h):
            raise MalformedDocument(f"left action entry ({a},{h}) is not composable")
        if p.hets[out] != (p.dom.src(a), p.tgt(h)):
            raise MalformedDocument(f"left action ({a},{h}) lands in the wrong cell")
        seen_l.add((a, h))
    for (b, h), out in p.right_action.items():
        if b not in p.cod.arrows or h not in p.hets or out not in p.hets:
            raise MalformedDocument(f"right action entry ({b},{h}) references unknown ids")
        if p.cod.src(b) != p.tgt(h):
            raise MalformedDocument(f"right action entry ({b},{h}) is not composable")
        if p.hets[out] != (p.src(h), p.cod.tgt(b)):
            raise MalformedDocument(f"right action ({b},{h}) lands in the wrong cell")
        seen_r.add((b, h))
    for h in p.hets:
        for a in p.dom.arrows:
            if p.dom.tgt(a) == p.src(h) and (a, h) not in seen_l:
                raise MalformedDocument(f"left action missing entry ({a},{h})")
        for b in p.cod.arrows:
            if p.cod.src(b) == p.tgt(h) and (b, h) not in seen_r:
                raise MalformedDocument(f"right action missing entry ({b},{h})")


def validate_profunctor(p: FinProfunctor) -> VerificationReport:
    """Identity, composition and commutation laws of the two actions."""
    _structural(p)
    witnesses = []
    for h in p.sorted_hets():
        r, s = p.hets[h]
        if p.left_action[(p.dom.identity[r], h)] != h:
            witnesses.append({"law": "profunctor.action-identity", "side": "left", "het": h})
        if p.right_action[(p.cod.identity[s], h)] != h:
            witnesses.append({"law": "profunctor.action-identity", "side": "right", "het": h})
    for h in p.sorted_hets():
        r, s = p.hets[h]
        for a in p.dom.sorted_arrows():
            if p.dom.tgt(a) != r:
                continue
            for a2 in p.dom.sorted_arrows():
                if p.dom.tgt(a2) != p.dom.src(a):
                    continue
                whole = p.left_action[(p.dom.compose[(a, a2)], h)]
                steps = p.left_action[(a2, p.left_action[(a, h)])]
                if whole != steps:
                    witnesses.append(
                        {"law": "profunctor.action-compose", "side": "left", "a": a, "a2": a2, "het": h}
                    )
        for b in p.cod.sorted_arrows():
            if p.cod.src(b) != s:
                continue
            for b2 in p.cod.sorted_arrows():
                if p.cod.src(b2) != p.cod.tgt(b):
                    continue
                whole = p.right_action[(p.cod.compose[(b2, b)], h)]
                steps = p.right_action[(b2, p.right_action[(b, h)])]
                if whole != steps:
                    witnesses.append(
                        {"law": "profunctor.action-compose", "side": "right", "b": b, "b2": b2, "het": h}
                    )
        for a in p.dom.sorted_arrows():
            if p.dom.tgt(a) != r:
                continue
            for b in p.cod.sorted_arrows():
                if p.cod.src(b) != s:
                    continue
                one = p.right_action[(b, p.left_action[(a, h)])]
                two = p.left_action[(a, p.right_action[(b, h)])]
                if one != two:
                    witnesses.append({"law": "profunctor.action-commute", "a": a, "b": b, "het": h})
    return from_witnesses("profunctor-laws", witnesses)


def opposite_profunctor(p: FinProfunctor) -> FinProfunctor:
    """Swap variance: het ids survive, the two action tables trade places."""
    name = p.name[:-3] if p.name.endswith("^op") else p.name + "^op"
    return FinProfunctor(
        name,
        opposite_category(p.cod),
        opposite_category(p.dom),
        {h: (s, r) for h, (r, s) in p.hets.items()},
        dict(p.right_action),
        dict(p.left_action),
    )


def pulled_het(h: str, r: str, s: str) -> str:
    """Id of the het h seen in cell (r, s) of a pullback profunctor."""
    return f"{h}@{r}|{s}"


def _is_identity_functor(f: FinFunctor) -> bool:
    return (
        f.dom == f.cod
        and all(k == v for k, v in f.object_map.items())
        and all(k == v for k, v in f.arrow_map.items())
    )


def pullback_id_rule(f: FinFunctor, g: FinFunctor):
    """How het ids are renamed in a pullback along (f, g).

    Along identities the pullback is literally the original profunctor, so ids
    survive unchanged; otherwise one het may land in several cells and ids are
    tagged with the cell.
    """
    if _is_identity_functor(f) and _is_identity_functor(g):
        return lambda h, r, s: h
    return pulled_het


def pullback_profunctor(p: FinProfunctor, f: FinFunctor, g: FinFunctor) -> FinProfunctor:
    """Reindex: cell (r', s') holds the hets of p at (f r', g s')."""
    if f.cod != p.dom or g.cod != p.cod:
        raise Mismatch("pullback functors must land in the profunctor's categories")
    rename = pullback_id_rule(f, g)
    hets = {}
    origin = {}
    for r in f.dom.objects:
        for s in g.dom.objects:
            for h in p.cell(f.object_map[r], g.object_map[s]):
                hid = rename(h, r, s)
                hets[hid] = (r, s)
                origin[hid] = h
    left, right = {}, {}
    for hid, (r, s) in hets.items():
        h = origin[hid]
        for a in f.dom.arrows:
            if f.dom.tgt(a) == r:
                left[(a, hid)] = rename(p.lact(f.arrow_map[a], h), f.dom.src(a), s)
        for b in g.dom.arrows:
            if g.dom.src(b) == s:
                right[(b, hid)] = rename(p.ract(g.arrow_map[b], h), r, g.dom.tgt(b))
    return FinProfunctor(f"{p.name}({f.name},{g.name})", f.dom, g.dom, hets, left, right)


@dataclass(frozen=True, eq=False)
class ProfNatTrans:
    name: str
    dom: FinProfunctor
    cod: FinProfunctor
    components: dict  # het of dom -> het of cod, cellwise

    def __eq__(self, other):
        if not isinstance(other, ProfNatTrans):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.components == other.components

    def __call__(self, h: str) -> str:
        return self.components[h]


def identity_prof_nat(p: FinProfunctor) -> ProfNatTrans:
    return ProfNatTrans(f"id_{p.name}", p, p, {h: h for h in p.hets})


def compose_prof_nat(x: ProfNatTrans, y: ProfNatTrans) -> ProfNatTrans:
    """Vertical composite x after y."""
    if y.cod != x.dom:
        raise Mismatch("vertical composite of profunctor transformations: boundary mismatch")
    return ProfNatTrans(f"{x.name}.{y.name}", y.dom, x.cod, {h: x.components[y.components[h]] for h in y.components})


def validate_prof_nat_trans(t: ProfNatTrans) -> VerificationReport:
    if t.dom.dom != t.cod.dom or t.dom.cod != t.cod.cod:
        raise MalformedDocument(f"transformation {t.name} is not between parallel profunctors")
    for h in t.dom.hets:
        if h not in t.components:
            raise MalformedDocument(f"transformation {t.name} misses het {h}")
        out = t.components[h]
        if out not in t.cod.hets or t.cod.hets[out] != t.dom.hets[h]:
            raise MalformedDocument(f"component at {h} leaves its cell")
    witnesses = []
    for (a, h), out in sorted(t.dom.left_action.items()):
        if t.components[out] != t.cod.left_action[(a, t.components[h])]:
            witnesses.append({"law": "prof_nat.naturality", "side": "left", "arrow": a, "het": h})
    for (b, h), out in sorted(t.dom.right_action.items()):
        if t.components[out] != t.cod.right_action[(b, t.components[h])]:
            witnesses.append({"law": "prof_nat.naturality", "side": "right", "arrow": b, "het": h})
    return from_witnesses("prof-nat-laws", witnesses)


def is_iso_prof_nat(t: ProfNatTrans) -> bool:
    """Natural and bijective on every cell."""
    if not validate_prof_nat_trans(t).passed:
        return False
    for r in t.dom.dom.objects:
        for s in t.dom.cod.objects:
            src_cell = t.dom.cell(r, s)
            images = {t.components[h] for h in src_cell}
            if len(images) != len(src_cell) or images != set(t.cod.cell(r, s)):
                return False
    return True


def pullback_transformation(theta: ProfNatTrans, alpha, beta) -> ProfNatTrans:
    """theta(alpha, beta): theta.dom(f2, g1) -> theta.cod(f1, g2).

    alpha: f1 -> f2 between functors into theta's domain category;
    beta: g1 -> g2 between functors into theta's codomain category.
    """
    if alpha.dom.cod != theta.dom.dom:
        raise Mismatch("alpha must transform functors into the profunctor domain")
    if beta.dom.cod != theta.dom.cod:
        raise Mismatch("beta must transform functors into the profunctor codomain")
    m, n = theta.dom, theta.cod
    dom = pullback_profunctor(m, alpha.cod, beta.dom)
    cod = pullback_profunctor(n, alpha.dom, beta.cod)
    rename_dom = pullback_id_rule(alpha.cod, beta.dom)
    rename_cod = pullback_id_rule(alpha.dom, beta.cod)
    comps = {}
    for r in alpha.dom.dom.objects:
        for s in beta.dom.dom.objects:
            for h in m.cell(alpha.cod.object_map[r], beta.dom.object_map[s]):
                moved = m.lact(alpha.components[r], m.ract(beta.components[s], h))
                comps[rename_dom(h, r, s)] = rename_cod(theta.components[moved], r, s)
    return ProfNatTrans(f"{theta.name}({alpha.name},{beta.name})", dom, cod, comps)


def square_commutes(h: str, h2: str, a: str, b: str, p: FinProfunctor) -> bool:
    """Heteromorphic square with top h: r -> s, bottom h2: r' -> s',
    left a: r -> r', right b: s -> s'; commutes iff a*(h2) = b_*(h)."""
    r, s = p.hets[h]
    r2, s2 = p.hets[h2]
    if (p.dom.src(a), p.dom.tgt(a)) != (r, r2):
        raise Mismatch(f"arrow {a} does not run {r} -> {r2}")
    if (p.cod.src(b), p.cod.tgt(b)) != (s, s2):
        raise Mismatch(f"arrow {b} does not run {s} -> {s2}")
    return p.lact(a, h2) == p.ract(b, h)


def is_monic_hetero(h: str, p: FinProfunctor, polarity: str = "monic") -> bool:
    """Monic: parallel arrows into the source acting equally must be equal."""
    if polarity == "epic":
        return is_monic_hetero(h, opposite_profunctor(p), "monic")
    r = p.src(h)
    for r2 in p.dom.objects:
        arrows = p.dom.hom(r2, r)
        for i, a in enumerate(arrows):
            for b in arrows[i + 1:]:
                if p.lact(a, h) == p.lact(b, h):
                    return False
    return True


def is_limit(h: str, p: FinProfunctor, polarity: str = "limit") -> bool:
    """Limit: pulling h back bijects R(r', r) with the cell H(r', s) for all r'."""
    if polarity == "colimit":
        return is_limit(h, opposite_profunctor(p), "limit")
    r, s = p.hets[h]
    for r2 in p.dom.objects:
        arrows = p.dom.hom(r2, r)
        images = [p.lact(a, h) for a in arrows]
        if len(set(images)) != len(images):
            return False
        if set(images) != set(p.cell(r2, s)):
            return False
    return True


def limits_of(s: str, p: FinProfunctor, polarity: str = "limit") -> list:
    """All (object, het) pairs exhibiting s as convergent; [] when it is not."""
    if polarity == "colimit":
        return limits_of(s, opposite_profunctor(p), "limit")
    if s not in p.cod.objects:
        raise Mismatch(f"{s} is not an object of {p.cod.name}")
    out = []
    for r in sorted(p.dom.objects):
        for h in p.cell(r, s):
            if is_limit(h, p):
                out.append((r, h))
    return out


@dataclass(frozen=True)
class LimitAssignment:
    base: FinProfunctor
    polarity: str
    chosen: dict  # convergent object -> (object, het)


def auto_limit_assignment(p: FinProfunctor, polarity: str = "limit") -> LimitAssignment:
    """Choose the lexicographically least (object, het) pair per convergent object.

    The choice is an artifact convention, not canonical; reports that consume
    it say so.
    """
    side = p.cod if polarity == "limit" else p.dom
    chosen = {}
    for s in sorted(side.objects):
        found = limits_of(s, p, polarity)
        if found:
            chosen[s] = found[0]
    return LimitAssignment(p, polarity, chosen)


def validate_assignment(ass: LimitAssignment) -> VerificationReport:
    witnesses = []
    for s, (r, h) in sorted(ass.chosen.items()):
        if not is_limit(h, ass.base, ass.polarity):
            witnesses.append({"law": "assignment.not-a-limit", "object": s, "het": h})
    return from_witnesses("limit-assignment", witnesses, notes="auto-choice is lexicographic")


def limit_functor(p: FinProfunctor, sigma: FinFunctor, chosen: dict) -> FinFunctor:
    """Extend a pointwise choice of limits along sigma: C -> S to a functor C -> R.

    For each arrow a: c' -> c the image is the unique arrow q with
    q*(lambda_c) = sigma(a)_*(lambda_c'); existence and uniqueness come from
    universality of the chosen hets.
    """
    if sigma.cod != p.cod:
        raise Mismatch("sigma must land in the profunctor codomain")
    for c in sigma.dom.objects:
        if c not in chosen:
            raise NotALimit(f"no limit chosen for {c}")
        r, h = chosen[c]
        if h not in p.hets or p.hets[h] != (r, sigma.object_map[c]):
            raise NotALimit(f"chosen pair for {c} is not a het into sigma({c})")
        if not is_limit(h, p):
            raise NotALimit(f"chosen het {h} for {c} fails the universal property")
    object_map = {c: chosen[c][0] for c in sigma.dom.objects}
    arrow_map = {}
    for a in sigma.dom.arrows:
        c1, c = sigma.dom.arrows[a]
        r1, lam1 = chosen[c1]
        r, lam = chosen[c]
        want = p.ract(sigma.arrow_map[a], lam1)
        hits = [q for q in p.dom.hom(r1, r) if p.lact(q, lam) == want]
        assert len(hits) == 1, f"universality must force exactly one arrow, got {hits}"
        arrow_map[a] = hits[0]
    return FinFunctor(f"lim[{p.name}]", sigma.dom, p.dom, object_map, arrow_map)


def representing_check(p: FinProfunctor, polarity: str = "representable"):
    """Return (functor, iso) when every object converges, else None.

    For the representable side the functor is the limit functor and the iso
    has components q |-> q*(lambda_s); the corepresentable side is the exact
    op-dual computation.
    """
    if polarity == "corepresentable":
        got = representing_check(opposite_profunctor(p), "representable")
        if got is None:
            return None
        rho_op, iso_op = got
        sigma = FinFunctor(
            rho_op.name,
            opposite_category(rho_op.dom),
            opposite_category(rho_op.cod),
            dict(rho_op.object_map),
            dict(rho_op.arrow_map),
        )
        iso = ProfNatTrans(
            iso_op.name,
            opposite_profunctor(iso_op.dom),
            opposite_profunctor(iso_op.cod),
            dict(iso_op.components),
        )
        return sigma, iso
    chosen = {}
    for s in sorted(p.cod.objects):
        found = limits_of(s, p)
        if not found:
            return None
        chosen[s] = found[0]
    rho = limit_functor(p, identity_functor(p.cod), chosen)
    hom_r = hom_profunctor(p.dom)
    dom = pullback_profunctor(hom_r, identity_functor(p.dom), rho)
    comps = {}
    for r in p.dom.objects:
        for s in p.cod.objects:
            for q in p.dom.hom(r, rho.object_map[s]):
                comps[pulled_het(q, r, s)] = p.lact(q, chosen[s][1])
    iso = ProfNatTrans(f"repr[{p.name}]", dom, p, comps)
    return rho, iso


def end_of(k: FinProfunctor) -> list:
    """All wedges of an endo-distributor: families k_c in K(c,c) with
    a*(k_c') = a_*(k_c) for every arrow a: c -> c'."""
    if k.dom != k.cod:
        raise Mismatch("end_of needs a profunctor from a category to itself")
    c = k.dom
    objs = c.sorted_objects()
    out = []

    def consistent(fam) -> bool:
        for a in c.non_identities():
            x, y = c.arrows[a]
            if x in fam and y in fam:
                if k.lact(a, fam[y]) != k.ract(a, fam[x]):
                    return False
        return True

    def assign(i, fam):
        if i == len(objs):
            out.append(dict(fam))
            return
        o = objs[i]
        for h in k.cell(o, o):
            fam[o] = h
            if consistent(fam):
                assign(i + 1, fam)
            del fam[o]

    assign(0, {})
    return sorted(out, key=lambda fam: tuple(sorted(fam.items())))


@dataclass(frozen=True, eq=False)
class ProfMorphism:
    """A morphism of profunctors (rho, sigma, eta).

    The het map is stored directly into the codomain profunctor; the official
    transformation into the pullback is available as .eta()."""

    dom_prof: FinProfunctor
    cod_prof: FinProfunctor
    rho: FinFunctor
    sigma: FinFunctor
    het_map: dict  # het of dom_prof at (r,s) -> het of cod_prof at (rho r, sigma s)

    def eta(self) -> ProfNatTrans:
        cod = pullback_profunctor(self.cod_prof, self.rho, self.sigma)
        rename = pullback_id_rule(self.rho, self.sigma)
        comps = {
            h: rename(self.het_map[h], r, s) for h, (r, s) in self.dom_prof.hets.items()
        }
        return ProfNatTrans("eta", self.dom_prof, cod, comps)


def identity_morphism(p: FinProfunctor) -> ProfMorphism:
    return ProfMorphism(p, p, identity_functor(p.dom), identity_functor(p.cod), {h: h for h in p.hets})


def validate_morphism(m: ProfMorphism) -> VerificationReport:
    if m.rho.dom != m.dom_prof.dom or m.rho.cod != m.cod_prof.dom:
        raise Mismatch("rho boundaries disagree with the profunctors")
    if m.sigma.dom != m.dom_prof.cod or m.sigma.cod != m.cod_prof.cod:
        raise Mismatch("sigma boundaries disagree with the profunctors")
    for h, (r, s) in m.dom_prof.hets.items():
        if h not in m.het_map:
            raise MalformedDocument(f"morphism misses het {h}")
        out = m.het_map[h]
        want = (m.rho.object_map[r], m.sigma.object_map[s])
        if out not in m.cod_prof.hets or m.cod_prof.hets[out] != want:
            raise MalformedDocument(f"image of {h} is not in cell {want}")
    witnesses = []
    for (a, h), out in sorted(m.dom_prof.left_action.items()):
        if m.het_map[out] != m.cod_prof.lact(m.rho.arrow_map[a], m.het_map[h]):
            witnesses.append({"law": "morphism.naturality", "side": "left", "arrow": a, "het": h})
    for (b, h), out in sorted(m.dom_prof.right_action.items()):
        if m.het_map[out] != m.cod_prof.ract(m.sigma.arrow_map[b], m.het_map[h]):
            witnesses.append({"law": "morphism.naturality", "side": "right", "arrow": b, "het": h})
    return from_witnesses("morphism-laws", witnesses)


def opposite_functor(f: FinFunctor) -> FinFunctor:
    return FinFunctor(f.name, opposite_category(f.dom), opposite_category(f.cod), dict(f.object_map), dict(f.arrow_map))


def opposite_morphism(m: ProfMorphism) -> ProfMorphism:
    return ProfMorphism(
        opposite_profunctor(m.dom_prof),
        opposite_profunctor(m.cod_prof),
        opposite_functor(m.sigma),
        opposite_functor(m.rho),
        dict(m.het_map),
    )


def wedge_het(rho_id: str, sigma_id: str, fam: dict) -> str:
    return f"w:{rho_id}>{sigma_id}[" + ",".join(f"{c}:{h}" for c, h in sorted(fam.items())) + "]"


@dataclass(frozen=True)
class PowerResult:
    prof: FinProfunctor
    evaluations: dict  # object of C -> ProfMorphism
    dom_fc: FunctorCategory  # R^C
    cod_fc: FunctorCategory  # S^C
    families: dict  # het id -> (rho id, sigma id, {c: het of base})


def power_profunctor(p: FinProfunctor, c: FinCategory, budget: int | None = None) -> PowerResult:
    """H^C: cells are natural het families (wedges of the reindexed profunctor),
    actions are componentwise, evaluation morphisms are returned per object."""
    dom_fc = functor_category(c, p.dom, budget)
    cod_fc = functor_category(c, p.cod, budget)
    meter = WorkMeter(budget, what=f"power profunctor {p.name}^{c.name}")
    objs = c.sorted_objects()

    hets = {}
    families = {}
    for rho_id, rho in dom_fc.functors.items():
        for sigma_id, sigma in cod_fc.functors.items():
            def consistent(fam) -> bool:
                for a in c.non_identities():
                    x, y = c.arrows[a]
                    if x in fam and y in fam:
                        if p.lact(rho.arrow_map[a], fam[y]) != p.ract(sigma.arrow_map[a], fam[x]):
                            return False
                return True

            def assign(i, fam):
                meter.tick()
                if i == len(objs):
                    hid = wedge_het(rho_id, sigma_id, fam)
                    hets[hid] = (rho_id, sigma_id)
                    families[hid] = (rho_id, sigma_id, dict(fam))
                    return
                o = objs[i]
                for h in p.cell(rho.object_map[o], sigma.object_map[o]):
                    fam[o] = h
                    if consistent(fam):
                        assign(i + 1, fam)
                    del fam[o]

            assign(0, {})

    left, right = {}, {}
    for hid, (rho_id, sigma_id, fam) in families.items():
        for aid, (a_dom, a_cod) in dom_fc.cat.arrows.items():
            if a_cod != rho_id:
                continue
            meter.tick()
            alpha = dom_fc.transformations[aid]
            new = {o: p.lact(alpha.components[o], fam[o]) for o in objs}
            left[(aid, hid)] = wedge_het(a_dom, sigma_id, new)
        for bid, (b_dom, b_cod) in cod_fc.cat.arrows.items():
            if b_dom != sigma_id:
                continue
            meter.tick()
            beta = cod_fc.transformations[bid]
            new = {o: p.ract(beta.components[o], fam[o]) for o in objs}
            right[(bid, hid)] = wedge_het(rho_id, b_cod, new)

    power = FinProfunctor(f"{p.name}^{c.name}", dom_fc.cat, cod_fc.cat, hets, left, right)

    evaluations = {}
    for o in objs:
        rho_ev = FinFunctor(
            f"ev_{o}", dom_fc.cat, p.dom,
            {fid: f.object_map[o] for fid, f in dom_fc.functors.items()},
            {nid: t.components[o] for nid, t in dom_fc.transformations.items()},
        )
        sigma_ev = FinFunctor(
            f"ev_{o}", cod_fc.cat, p.cod,
            {fid: f.object_map[o] for fid, f in cod_fc.functors.items()},
            {nid: t.components[o] for nid, t in cod_fc.transformations.items()},
        )
        het_map = {hid: fam[o] for hid, (_, _, fam) in families.items()}
        evaluations[o] = ProfMorphism(power, p, rho_ev, sigma_ev, het_map)

    return PowerResult(power, evaluations, dom_fc, cod_fc, {h: f for h, f in families.items()})
