"""Indexed categories, indexed functors and indexed profunctors over a finite
2-category, with exhaustive validators for every axiom.

1-cells and 2-cells are keyed by (source 0-cell, target 0-cell, cell id)
triples, since ids are only unique inside their hom-category. Each H_f is an
explicit flat het table into H_Y; the official transformation into the
pullback H_Y(R_f, S_f) is derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedDocument, Mismatch
from .fincat import (
    FinCategory,
    FinFunctor,
    FinNatTrans,
    compose_functor,
    compose_nat,
    identity_functor,
    identity_nat,
    pair_arrow,
    pair_obj,
)
from .prof import (
    FinProfunctor,
    ProfMorphism,
    ProfNatTrans,
    compose_prof_nat,
    identity_prof_nat,
    pullback_id_rule,
    pullback_profunctor,
    pullback_transformation,
)
from .report import VerificationReport, from_witnesses, merge
from .twocat import FinTwoCategory, validate_two_category


@dataclass(frozen=True, eq=False)
class IndexedCategory:
    name: str
    base: FinTwoCategory
    at0: dict  # 0-cell -> FinCategory
    at1: dict  # (X, Y, 1-cell) -> FinFunctor
    at2: dict  # (X, Y, 2-cell) -> FinNatTrans

    def __eq__(self, other):
        if not isinstance(other, IndexedCategory):
            return NotImplemented
        return (
            self.base == other.base
            and self.at0 == other.at0
            and self.at1 == other.at1
            and self.at2 == other.at2
        )

    def functor(self, x: str, y: str, f: str) -> FinFunctor:
        return self.at1[(x, y, f)]

    def nat(self, x: str, y: str, theta: str) -> FinNatTrans:
        return self.at2[(x, y, theta)]


def inclusion_indexed_category(base: FinTwoCategory, at0: dict, at1: dict, at2: dict) -> IndexedCategory:
    """Package a concrete interpretation (0-cells as categories) as indexing."""
    return IndexedCategory("inclusion", base, at0, at1, at2)


def _structural_icat(r: IndexedCategory) -> None:
    t = r.base
    for x in t.zero_cells:
        if x not in r.at0:
            raise MalformedDocument(f"indexed category misses 0-cell {x}")
    for x in t.zero_cells:
        for y in t.zero_cells:
            for f in t.one_cells(x, y):
                key = (x, y, f)
                if key not in r.at1:
                    raise MalformedDocument(f"indexed category misses 1-cell {key}")
                ff = r.at1[key]
                if ff.dom != r.at0[x] or ff.cod != r.at0[y]:
                    raise MalformedDocument(f"functor at {key} has wrong boundaries")
            for th in t.two_cells(x, y):
                key = (x, y, th)
                if key not in r.at2:
                    raise MalformedDocument(f"indexed category misses 2-cell {key}")
                nt = r.at2[key]
                f, g = t.hom[(x, y)].arrows[th]
                if nt.dom != r.at1[(x, y, f)] or nt.cod != r.at1[(x, y, g)]:
                    raise MalformedDocument(f"nat trans at {key} has wrong boundaries")


def validate_indexed_category(r: IndexedCategory) -> VerificationReport:
    """Strict 2-functoriality, exhaustively."""
    _structural_icat(r)
    t = r.base
    witnesses = []
    for x in sorted(t.zero_cells):
        if r.at1[(x, x, t.unit[x])] != identity_functor(r.at0[x]):
            witnesses.append({"law": "indexed_category.identity-1cell", "at": x})
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            for z in sorted(t.zero_cells):
                for f in t.one_cells(x, y):
                    for g in t.one_cells(y, z):
                        gf = t.compose1(x, y, z, g, f)
                        if r.at1[(x, z, gf)] != compose_functor(r.at1[(y, z, g)], r.at1[(x, y, f)]):
                            witnesses.append(
                                {"law": "indexed_category.composition-1cell", "g": g, "f": f}
                            )
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            h = t.hom[(x, y)]
            for f in h.sorted_objects():
                if r.at2[(x, y, h.identity[f])] != identity_nat(r.at1[(x, y, f)]):
                    witnesses.append({"law": "indexed_category.identity-2cell", "one_cell": f})
            for (b, a), ba in sorted(h.compose.items()):
                got = r.at2[(x, y, ba)]
                want = compose_nat("vertical", r.at2[(x, y, b)], r.at2[(x, y, a)])
                if got != want:
                    witnesses.append({"law": "indexed_category.vertical-2cell", "b": b, "a": a})
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            for z in sorted(t.zero_cells):
                for b in t.two_cells(y, z):
                    for a in t.two_cells(x, y):
                        ba = t.compose2h(x, y, z, b, a)
                        got = r.at2[(x, z, ba)]
                        want = compose_nat("horizontal", r.at2[(y, z, b)], r.at2[(x, y, a)])
                        if got != want:
                            witnesses.append({"law": "indexed_category.horizontal-2cell", "b": b, "a": a})
    return from_witnesses("indexed-category-laws", witnesses)


@dataclass(frozen=True, eq=False)
class IndexedFunctor:
    name: str
    dom: IndexedCategory
    cod: IndexedCategory
    atx: dict  # 0-cell -> FinFunctor dom.at0[X] -> cod.at0[X]

    def __eq__(self, other):
        if not isinstance(other, IndexedFunctor):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.atx == other.atx


def identity_indexed_functor(r: IndexedCategory) -> IndexedFunctor:
    return IndexedFunctor("id", r, r, {x: identity_functor(r.at0[x]) for x in r.base.zero_cells})


def validate_indexed_functor(k: IndexedFunctor) -> VerificationReport:
    """Strict naturality in 0-cells plus compatibility with 2-cells."""
    if k.dom.base is not k.cod.base and k.dom.base != k.cod.base:
        raise Mismatch("indexed functor needs dom and cod over the same base")
    t = k.dom.base
    for x in t.zero_cells:
        if x not in k.atx:
            raise MalformedDocument(f"indexed functor misses 0-cell {x}")
        kx = k.atx[x]
        if kx.dom != k.dom.at0[x] or kx.cod != k.cod.at0[x]:
            raise MalformedDocument(f"component at {x} has wrong boundaries")
    witnesses = []
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            for f in t.one_cells(x, y):
                lhs = compose_functor(k.cod.at1[(x, y, f)], k.atx[x])
                rhs = compose_functor(k.atx[y], k.dom.at1[(x, y, f)])
                if lhs != rhs:
                    witnesses.append({"law": "indexed_functor.naturality-1cell", "one_cell": f})
            for th in t.two_cells(x, y):
                lhs = compose_nat("whisker_left", k.atx[y], k.dom.at2[(x, y, th)])
                rhs = compose_nat("whisker_right", k.cod.at2[(x, y, th)], k.atx[x])
                if lhs != rhs:
                    witnesses.append({"law": "indexed_functor.naturality-2cell", "two_cell": th})
    return from_witnesses("indexed-functor-laws", witnesses)


@dataclass(frozen=True, eq=False)
class IndexedProfunctor:
    name: str
    dom: IndexedCategory  # R
    cod: IndexedCategory  # S
    at0: dict  # 0-cell -> FinProfunctor R_X -> S_X
    atf: dict  # (X, Y, 1-cell f) -> flat het table H_X -> H_Y

    def __eq__(self, other):
        if not isinstance(other, IndexedProfunctor):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.at0 == other.at0
            and self.atf == other.atf
        )

    @property
    def base(self) -> FinTwoCategory:
        return self.dom.base

    def het_map(self, x: str, y: str, f: str) -> dict:
        return self.atf[(x, y, f)]

    def transformation(self, x: str, y: str, f: str) -> ProfNatTrans:
        """H_f in its official type H_X -> H_Y(R_f, S_f)."""
        rf = self.dom.at1[(x, y, f)]
        sf = self.cod.at1[(x, y, f)]
        hx, hy = self.at0[x], self.at0[y]
        cod = pullback_profunctor(hy, rf, sf)
        rename = pullback_id_rule(rf, sf)
        table = self.atf[(x, y, f)]
        comps = {h: rename(table[h], r, s) for h, (r, s) in hx.hets.items()}
        return ProfNatTrans(f"H_{f}", hx, cod, comps)

    def morphism(self, x: str, y: str, f: str) -> ProfMorphism:
        """The morphism of profunctors (R_f, S_f, H_f) attached to a 1-cell."""
        key = (x, y, f)
        if key not in self.atf:
            raise Mismatch(f"1-cell {key} not present in the base")
        return ProfMorphism(
            self.at0[x], self.at0[y],
            self.dom.at1[key], self.cod.at1[key],
            dict(self.atf[key]),
        )


def induced_profunctor_morphism(h: IndexedProfunctor, x: str, y: str, f: str) -> ProfMorphism:
    return h.morphism(x, y, f)


def _structural_ip(ip: IndexedProfunctor) -> None:
    t = ip.base
    if ip.cod.base != t:
        raise Mismatch("indexed profunctor needs both sides over the same base")
    for x in t.zero_cells:
        if x not in ip.at0:
            raise MalformedDocument(f"indexed profunctor misses 0-cell {x}")
        hx = ip.at0[x]
        if hx.dom != ip.dom.at0[x] or hx.cod != ip.cod.at0[x]:
            raise MalformedDocument(f"profunctor at {x} has wrong boundaries")
    for x in t.zero_cells:
        for y in t.zero_cells:
            for f in t.one_cells(x, y):
                key = (x, y, f)
                if key not in ip.atf:
                    raise MalformedDocument(f"indexed profunctor misses 1-cell table {key}")
                rf, sf = ip.dom.at1[key], ip.cod.at1[key]
                hx, hy = ip.at0[x], ip.at0[y]
                table = ip.atf[key]
                for h, (r, s) in hx.hets.items():
                    if h not in table:
                        raise MalformedDocument(f"table at {key} misses het {h}")
                    out = table[h]
                    want = (rf.object_map[r], sf.object_map[s])
                    if out not in hy.hets or hy.hets[out] != want:
                        raise MalformedDocument(f"table at {key} sends {h} outside cell {want}")


def _naturality_witnesses(ip: IndexedProfunctor) -> list:
    """Each H_f must be natural against the actions of R_X and S_X."""
    t = ip.base
    out = []
    for (x, y, f), table in sorted(ip.atf.items()):
        rf, sf = ip.dom.at1[(x, y, f)], ip.cod.at1[(x, y, f)]
        hx, hy = ip.at0[x], ip.at0[y]
        for (a, h), moved in sorted(hx.left_action.items()):
            if table[moved] != hy.lact(rf.arrow_map[a], table[h]):
                out.append({"law": "indexed_profunctor.naturality", "one_cell": f, "arrow": a, "het": h})
        for (b, h), moved in sorted(hx.right_action.items()):
            if table[moved] != hy.ract(sf.arrow_map[b], table[h]):
                out.append({"law": "indexed_profunctor.naturality", "one_cell": f, "arrow": b, "het": h})
    return out


def _functoriality_witnesses(ip: IndexedProfunctor) -> list:
    t = ip.base
    out = []
    for x in sorted(t.zero_cells):
        table = ip.atf[(x, x, t.unit[x])]
        for h in ip.at0[x].sorted_hets():
            if table[h] != h:
                out.append({"law": "indexed_profunctor.unit", "at": x, "het": h})
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            for z in sorted(t.zero_cells):
                for f in t.one_cells(x, y):
                    for g in t.one_cells(y, z):
                        gf = t.compose1(x, y, z, g, f)
                        t_gf = ip.atf[(x, z, gf)]
                        t_f, t_g = ip.atf[(x, y, f)], ip.atf[(y, z, g)]
                        for h in ip.at0[x].sorted_hets():
                            if t_gf[h] != t_g[t_f[h]]:
                                out.append(
                                    {"law": "indexed_profunctor.composition", "g": g, "f": f, "het": h}
                                )
    return out


def check_extranaturality_pointwise(ip: IndexedProfunctor) -> VerificationReport:
    """The heteromorphic square at each 2-cell theta: f -> f' and het h:
    (R_theta at r) pulled against H_f'(h) equals (S_theta at s) pushed on H_f(h)."""
    t = ip.base
    witnesses = []
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            h_cat = t.hom[(x, y)]
            hy = ip.at0[y]
            for theta in h_cat.sorted_arrows():
                f, f2 = h_cat.arrows[theta]
                r_theta = ip.dom.at2[(x, y, theta)]
                s_theta = ip.cod.at2[(x, y, theta)]
                t_f, t_f2 = ip.atf[(x, y, f)], ip.atf[(x, y, f2)]
                for h, (r, s) in sorted(ip.at0[x].hets.items()):
                    lhs = hy.lact(r_theta.components[r], t_f2[h])
                    rhs = hy.ract(s_theta.components[s], t_f[h])
                    if lhs != rhs:
                        witnesses.append(
                            {"law": "indexed_profunctor.extranaturality", "two_cell": theta, "het": h}
                        )
    return from_witnesses("extranaturality-pointwise", witnesses)


def check_extranaturality_transformation(ip: IndexedProfunctor) -> VerificationReport:
    """The axiom at transformation level: H_Y(R_f, S_theta) . H_f equals
    H_Y(R_theta, S_f') . H_f', compared as whole pullback transformations."""
    t = ip.base
    witnesses = []
    for x in sorted(t.zero_cells):
        for y in sorted(t.zero_cells):
            h_cat = t.hom[(x, y)]
            hy = ip.at0[y]
            id_hy = identity_prof_nat(hy)
            for theta in h_cat.sorted_arrows():
                f, f2 = h_cat.arrows[theta]
                rf = ip.dom.at1[(x, y, f)]
                sf2 = ip.cod.at1[(x, y, f2)]
                r_theta = ip.dom.at2[(x, y, theta)]
                s_theta = ip.cod.at2[(x, y, theta)]
                lhs = compose_prof_nat(
                    pullback_transformation(id_hy, identity_nat(rf), s_theta),
                    ip.transformation(x, y, f),
                )
                rhs = compose_prof_nat(
                    pullback_transformation(id_hy, r_theta, identity_nat(sf2)),
                    ip.transformation(x, y, f2),
                )
                if lhs != rhs:
                    witnesses.append(
                        {"law": "indexed_profunctor.extranaturality", "two_cell": theta, "at": f"{x}>{y}"}
                    )
    return from_witnesses("extranaturality-transformation", witnesses)


def validate_indexed_profunctor(ip: IndexedProfunctor) -> VerificationReport:
    """Unit and composition laws, per-1-cell naturality, and extranaturality,
    each checked componentwise on every heteromorphism."""
    _structural_ip(ip)
    witnesses = []
    witnesses.extend(_naturality_witnesses(ip))
    witnesses.extend(_functoriality_witnesses(ip))
    reports = [
        from_witnesses("indexed-profunctor-functoriality", witnesses),
        check_extranaturality_pointwise(ip),
    ]
    return merge("indexed-profunctor-laws", reports)


def validate_all(ip: IndexedProfunctor) -> VerificationReport:
    """Staged validation: base, indexed categories, then profunctor laws.
    A broken earlier stage short-circuits the later ones."""
    base_report = validate_two_category(ip.base)
    if not base_report.passed:
        return merge("indexed-profunctor-staged", [base_report], notes="base 2-category failed")
    for side in (ip.dom, ip.cod):
        r = validate_indexed_category(side)
        if not r.passed:
            return merge("indexed-profunctor-staged", [r], notes=f"indexed category {side.name} failed")
    return merge("indexed-profunctor-staged", [validate_indexed_profunctor(ip)])
