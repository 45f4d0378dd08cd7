"""Finite strict 2-categories as validated tables, plus 2-categorical
adjunctions with their triangle identities.

Hom-categories are ordinary FinCategory values (objects are 1-cells, arrows
are 2-cells) and composition across 0-cells is a FinFunctor out of a product
category, so functoriality of composition is exactly the interchange law.
Whiskering is derived from composition with identity 2-cells, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedDocument, Mismatch
from .fincat import (
    FinCategory,
    FinFunctor,
    pair_arrow,
    pair_obj,
    product_category,
    validate_category,
    validate_functor,
)
from .report import VerificationReport, from_witnesses, merge


@dataclass(frozen=True, eq=False)
class FinTwoCategory:
    name: str
    zero_cells: frozenset
    hom: dict  # (X, Y) -> FinCategory of 1-cells and 2-cells
    comp: dict  # (X, Y, Z) -> FinFunctor hom(Y,Z) x hom(X,Y) -> hom(X,Z)
    unit: dict  # X -> identity 1-cell in hom(X,X)
    terminal: str | None = None

    def __eq__(self, other):
        if not isinstance(other, FinTwoCategory):
            return NotImplemented
        return (
            self.zero_cells == other.zero_cells
            and self.hom == other.hom
            and self.comp == other.comp
            and self.unit == other.unit
            and self.terminal == other.terminal
        )

    def one_cells(self, x: str, y: str) -> list:
        return self.hom[(x, y)].sorted_objects()

    def two_cells(self, x: str, y: str) -> list:
        return self.hom[(x, y)].sorted_arrows()

    def id2(self, x: str, y: str, f: str) -> str:
        """Identity 2-cell on the 1-cell f."""
        return self.hom[(x, y)].identity[f]

    def compose1(self, x: str, y: str, z: str, g: str, f: str) -> str:
        """The 1-cell g after f, for f: x -> y and g: y -> z."""
        c = self.comp[(x, y, z)]
        return c.object_map[pair_obj(g, f)]

    def compose2h(self, x: str, y: str, z: str, beta: str, alpha: str) -> str:
        """Horizontal composite of 2-cells beta (in hom(y,z)) and alpha (in hom(x,y))."""
        c = self.comp[(x, y, z)]
        return c.arrow_map[pair_arrow(self.hom[(y, z)], self.hom[(x, y)], beta, alpha)]

    def compose2v(self, x: str, y: str, beta: str, alpha: str) -> str:
        """Vertical composite beta after alpha inside hom(x,y)."""
        return self.hom[(x, y)].comp(beta, alpha)

    def whisker_post(self, x: str, y: str, z: str, g: str, alpha: str) -> str:
        """g * alpha for a 1-cell g: y -> z and a 2-cell alpha in hom(x,y)."""
        return self.compose2h(x, y, z, self.id2(y, z, g), alpha)

    def whisker_pre(self, x: str, y: str, z: str, beta: str, f: str) -> str:
        """beta * f for a 2-cell beta in hom(y,z) and a 1-cell f: x -> y."""
        return self.compose2h(x, y, z, beta, self.id2(x, y, f))

    def postcompose_functor(self, w: str, x: str, y: str, f: str) -> FinFunctor:
        """The functor hom(w,x) -> hom(w,y) given by composing with f: x -> y."""
        dom, cod = self.hom[(w, x)], self.hom[(w, y)]
        return FinFunctor(
            f"{f}*-",
            dom, cod,
            {r: self.compose1(w, x, y, f, r) for r in dom.objects},
            {t: self.whisker_post(w, x, y, f, t) for t in dom.arrows},
        )

    def precompose_functor(self, w: str, x: str, y: str, k: str) -> FinFunctor:
        """The functor hom(x,y) -> hom(w,y) given by composing with k: w -> x."""
        dom, cod = self.hom[(x, y)], self.hom[(w, y)]
        return FinFunctor(
            f"-*{k}",
            dom, cod,
            {r: self.compose1(w, x, y, r, k) for r in dom.objects},
            {t: self.whisker_pre(w, x, y, t, k) for t in dom.arrows},
        )


def _structural(t: FinTwoCategory) -> None:
    cells = sorted(t.zero_cells)
    for x in cells:
        for y in cells:
            if (x, y) not in t.hom:
                raise MalformedDocument(f"missing hom-category ({x},{y})")
    for x in cells:
        if x not in t.unit or t.unit[x] not in t.hom[(x, x)].objects:
            raise MalformedDocument(f"missing or dangling unit 1-cell at {x}")
    for x in cells:
        for y in cells:
            for z in cells:
                if (x, y, z) not in t.comp:
                    raise MalformedDocument(f"missing composition functor ({x},{y},{z})")
                c = t.comp[(x, y, z)]
                if c.dom != product_category(t.hom[(y, z)], t.hom[(x, y)]):
                    raise MalformedDocument(f"composition ({x},{y},{z}) has the wrong domain tables")
                if c.cod != t.hom[(x, z)]:
                    raise MalformedDocument(f"composition ({x},{y},{z}) has the wrong codomain tables")
    if t.terminal is not None and t.terminal not in t.zero_cells:
        raise MalformedDocument(f"terminal {t.terminal} is not a 0-cell")


def validate_two_category(t: FinTwoCategory) -> VerificationReport:
    """Hom-categories, composition functoriality (interchange), strict units
    and associativity on 1- and 2-cells, and the terminal designation."""
    _structural(t)
    cells = sorted(t.zero_cells)
    reports = []
    for x in cells:
        for y in cells:
            reports.append(validate_category(t.hom[(x, y)]))
    for x in cells:
        for y in cells:
            for z in cells:
                reports.append(validate_functor(t.comp[(x, y, z)]))

    witnesses = []
    for x in cells:
        for y in cells:
            h = t.hom[(x, y)]
            for f in h.sorted_objects():
                if t.compose1(x, x, y, f, t.unit[x]) != f or t.compose1(x, y, y, t.unit[y], f) != f:
                    witnesses.append({"law": "two_category.unit-1cell", "one_cell": f, "at": f"{x}>{y}"})
            for a in h.sorted_arrows():
                lhs = t.compose2h(x, x, y, a, t.id2(x, x, t.unit[x]))
                rhs = t.compose2h(x, y, y, t.id2(y, y, t.unit[y]), a)
                if lhs != a or rhs != a:
                    witnesses.append({"law": "two_category.unit-2cell", "two_cell": a, "at": f"{x}>{y}"})
    for w in cells:
        for x in cells:
            for y in cells:
                for z in cells:
                    for f in t.one_cells(w, x):
                        for g in t.one_cells(x, y):
                            for h in t.one_cells(y, z):
                                lhs = t.compose1(w, x, z, t.compose1(x, y, z, h, g), f)
                                rhs = t.compose1(w, y, z, h, t.compose1(w, x, y, g, f))
                                if lhs != rhs:
                                    witnesses.append(
                                        {"law": "two_category.assoc-1cell", "h": h, "g": g, "f": f}
                                    )
                    for a in t.two_cells(w, x):
                        for b in t.two_cells(x, y):
                            for c in t.two_cells(y, z):
                                lhs = t.compose2h(w, x, z, t.compose2h(x, y, z, c, b), a)
                                rhs = t.compose2h(w, y, z, c, t.compose2h(w, x, y, b, a))
                                if lhs != rhs:
                                    witnesses.append(
                                        {"law": "two_category.assoc-2cell", "c": c, "b": b, "a": a}
                                    )
    if t.terminal is not None:
        for x in cells:
            h = t.hom[(x, t.terminal)]
            if len(h.objects) != 1 or len(h.arrows) != 1:
                witnesses.append({"law": "two_category.terminal", "at": x})
    reports.append(from_witnesses("two-category-strictness", witnesses))
    return merge("two-category-laws", reports)


def bang(t: FinTwoCategory, x: str) -> str:
    """The unique 1-cell x -> terminal."""
    if t.terminal is None:
        raise Mismatch(f"{t.name} has no designated terminal 0-cell")
    cells = t.one_cells(x, t.terminal)
    if len(cells) != 1:
        raise MalformedDocument(f"hom({x},{t.terminal}) is not a singleton")
    return cells[0]


@dataclass(frozen=True)
class Adjunction:
    """1-cells f: x -> y and g: y -> x with unit and counit 2-cells."""

    x: str
    y: str
    f: str
    g: str
    eta: str  # 2-cell id_x -> g.f in hom(x,x)
    eps: str  # 2-cell f.g -> id_y in hom(y,y)


def check_adjunction(t: FinTwoCategory, a: Adjunction) -> VerificationReport:
    """Evaluate both triangle identities through the composition tables."""
    for cell, pair in ((a.f, (a.x, a.y)), (a.g, (a.y, a.x))):
        if pair not in t.hom or cell not in t.hom[pair].objects:
            raise Mismatch(f"1-cell {cell} not found in hom{pair}")
    hom_xx, hom_yy = t.hom[(a.x, a.x)], t.hom[(a.y, a.y)]
    if a.eta not in hom_xx.arrows:
        raise Mismatch(f"unit {a.eta} is not a 2-cell at ({a.x},{a.x})")
    if a.eps not in hom_yy.arrows:
        raise Mismatch(f"counit {a.eps} is not a 2-cell at ({a.y},{a.y})")
    gf = t.compose1(a.x, a.y, a.x, a.g, a.f)
    fg = t.compose1(a.y, a.x, a.y, a.f, a.g)
    if hom_xx.arrows[a.eta] != (t.unit[a.x], gf):
        raise Mismatch(f"unit must run id_{a.x} -> {gf}")
    if hom_yy.arrows[a.eps] != (fg, t.unit[a.y]):
        raise Mismatch(f"counit must run {fg} -> id_{a.y}")

    witnesses = []
    # (g * eps) . (eta * g) = id_g in hom(y, x)
    eta_g = t.compose2h(a.y, a.x, a.x, a.eta, t.id2(a.y, a.x, a.g))
    g_eps = t.compose2h(a.y, a.y, a.x, t.id2(a.y, a.x, a.g), a.eps)
    tri1 = t.compose2v(a.y, a.x, g_eps, eta_g)
    if tri1 != t.id2(a.y, a.x, a.g):
        witnesses.append({"law": "adjunction.triangle-g", "composite": tri1})
    # (eps * f) . (f * eta) = id_f in hom(x, y)
    f_eta = t.compose2h(a.x, a.x, a.y, t.id2(a.x, a.y, a.f), a.eta)
    eps_f = t.compose2h(a.x, a.y, a.y, a.eps, t.id2(a.x, a.y, a.f))
    tri2 = t.compose2v(a.x, a.y, eps_f, f_eta)
    if tri2 != t.id2(a.x, a.y, a.f):
        witnesses.append({"law": "adjunction.triangle-f", "composite": tri2})
    return from_witnesses("adjunction-triangles", witnesses)
