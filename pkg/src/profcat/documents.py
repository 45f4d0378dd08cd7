"""Canonical JSON documents for every kernel structure.

A file holds either one document (an object with a "kind" field) or a bundle
{"bundle": {name: document, ...}, "root": name}. Anywhere a sub-document is
expected, {"$ref": "<bundle-name-or-relative-path>"} may stand in for it.
Emission is canonical: sorted keys, sorted id arrays, two-space indentation,
one trailing newline; parse(emit(d)) is the identity and emit(parse(text))
canonicalizes well-formed input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DanglingRef, DocumentSyntaxError, SchemaError
from .fincat import FinCategory, FinFunctor, FinNatTrans, product_category
from .indexed import IndexedCategory, IndexedProfunctor, IndexedFunctor
from .prof import FinProfunctor, ProfNatTrans
from .report import VerificationReport
from .twocat import Adjunction, FinTwoCategory
from .examples import BuiltSub2Cat
from .indexed import inclusion_indexed_category

KINDS = (
    "category", "functor", "nat_trans", "profunctor", "prof_nat_trans",
    "two_category", "indexed_category", "indexed_functor",
    "indexed_profunctor", "adjunction", "report",
)


@dataclass(frozen=True)
class Document:
    kind: str
    value: object
    name: str = ""


# ---------------------------------------------------------------------------
# Schema plumbing

def _need(body, key, ptr, types=None):
    if not isinstance(body, dict):
        raise SchemaError("expected an object", ptr)
    if key not in body:
        raise SchemaError(f"missing key {key!r}", f"{ptr}/{key}")
    value = body[key]
    if types is not None and not isinstance(value, types):
        raise SchemaError(f"key {key!r} has the wrong type", f"{ptr}/{key}")
    return value


def _str_map(body, key, ptr):
    raw = _need(body, key, ptr, dict)
    for k, v in raw.items():
        if not isinstance(k, str) or not isinstance(v, str):
            raise SchemaError("expected string-to-string map", f"{ptr}/{key}/{k}")
    return dict(raw)


class _Resolver:
    """Resolves $ref nodes against the bundle then the file system."""

    def __init__(self, bundle: dict, base_dir: Path | None):
        self.bundle = bundle
        self.base_dir = base_dir
        self.cache = {}
        self.stack = []

    def resolve(self, node, ptr, want_kind=None):
        if isinstance(node, dict) and "$ref" in node:
            name = node["$ref"]
            if not isinstance(name, str):
                raise SchemaError("$ref must be a string", f"{ptr}/$ref")
            if name in self.stack:
                raise DanglingRef(f"{name} (circular)")
            if name in self.cache:
                doc = self.cache[name]
            elif name in self.bundle:
                self.stack.append(name)
                try:
                    doc = _parse_value(self.bundle[name], ptr=f"/bundle/{name}", resolver=self, name=name)
                finally:
                    self.stack.pop()
                self.cache[name] = doc
            elif self.base_dir is not None and (self.base_dir / name).exists():
                text = (self.base_dir / name).read_bytes()
                doc = parse_document(text, base_dir=(self.base_dir / name).parent)
                self.cache[name] = doc
            else:
                raise DanglingRef(name)
            if want_kind is not None and doc.kind != want_kind:
                raise SchemaError(f"reference {name} is a {doc.kind}, wanted {want_kind}", ptr)
            return doc.value
        return None


# ---------------------------------------------------------------------------
# Parsers per kind

def _category_from(body, ptr, resolver) -> FinCategory:
    hit = resolver.resolve(body, ptr, "category")
    if hit is not None:
        return hit
    name = _need(body, "name", ptr, str)
    objects = _need(body, "objects", ptr, list)
    objs = set()
    for i, o in enumerate(objects):
        if not isinstance(o, str):
            raise SchemaError("object ids must be strings", f"{ptr}/objects/{i}")
        if o in objs:
            raise SchemaError(f"duplicate object id {o!r}", f"{ptr}/objects/{i}")
        objs.add(o)
    arrows = {}
    for i, row in enumerate(_need(body, "arrows", ptr, list)):
        aid = _need(row, "id", f"{ptr}/arrows/{i}", str)
        src = _need(row, "src", f"{ptr}/arrows/{i}", str)
        tgt = _need(row, "tgt", f"{ptr}/arrows/{i}", str)
        if src not in objs:
            raise SchemaError(f"unknown object {src!r}", f"{ptr}/arrows/{i}/src")
        if tgt not in objs:
            raise SchemaError(f"unknown object {tgt!r}", f"{ptr}/arrows/{i}/tgt")
        if aid in arrows:
            raise SchemaError(f"duplicate arrow id {aid!r}", f"{ptr}/arrows/{i}/id")
        arrows[aid] = (src, tgt)
    identity = _str_map(body, "identity", ptr)
    for o, aid in identity.items():
        if o not in objs:
            raise SchemaError(f"identity for unknown object {o!r}", f"{ptr}/identity/{o}")
        if aid not in arrows:
            raise SchemaError(f"identity arrow {aid!r} unknown", f"{ptr}/identity/{o}")
    compose = {}
    for i, row in enumerate(_need(body, "compose", ptr, list)):
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(x, str) for x in row)):
            raise SchemaError("compose rows are [g, f, gf] triples", f"{ptr}/compose/{i}")
        g, f, gf = row
        for x in row:
            if x not in arrows:
                raise SchemaError(f"unknown arrow {x!r}", f"{ptr}/compose/{i}")
        compose[(g, f)] = gf
    return FinCategory(name, frozenset(objs), arrows, identity, compose)


def _maps_from(body, ptr):
    return _str_map(body, "object_map", ptr), _str_map(body, "arrow_map", ptr)


def _functor_from(body, ptr, resolver) -> FinFunctor:
    hit = resolver.resolve(body, ptr, "functor")
    if hit is not None:
        return hit
    dom = _category_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _category_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    omap, amap = _maps_from(body, ptr)
    f = FinFunctor(body.get("name", ""), dom, cod, omap, amap)
    _check_functor_ids(f, ptr)
    return f


def _check_functor_ids(f: FinFunctor, ptr):
    for o, img in f.object_map.items():
        if o not in f.dom.objects:
            raise SchemaError(f"unknown object {o!r}", f"{ptr}/object_map/{o}")
        if img not in f.cod.objects:
            raise SchemaError(f"unknown image object {img!r}", f"{ptr}/object_map/{o}")
    for a, img in f.arrow_map.items():
        if a not in f.dom.arrows:
            raise SchemaError(f"unknown arrow {a!r}", f"{ptr}/arrow_map/{a}")
        if img not in f.cod.arrows:
            raise SchemaError(f"unknown image arrow {img!r}", f"{ptr}/arrow_map/{a}")


def _nat_from(body, ptr, resolver) -> FinNatTrans:
    hit = resolver.resolve(body, ptr, "nat_trans")
    if hit is not None:
        return hit
    dom = _functor_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _functor_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    comps = _str_map(body, "components", ptr)
    for o, a in comps.items():
        if o not in dom.dom.objects:
            raise SchemaError(f"component at unknown object {o!r}", f"{ptr}/components/{o}")
        if a not in dom.cod.arrows:
            raise SchemaError(f"component arrow {a!r} unknown", f"{ptr}/components/{o}")
    return FinNatTrans(body.get("name", ""), dom, cod, comps)


def _action_rows(body, key, ptr, hets, arrows):
    out = {}
    for i, row in enumerate(_need(body, key, ptr, list)):
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(x, str) for x in row)):
            raise SchemaError("action rows are [arrow, het, het] triples", f"{ptr}/{key}/{i}")
        a, h, res = row
        if a not in arrows:
            raise SchemaError(f"unknown arrow {a!r}", f"{ptr}/{key}/{i}")
        if h not in hets or res not in hets:
            raise SchemaError("unknown heteromorphism id", f"{ptr}/{key}/{i}")
        out[(a, h)] = res
    return out


def _prof_tables(body, ptr, dom: FinCategory, cod: FinCategory, name: str) -> FinProfunctor:
    hets = {}
    for i, row in enumerate(_need(body, "hets", ptr, list)):
        hid = _need(row, "id", f"{ptr}/hets/{i}", str)
        src = _need(row, "src", f"{ptr}/hets/{i}", str)
        tgt = _need(row, "tgt", f"{ptr}/hets/{i}", str)
        if src not in dom.objects:
            raise SchemaError(f"unknown object {src!r}", f"{ptr}/hets/{i}/src")
        if tgt not in cod.objects:
            raise SchemaError(f"unknown object {tgt!r}", f"{ptr}/hets/{i}/tgt")
        if hid in hets:
            raise SchemaError(f"duplicate het id {hid!r}", f"{ptr}/hets/{i}/id")
        hets[hid] = (src, tgt)
    left = _action_rows(body, "left_action", ptr, hets, dom.arrows)
    right = _action_rows(body, "right_action", ptr, hets, cod.arrows)
    return FinProfunctor(name, dom, cod, hets, left, right)


def _profunctor_from(body, ptr, resolver) -> FinProfunctor:
    hit = resolver.resolve(body, ptr, "profunctor")
    if hit is not None:
        return hit
    dom = _category_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _category_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    return _prof_tables(body, ptr, dom, cod, body.get("name", ""))


def _prof_nat_from(body, ptr, resolver) -> ProfNatTrans:
    hit = resolver.resolve(body, ptr, "prof_nat_trans")
    if hit is not None:
        return hit
    dom = _profunctor_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _profunctor_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    comps = _str_map(body, "components", ptr)
    for h, res in comps.items():
        if h not in dom.hets:
            raise SchemaError(f"component at unknown het {h!r}", f"{ptr}/components/{h}")
        if res not in cod.hets:
            raise SchemaError(f"component het {res!r} unknown", f"{ptr}/components/{h}")
    return ProfNatTrans(body.get("name", ""), dom, cod, comps)


def _two_category_from(body, ptr, resolver):
    hit = resolver.resolve(body, ptr, "two_category")
    if hit is not None:
        return hit
    name = _need(body, "name", ptr, str)
    cells = _need(body, "zero_cells", ptr, list)
    for i, c in enumerate(cells):
        if not isinstance(c, str):
            raise SchemaError("0-cell ids must be strings", f"{ptr}/zero_cells/{i}")
    cellset = frozenset(cells)
    hom = {}
    for i, row in enumerate(_need(body, "hom", ptr, list)):
        src = _need(row, "src", f"{ptr}/hom/{i}", str)
        tgt = _need(row, "tgt", f"{ptr}/hom/{i}", str)
        if src not in cellset or tgt not in cellset:
            raise SchemaError("hom entry references unknown 0-cell", f"{ptr}/hom/{i}")
        hom[(src, tgt)] = _category_from(_need(row, "category", f"{ptr}/hom/{i}"), f"{ptr}/hom/{i}/category", resolver)
    comp = {}
    for i, row in enumerate(_need(body, "comp", ptr, list)):
        x = _need(row, "x", f"{ptr}/comp/{i}", str)
        y = _need(row, "y", f"{ptr}/comp/{i}", str)
        z = _need(row, "z", f"{ptr}/comp/{i}", str)
        for c in (x, y, z):
            if c not in cellset:
                raise SchemaError("comp entry references unknown 0-cell", f"{ptr}/comp/{i}")
        omap = _str_map(row, "object_map", f"{ptr}/comp/{i}")
        amap = _str_map(row, "arrow_map", f"{ptr}/comp/{i}")
        dom = product_category(hom[(y, z)], hom[(x, y)])
        comp[(x, y, z)] = FinFunctor(f"comp({x},{y},{z})", dom, hom[(x, z)], omap, amap)
    unit = _str_map(body, "unit", ptr)
    terminal = body.get("terminal")
    if terminal is not None and not isinstance(terminal, str):
        raise SchemaError("terminal must be a 0-cell id", f"{ptr}/terminal")
    two_cat = FinTwoCategory(name, cellset, hom, comp, unit, terminal)
    interp = body.get("interpretation")
    if interp is None:
        return two_cat
    iptr = f"{ptr}/interpretation"
    at0 = {}
    for x, sub in _need(interp, "at0", iptr, dict).items():
        at0[x] = _category_from(sub, f"{iptr}/at0/{x}", resolver)
    at1 = {}
    for i, row in enumerate(_need(interp, "at1", iptr, list)):
        x = _need(row, "src", f"{iptr}/at1/{i}", str)
        y = _need(row, "tgt", f"{iptr}/at1/{i}", str)
        cell = _need(row, "cell", f"{iptr}/at1/{i}", str)
        omap = _str_map(row, "object_map", f"{iptr}/at1/{i}")
        amap = _str_map(row, "arrow_map", f"{iptr}/at1/{i}")
        at1[(x, y, cell)] = FinFunctor(cell, at0[x], at0[y], omap, amap)
    at2 = {}
    for i, row in enumerate(_need(interp, "at2", iptr, list)):
        x = _need(row, "src", f"{iptr}/at2/{i}", str)
        y = _need(row, "tgt", f"{iptr}/at2/{i}", str)
        cell = _need(row, "cell", f"{iptr}/at2/{i}", str)
        comps = _str_map(row, "components", f"{iptr}/at2/{i}")
        f, f2 = hom[(x, y)].arrows[cell]
        at2[(x, y, cell)] = FinNatTrans(cell, at1[(x, y, f)], at1[(x, y, f2)], comps)
    return BuiltSub2Cat(two_cat, inclusion_indexed_category(two_cat, at0, at1, at2))


def _indexed_category_from(body, ptr, resolver) -> IndexedCategory:
    hit = resolver.resolve(body, ptr, "indexed_category")
    if hit is not None:
        return hit
    base = _two_category_from(_need(body, "base", ptr), f"{ptr}/base", resolver)
    two_cat = base.two_cat if isinstance(base, BuiltSub2Cat) else base
    at0 = {}
    for x, sub in _need(body, "at0", ptr, dict).items():
        at0[x] = _category_from(sub, f"{ptr}/at0/{x}", resolver)
    at1 = {}
    for i, row in enumerate(_need(body, "at1", ptr, list)):
        x = _need(row, "src", f"{ptr}/at1/{i}", str)
        y = _need(row, "tgt", f"{ptr}/at1/{i}", str)
        cell = _need(row, "cell", f"{ptr}/at1/{i}", str)
        omap = _str_map(row, "object_map", f"{ptr}/at1/{i}")
        amap = _str_map(row, "arrow_map", f"{ptr}/at1/{i}")
        at1[(x, y, cell)] = FinFunctor(cell, at0[x], at0[y], omap, amap)
    at2 = {}
    for i, row in enumerate(_need(body, "at2", ptr, list)):
        x = _need(row, "src", f"{ptr}/at2/{i}", str)
        y = _need(row, "tgt", f"{ptr}/at2/{i}", str)
        cell = _need(row, "cell", f"{ptr}/at2/{i}", str)
        comps = _str_map(row, "components", f"{ptr}/at2/{i}")
        if cell not in two_cat.hom[(x, y)].arrows:
            raise SchemaError(f"unknown 2-cell {cell!r}", f"{ptr}/at2/{i}/cell")
        f, f2 = two_cat.hom[(x, y)].arrows[cell]
        at2[(x, y, cell)] = FinNatTrans(cell, at1[(x, y, f)], at1[(x, y, f2)], comps)
    return IndexedCategory(body.get("name", ""), two_cat, at0, at1, at2)


def _indexed_functor_from(body, ptr, resolver) -> IndexedFunctor:
    hit = resolver.resolve(body, ptr, "indexed_functor")
    if hit is not None:
        return hit
    dom = _indexed_category_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _indexed_category_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    atx = {}
    for x, row in _need(body, "at", ptr, dict).items():
        omap = _str_map(row, "object_map", f"{ptr}/at/{x}")
        amap = _str_map(row, "arrow_map", f"{ptr}/at/{x}")
        atx[x] = FinFunctor(f"at{x}", dom.at0[x], cod.at0[x], omap, amap)
    return IndexedFunctor(body.get("name", ""), dom, cod, atx)


def _indexed_profunctor_from(body, ptr, resolver) -> IndexedProfunctor:
    hit = resolver.resolve(body, ptr, "indexed_profunctor")
    if hit is not None:
        return hit
    dom = _indexed_category_from(_need(body, "dom", ptr), f"{ptr}/dom", resolver)
    cod = _indexed_category_from(_need(body, "cod", ptr), f"{ptr}/cod", resolver)
    at0 = {}
    for x, sub in _need(body, "at0", ptr, dict).items():
        if x not in dom.at0 or x not in cod.at0:
            raise SchemaError(f"unknown 0-cell {x!r}", f"{ptr}/at0/{x}")
        at0[x] = _prof_tables(sub, f"{ptr}/at0/{x}", dom.at0[x], cod.at0[x], f"H@{x}")
    atf = {}
    for i, row in enumerate(_need(body, "at1", ptr, list)):
        x = _need(row, "src", f"{ptr}/at1/{i}", str)
        y = _need(row, "tgt", f"{ptr}/at1/{i}", str)
        cell = _need(row, "cell", f"{ptr}/at1/{i}", str)
        table = _str_map(row, "map", f"{ptr}/at1/{i}")
        atf[(x, y, cell)] = table
    return IndexedProfunctor(body.get("name", ""), dom, cod, at0, atf)


def _adjunction_from(body, ptr, resolver) -> Adjunction:
    hit = resolver.resolve(body, ptr, "adjunction")
    if hit is not None:
        return hit
    return Adjunction(
        _need(body, "x", ptr, str), _need(body, "y", ptr, str),
        _need(body, "f", ptr, str), _need(body, "g", ptr, str),
        _need(body, "eta", ptr, str), _need(body, "eps", ptr, str),
    )


def _report_from(body, ptr, resolver) -> VerificationReport:
    hit = resolver.resolve(body, ptr, "report")
    if hit is not None:
        return hit
    law = _need(body, "law", ptr, str)
    verdict = _need(body, "verdict", ptr, str)
    witnesses = _need(body, "witnesses", ptr, list)
    for i, w in enumerate(witnesses):
        if not isinstance(w, dict):
            raise SchemaError("witnesses must be objects", f"{ptr}/witnesses/{i}")
    notes = body.get("notes", "")
    if verdict not in ("pass", "fail", "inapplicable"):
        raise SchemaError(f"bad verdict {verdict!r}", f"{ptr}/verdict")
    return VerificationReport(law, verdict, tuple(dict(w) for w in witnesses), notes)


_PARSERS = {
    "category": _category_from,
    "functor": _functor_from,
    "nat_trans": _nat_from,
    "profunctor": _profunctor_from,
    "prof_nat_trans": _prof_nat_from,
    "two_category": _two_category_from,
    "indexed_category": _indexed_category_from,
    "indexed_functor": _indexed_functor_from,
    "indexed_profunctor": _indexed_profunctor_from,
    "adjunction": _adjunction_from,
    "report": _report_from,
}


def _parse_value(body, ptr, resolver, name="") -> Document:
    kind = _need(body, "kind", ptr, str)
    if kind not in _PARSERS:
        raise SchemaError(f"unknown kind {kind!r}", f"{ptr}/kind")
    value = _PARSERS[kind](body, ptr, resolver)
    return Document(kind, value, name or body.get("name", ""))


def parse_document(text, base_dir=None) -> Document:
    """Parse one document (or a bundle's root) from bytes or str."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DocumentSyntaxError(f"not UTF-8: {e.reason}", 0, 0) from e
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from e
    if not isinstance(obj, dict):
        raise SchemaError("top level must be an object", "/")
    base_dir = Path(base_dir) if base_dir is not None else None
    if "bundle" in obj:
        bundle = _need(obj, "bundle", "", dict)
        root = _need(obj, "root", "", str)
        resolver = _Resolver(bundle, base_dir)
        if root not in bundle:
            raise DanglingRef(root)
        return _parse_value(bundle[root], f"/bundle/{root}", resolver, name=root)
    return _parse_value(obj, "", _Resolver({}, base_dir))


def load_document(path) -> Document:
    path = Path(path)
    return parse_document(path.read_bytes(), base_dir=path.parent)


# ---------------------------------------------------------------------------
# Emission

def _category_body(c: FinCategory) -> dict:
    return {
        "kind": "category",
        "name": c.name,
        "objects": sorted(c.objects),
        "arrows": [{"id": a, "src": s, "tgt": t} for a, (s, t) in sorted(c.arrows.items())],
        "identity": dict(sorted(c.identity.items())),
        "compose": [[g, f, gf] for (g, f), gf in sorted(c.compose.items())],
    }


def _functor_body(f: FinFunctor, embed=True) -> dict:
    body = {
        "kind": "functor",
        "name": f.name,
        "object_map": dict(sorted(f.object_map.items())),
        "arrow_map": dict(sorted(f.arrow_map.items())),
    }
    if embed:
        body["dom"] = _category_body(f.dom)
        body["cod"] = _category_body(f.cod)
    return body


def _nat_body(t: FinNatTrans, embed=True) -> dict:
    body = {
        "kind": "nat_trans",
        "name": t.name,
        "components": dict(sorted(t.components.items())),
    }
    if embed:
        body["dom"] = _functor_body(t.dom)
        body["cod"] = _functor_body(t.cod)
    return body


def _prof_tables_body(p: FinProfunctor) -> dict:
    return {
        "hets": [{"id": h, "src": r, "tgt": s} for h, (r, s) in sorted(p.hets.items())],
        "left_action": [[a, h, out] for (a, h), out in sorted(p.left_action.items())],
        "right_action": [[b, h, out] for (b, h), out in sorted(p.right_action.items())],
    }


def _profunctor_body(p: FinProfunctor, embed=True) -> dict:
    body = {"kind": "profunctor", "name": p.name}
    body.update(_prof_tables_body(p))
    if embed:
        body["dom"] = _category_body(p.dom)
        body["cod"] = _category_body(p.cod)
    return body


def _prof_nat_body(t: ProfNatTrans) -> dict:
    return {
        "kind": "prof_nat_trans",
        "name": t.name,
        "dom": _profunctor_body(t.dom),
        "cod": _profunctor_body(t.cod),
        "components": dict(sorted(t.components.items())),
    }


def _two_category_body(value) -> dict:
    built = value if isinstance(value, BuiltSub2Cat) else None
    t = built.two_cat if built else value
    body = {
        "kind": "two_category",
        "name": t.name,
        "zero_cells": sorted(t.zero_cells),
        "hom": [
            {"src": x, "tgt": y, "category": _category_body(cat)}
            for (x, y), cat in sorted(t.hom.items())
        ],
        "comp": [
            {
                "x": x, "y": y, "z": z,
                "object_map": dict(sorted(f.object_map.items())),
                "arrow_map": dict(sorted(f.arrow_map.items())),
            }
            for (x, y, z), f in sorted(t.comp.items())
        ],
        "unit": dict(sorted(t.unit.items())),
        "terminal": t.terminal,
    }
    if built is not None:
        incl = built.inclusion
        body["interpretation"] = {
            "at0": {x: _category_body(c) for x, c in sorted(incl.at0.items())},
            "at1": [
                {
                    "src": x, "tgt": y, "cell": cell,
                    "object_map": dict(sorted(f.object_map.items())),
                    "arrow_map": dict(sorted(f.arrow_map.items())),
                }
                for (x, y, cell), f in sorted(incl.at1.items())
            ],
            "at2": [
                {"src": x, "tgt": y, "cell": cell, "components": dict(sorted(u.components.items()))}
                for (x, y, cell), u in sorted(incl.at2.items())
            ],
        }
    return body


def _indexed_category_body(r: IndexedCategory) -> dict:
    return {
        "kind": "indexed_category",
        "name": r.name,
        "base": _two_category_body(r.base),
        "at0": {x: _category_body(c) for x, c in sorted(r.at0.items())},
        "at1": [
            {
                "src": x, "tgt": y, "cell": cell,
                "object_map": dict(sorted(f.object_map.items())),
                "arrow_map": dict(sorted(f.arrow_map.items())),
            }
            for (x, y, cell), f in sorted(r.at1.items())
        ],
        "at2": [
            {"src": x, "tgt": y, "cell": cell, "components": dict(sorted(u.components.items()))}
            for (x, y, cell), u in sorted(r.at2.items())
        ],
    }


def _indexed_functor_body(k: IndexedFunctor) -> dict:
    return {
        "kind": "indexed_functor",
        "name": k.name,
        "dom": _indexed_category_body(k.dom),
        "cod": _indexed_category_body(k.cod),
        "at": {
            x: {
                "object_map": dict(sorted(f.object_map.items())),
                "arrow_map": dict(sorted(f.arrow_map.items())),
            }
            for x, f in sorted(k.atx.items())
        },
    }


def _indexed_profunctor_body(ip: IndexedProfunctor) -> dict:
    return {
        "kind": "indexed_profunctor",
        "name": ip.name,
        "dom": _indexed_category_body(ip.dom),
        "cod": _indexed_category_body(ip.cod),
        "at0": {x: _prof_tables_body(p) for x, p in sorted(ip.at0.items())},
        "at1": [
            {"src": x, "tgt": y, "cell": cell, "map": dict(sorted(table.items()))}
            for (x, y, cell), table in sorted(ip.atf.items())
        ],
    }


def _adjunction_body(a: Adjunction) -> dict:
    return {
        "kind": "adjunction", "x": a.x, "y": a.y,
        "f": a.f, "g": a.g, "eta": a.eta, "eps": a.eps,
    }


def _report_body(r: VerificationReport) -> dict:
    return {
        "kind": "report",
        "law": r.law,
        "verdict": r.verdict,
        "witnesses": [dict(sorted(w.items())) for w in r.witnesses],
        "notes": r.notes,
    }


_EMITTERS = {
    "category": _category_body,
    "functor": _functor_body,
    "nat_trans": _nat_body,
    "profunctor": _profunctor_body,
    "prof_nat_trans": _prof_nat_body,
    "two_category": _two_category_body,
    "indexed_category": _indexed_category_body,
    "indexed_functor": _indexed_functor_body,
    "indexed_profunctor": _indexed_profunctor_body,
    "adjunction": _adjunction_body,
    "report": _report_body,
}


def document_for(value, name: str = "") -> Document:
    """Wrap a kernel value in a Document of the right kind."""
    table = (
        (FinCategory, "category"), (FinFunctor, "functor"), (FinNatTrans, "nat_trans"),
        (FinProfunctor, "profunctor"), (ProfNatTrans, "prof_nat_trans"),
        (BuiltSub2Cat, "two_category"), (FinTwoCategory, "two_category"),
        (IndexedProfunctor, "indexed_profunctor"), (IndexedFunctor, "indexed_functor"),
        (IndexedCategory, "indexed_category"),
        (Adjunction, "adjunction"), (VerificationReport, "report"),
    )
    for cls, kind in table:
        if isinstance(value, cls):
            return Document(kind, value, name)
    raise SchemaError(f"no document kind for {type(value).__name__}", "/")


def emit_document(d: Document) -> bytes:
    """Canonical JSON emission: sorted keys, sorted arrays, trailing newline."""
    body = _EMITTERS[d.kind](d.value)
    return (json.dumps(body, sort_keys=True, indent=2, ensure_ascii=True) + "\n").encode("utf-8")


def emit_bundle(documents: dict, root: str) -> bytes:
    """Canonical emission of several named documents in one file."""
    if root not in documents:
        raise DanglingRef(root)
    body = {
        "bundle": {name: _EMITTERS[d.kind](d.value) for name, d in documents.items()},
        "root": root,
    }
    return (json.dumps(body, sort_keys=True, indent=2, ensure_ascii=True) + "\n").encode("utf-8")


def canonicalize(text, base_dir=None) -> bytes:
    return emit_document(parse_document(text, base_dir=base_dir))
