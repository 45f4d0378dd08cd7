"""Canonical small categories shared by the demos and the test corpus."""

from __future__ import annotations

from .fincat import FinCategory, identity_id


def _category(name, objects, extra_arrows, compose_pairs):
    """Assemble tables from the non-identity data; identities are filled in."""
    arrows = {identity_id(x): (x, x) for x in objects}
    arrows.update(extra_arrows)
    identity = {x: identity_id(x) for x in objects}
    compose = {}
    for a, (s, t) in arrows.items():
        compose[(identity_id(t), a)] = a
        compose[(a, identity_id(s))] = a
    compose.update(compose_pairs)
    return FinCategory(name, frozenset(objects), arrows, identity, compose)


def c1() -> FinCategory:
    """The terminal category: one object, its identity only."""
    return _category("C1", ["*"], {}, {})


def c2() -> FinCategory:
    """The walking arrow u: a -> b."""
    return _category("C2", ["a", "b"], {"u": ("a", "b")}, {})


def d2() -> FinCategory:
    """Two objects, no arrows between them."""
    return _category("D2", ["x", "y"], {}, {})


def p3() -> FinCategory:
    """The poset with bottom under two incomparable elements."""
    return _category(
        "P3",
        ["bot", "x", "y"],
        {"bot<x": ("bot", "x"), "bot<y": ("bot", "y")},
        {},
    )


def ch2() -> FinCategory:
    """The chain 0 < 1."""
    return _category("Ch2", ["0", "1"], {"0<1": ("0", "1")}, {})


def ch3() -> FinCategory:
    """The chain 0 < 1 < 2."""
    return _category(
        "Ch3",
        ["0", "1", "2"],
        {"0<1": ("0", "1"), "1<2": ("1", "2"), "0<2": ("0", "2")},
        {("1<2", "0<1"): "0<2"},
    )


def iso2() -> FinCategory:
    """Two objects joined by an isomorphism pair."""
    return _category(
        "Iso2",
        ["p", "q"],
        {"u": ("p", "q"), "v": ("q", "p")},
        {("v", "u"): identity_id("p"), ("u", "v"): identity_id("q")},
    )


def parallel2() -> FinCategory:
    """Two objects with two parallel arrows between them."""
    return _category(
        "Par2",
        ["a", "b"],
        {"u1": ("a", "b"), "u2": ("a", "b")},
        {},
    )


ALL = {
    "c1": c1,
    "c2": c2,
    "d2": d2,
    "p3": p3,
    "ch2": ch2,
    "ch3": ch3,
    "iso2": iso2,
    "parallel2": parallel2,
}
