import pytest

from profcat import fixtures as fx
from profcat.examples import Sub2CatSpec, build_sub2cat, build_hom_ip, full_sub2cat
from profcat.fincat import FinFunctor, functor_category
from profcat.gen import galois_adjunction


def galois_functors():
    ch2, ch3 = fx.ch2(), fx.ch3()
    f = FinFunctor("f", ch2, ch3, {"0": "0", "1": "2"},
                   {"id:0": "id:0", "id:1": "id:2", "0<1": "0<2"})
    g = FinFunctor("g", ch3, ch2, {"0": "0", "1": "0", "2": "1"},
                   {"id:0": "id:0", "id:1": "id:0", "id:2": "id:1",
                    "0<1": "id:0", "1<2": "0<1", "0<2": "0<1"})
    return ch2, ch3, f, g


@pytest.fixture(scope="session")
def galois_built():
    ch2, ch3, f, g = galois_functors()
    return build_sub2cat(Sub2CatSpec((ch2, ch3), (f, g), (), include_terminal=True))


@pytest.fixture(scope="session")
def galois_adj(galois_built):
    ch2, ch3, f, g = galois_functors()
    return galois_adjunction(galois_built, ch2, ch3, f, g)


@pytest.fixture(scope="session")
def galois_hom_ip(galois_built):
    return build_hom_ip(galois_built)


@pytest.fixture(scope="session")
def c2_full_base():
    return full_sub2cat([fx.c2()], include_terminal=True)


@pytest.fixture(scope="session")
def conical_p3_base():
    p3, d2 = fx.p3(), fx.d2()
    diagrams = tuple(functor_category(d2, p3).functors.values())
    return build_sub2cat(Sub2CatSpec((p3, d2), diagrams, (), include_terminal=True))
