import itertools

import pytest

from graphprod.complex import cycle, discrete, path, square, triangle_with_pendant
from graphprod.exactmath import GF, QQ
from graphprod.galg import exterior, free, trunc_poly

CORPUS = {
    "path3": path(3),
    "square": square(),
    "cycle5": cycle(5),
    "points2": discrete(2),
    "points3": discrete(3),
    "points4": discrete(4),
    "triangle+pendant": triangle_with_pendant(),
}

ALGEBRAS = {
    "exterior(1)": exterior(1),
    "trunc_poly(1,3)": trunc_poly(1, 3),
    "free(2)": free(2),
}

FIELDS = {"gf2": GF(2), "gf3": GF(3), "q": QQ}


def corpus_pairs():
    return list(itertools.product(CORPUS, ALGEBRAS))


@pytest.fixture(params=list(CORPUS))
def corpus_complex(request):
    return CORPUS[request.param]


@pytest.fixture(params=list(FIELDS))
def field(request):
    return FIELDS[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
