import pytest

from helpers import graph
from kohomologi.logic.complexes import flag_complex
from kohomologi.logic.presets import preset_graph


@pytest.fixture
def p4():
    # a − b − c − d
    return graph("abcd", ["ab", "bc", "cd"])


@pytest.fixture
def p4_complex(p4):
    return flag_complex(p4)


@pytest.fixture
def k3():
    return graph("abc", ["ab", "bc", "ac"])


@pytest.fixture
def two_edges():
    return graph("abcd", ["ab", "cd"])


@pytest.fixture
def rp2():
    return preset_graph("rp2")


SMALL_GRAPHS = {
    "point": graph("a"),
    "edge": graph("ab", ["ab"]),
    "discrete2": graph("ab"),
    "discrete3": graph("abc"),
    "p3": graph("abc", ["ab", "bc"]),
    "edge_and_point": graph("abc", ["ab"]),
    "k3": graph("abc", ["ab", "bc", "ac"]),
    "p4": graph("abcd", ["ab", "bc", "cd"]),
    "c4": graph("abcd", ["ab", "bc", "cd", "da"]),
    "two_edges": graph("abcd", ["ab", "cd"]),
    "paw": graph("abcd", ["ab", "bc", "ac", "cd"]),
    "c5": preset_graph("cycle", 5),
}


@pytest.fixture(params=sorted(SMALL_GRAPHS))
def small_graph(request):
    return SMALL_GRAPHS[request.param]
