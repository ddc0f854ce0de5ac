import pytest

from nlrank import (
    direct_sum,
    e8,
    hyperbolic,
    lambda_lattice,
    make_lattice,
)


def corpus_lattices():
    """The named test corpus used by the relation and Milgram suites."""
    lats = {
        "U": hyperbolic(),
        "U(2)": hyperbolic(2),
        "<2>": make_lattice([[2]]),
        "<-2>": make_lattice([[-2]]),
        "<2>+<-2>": direct_sum(make_lattice([[2]]), make_lattice([[-2]])),
        "-E8": e8(True),
    }
    for g in range(2, 9):
        lats[f"Lambda_{g}"] = lambda_lattice(g)
    return lats


@pytest.fixture(scope="session")
def corpus():
    return corpus_lattices()
