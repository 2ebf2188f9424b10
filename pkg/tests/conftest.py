import pathlib

import pytest

from freewreath import (
    Alphabet,
    PermRep,
    SubgroupSpec,
    basis,
    cyclic_group,
    transversal,
)

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def ab():
    return Alphabet.of("a", "b")


@pytest.fixture
def e1(ab):
    """F_2 acting on 3 points: a is a 3-cycle, b fixes everything."""
    return PermRep(ab, 3, ((1, 2, 0), (0, 1, 2)))


@pytest.fixture
def e1_transversal(e1):
    return transversal(e1)


@pytest.fixture
def e1_basis(e1_transversal):
    return basis(e1_transversal)


@pytest.fixture
def e2():
    """Z/4 over its order-2 subgroup."""
    group = cyclic_group(4)
    subgroup = SubgroupSpec(group, ((2, 3, 0, 1),))
    return group, subgroup
