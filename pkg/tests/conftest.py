import pytest

from knot_thickness.diagrams import Diagram, braid_closure, parse_pd


TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
TREFOIL_MIRROR = "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]"
# Trefoil projection with crossing 0 changed: an unknot diagram one change away from alternating.
TREFOIL_FLIPPED = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
UNKNOT_ONE_CROSSING = "X[1,1,2,2]"
T34 = (
    "X[12,2,13,1] X[7,3,8,2] X[8,14,9,13] X[3,15,4,14] "
    "X[4,10,5,9] X[15,11,16,10] X[16,6,1,5] X[11,7,12,6]"
)
T34_BRAID = [1, 2, 1, 2, 1, 2, 1, 2]


@pytest.fixture
def trefoil() -> Diagram:
    return parse_pd(TREFOIL, name="3_1")


@pytest.fixture
def trefoil_mirror() -> Diagram:
    return parse_pd(TREFOIL_MIRROR, name="3_1*")


@pytest.fixture
def trefoil_flipped() -> Diagram:
    return parse_pd(TREFOIL_FLIPPED, name="3_1_flip0")


@pytest.fixture
def figure_eight() -> Diagram:
    return parse_pd(FIGURE_EIGHT, name="4_1")


@pytest.fixture
def unknot() -> Diagram:
    return parse_pd(UNKNOT_ONE_CROSSING, name="0_1")


@pytest.fixture
def t34() -> Diagram:
    return parse_pd(T34, name="8_19")


@pytest.fixture
def t34_braid() -> Diagram:
    return braid_closure(T34_BRAID, name="8_19")


@pytest.fixture
def small_diagrams(trefoil, trefoil_mirror, trefoil_flipped, figure_eight, unknot, t34):
    return [unknot, trefoil, trefoil_mirror, trefoil_flipped, figure_eight, t34]
