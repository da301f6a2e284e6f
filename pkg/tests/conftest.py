import pytest

from spohncurves import PayoffTables


@pytest.fixture
def pd():
    """Prisoner's dilemma, cooperate listed first."""
    return PayoffTables([[2, 0], [3, 1]], [[2, 3], [0, 1]])


@pytest.fixture
def g44():
    return PayoffTables([[1, 2], [0, 3]], [[6, 1], [4, 0]])


@pytest.fixture
def bos():
    """The four perturbed Bach-or-Stravinsky variants, in display order."""
    return [
        PayoffTables([[3, 0], [0, 2]], [[2, 1], [0, 3]]),
        PayoffTables([[3, 1], [0, 2]], [[2, 0], [0, 3]]),
        PayoffTables([[3, 0], [0, 2]], [[2, 0], [1, 3]]),
        PayoffTables([[3, 0], [1, 2]], [[2, 0], [0, 3]]),
    ]
