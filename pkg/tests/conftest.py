from __future__ import annotations

import pytest

from dihedralcovers.hurwitz import BranchData, classify_coverings
from dihedralcovers.perm import parse_cycles


@pytest.fixture(scope="session")
def a7():
    return parse_cycles("(12)(34)(56)", 7)


@pytest.fixture(scope="session")
def b1():
    return parse_cycles("(23)(45)(67)", 7)


@pytest.fixture(scope="session")
def classification_7_6():
    return classify_coverings(BranchData(7, 6))
