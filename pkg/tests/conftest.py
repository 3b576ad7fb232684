"""Shared fixtures: the standard quivers and hand-checked characters."""

import pytest

from genvar import quiver as quiver_mod
from genvar.laurent import LaurentPoly


@pytest.fixture(scope="session")
def kron():
    return quiver_mod.kronecker()


@pytest.fixture(scope="session")
def a2():
    return quiver_mod.a_n(2)


@pytest.fixture(scope="session")
def a3():
    return quiver_mod.a_n(3)


@pytest.fixture(scope="session")
def atilde():
    return quiver_mod.affine_a2()


@pytest.fixture(scope="session")
def z_closed_form():
    # Character of a quasi-simple (1,1) module on the double-arrow quiver,
    # computed by hand from the weighted Grassmannian-count expansion:
    # z = (u1^2 + u2^2 + 1) / (u1 u2).
    return LaurentPoly(2, {(1, -1): 1, (-1, -1): 1, (-1, 1): 1})
