"""Family windows on the double-arrow quiver and exact base changes
between their imaginary layers."""

import pytest

from genvar import kronecker as kb
from genvar.affine import chebyshev_f, chebyshev_s
from genvar.errors import InputError
from genvar.laurent import LaurentPoly


def test_quasi_simple_character_closed_form(z_closed_form):
    assert kb.z_character() == z_closed_form


def test_family_elements_index_zero_and_one(z_closed_form):
    one = LaurentPoly.one(2)
    for kind in kb.KINDS:
        assert kb.family_element(kind, 0) == one
        assert kb.family_element(kind, 1) == z_closed_form


def test_family_elements_index_two(z_closed_form):
    z = z_closed_form
    two = LaurentPoly.one(2).scale(2)
    assert kb.family_element("G", 2) == z * z
    assert kb.family_element("SZ", 2) == z * z - two          # F_2 = x^2 - 2
    assert kb.family_element("CZ", 2) == z * z - LaurentPoly.one(2)


def test_family_element_validation():
    with pytest.raises(InputError):
        kb.family_element("XX", 1)
    with pytest.raises(InputError):
        kb.family_element("G", -1)


# z^4 = F_4 + 4 F_2 + 6 and z^4 = S_4 + 3 S_2 + 2, checked by hand from
# F_4 = x^4 - 4x^2 + 2 and S_4 = x^4 - 3x^2 + 1.
def test_power_expansions_frozen():
    assert kb.expand_in_F(0) == [1]
    assert kb.expand_in_F(1) == [0, 1]
    assert kb.expand_in_F(2) == [2, 0, 1]
    assert kb.expand_in_F(4) == [6, 0, 4, 0, 1]
    assert kb.expand_in_S(2) == [1, 0, 1]
    assert kb.expand_in_S(4) == [2, 0, 3, 0, 1]
    with pytest.raises(InputError):
        kb.expand_in_F(-1)


def test_power_expansions_reconstruct(z_closed_form):
    z = z_closed_form
    for n in range(6):
        lam = kb.expand_in_F(n)
        acc = LaurentPoly.zero(2)
        for i, c in enumerate(lam):
            if c:
                acc = acc + kb.family_element("SZ", i).scale(c)
        assert acc == z ** n if n else acc == LaurentPoly.one(2)


FROZEN_G_TO_SZ = (
    (1, 0, 2, 0, 6),
    (0, 1, 0, 3, 0),
    (0, 0, 1, 0, 4),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
)

FROZEN_SZ_TO_G = (
    (1, 0, -2, 0, 2),
    (0, 1, 0, -3, 0),
    (0, 0, 1, 0, -4),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
)


def test_base_change_frozen_matrices():
    fwd = kb.base_change("G", "SZ", 5)
    assert fwd.matrix == FROZEN_G_TO_SZ
    assert fwd.inverse == FROZEN_SZ_TO_G
    back = kb.base_change("SZ", "G", 5)
    assert back.matrix == FROZEN_SZ_TO_G
    assert back.inverse == FROZEN_G_TO_SZ


def test_base_change_identity_and_validation():
    ident = kb.base_change("CZ", "CZ", 4)
    assert ident.matrix == tuple(
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    with pytest.raises(InputError):
        kb.base_change("G", "nope", 3)
    with pytest.raises(InputError):
        kb.base_change("G", "SZ", 0)


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def test_base_change_triangle_consistency():
    # expanding z^j over S_i directly must agree with going through F_i
    n = 6
    g_to_cz = kb.base_change("G", "CZ", n).matrix
    g_to_sz = kb.base_change("G", "SZ", n).matrix
    sz_to_cz = kb.base_change("SZ", "CZ", n).matrix
    assert g_to_cz == _matmul(sz_to_cz, g_to_sz)


def test_base_change_columns_match_polynomials():
    n = 5
    sz_to_g = kb.base_change("SZ", "G", n).matrix
    cz_to_g = kb.base_change("CZ", "G", n).matrix
    for j in range(1, n):
        f, s = chebyshev_f(j), chebyshev_s(j)
        assert [sz_to_g[i][j] for i in range(j + 1)] == f
        assert [cz_to_g[i][j] for i in range(j + 1)] == s


def test_positivity_reports():
    rep = kb.positivity_report(kb.base_change("G", "SZ", 6).matrix)
    assert rep == {"unipotent": True, "nonnegative": True,
                   "negative_entries": []}
    rep = kb.positivity_report(kb.base_change("G", "CZ", 6).matrix)
    assert rep["unipotent"] and rep["nonnegative"]
    # F_j = S_j - S_{j-2}, so this change has -1 entries off the diagonal
    rep = kb.positivity_report(kb.base_change("SZ", "CZ", 5).matrix)
    assert rep["unipotent"] and not rep["nonnegative"]
    assert [2, 4, -1] in rep["negative_entries"]
    # S_j = F_j + F_{j-2} + ... stays nonnegative
    rep = kb.positivity_report(kb.base_change("CZ", "SZ", 5).matrix)
    assert rep["unipotent"] and rep["nonnegative"]


def test_base_change_json_shape():
    doc = kb.base_change("G", "SZ", 3).to_json()
    assert doc["source"] == "G" and doc["target"] == "SZ"
    assert doc["size"] == 3
    assert doc["matrix"][0] == [1, 0, 2]
    assert doc["inverse"][0] == [1, 0, -2]


def test_build_basis_window():
    fam = kb.build_basis("G", n_max=3, monomial_bound=(1, 1))
    names = [n for n, _p in fam.elements]
    assert len(names) == len(set(names))
    assert "mono:0,0" in names
    for k in (1, 2, 3):
        assert "imag:%d" % k in names
    by_name = dict(fam.elements)
    for k in (1, 2, 3):
        assert by_name["imag:%d" % k].denominator_vector() == (k, k)
    for name, poly in fam.elements:
        if name.startswith("mono:"):
            assert name == "mono:%d,%d" % poly.denominator_vector()


def test_build_basis_validation():
    with pytest.raises(InputError):
        kb.build_basis("nope", n_max=2)
    with pytest.raises(InputError):
        kb.build_basis("G", n_max=-1)
    with pytest.raises(InputError):
        kb.build_basis("G", n_max=2, monomial_bound=(-1, 2))


def test_independence_of_window():
    for kind in kb.KINDS:
        fam = kb.build_basis(kind, n_max=3, monomial_bound=(1, 1))
        rep = kb.independence_check(fam)
        assert rep["independent"] is True
        assert rep["rank"] == rep["elements"] == len(fam.elements)


def test_independence_negative_control(z_closed_form):
    fam = kb.build_basis("G", n_max=2, monomial_bound=(1, 1))
    # z^2 - 1 is a combination of imag:2 and the unit monomial
    extra = z_closed_form * z_closed_form - LaurentPoly.one(2)
    rep = kb.independence_check(fam, extra=[extra])
    assert rep["independent"] is False
    assert rep["rank"] == rep["elements"] - 1
