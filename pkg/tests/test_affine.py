"""Affine-type structure: normalized polynomial families, tube modules,
layered generic values, membership reports."""

import pytest

from genvar import affine, ccmap
from genvar.affine import (KRONECKER_DELTA, chebyshev_f, chebyshev_s,
                           delta_character, generic_variable_affine,
                           membership_check_A, quasi_simple_kronecker,
                           regular_rigid_check, s_as_f_sum, substitute,
                           tube_module_kronecker)
from genvar.errors import ConsistencyError, InputError
from genvar.laurent import LaurentPoly
from genvar.repfq import ext_dim, hom_dim


def test_chebyshev_families_frozen():
    assert chebyshev_s(0) == [1]
    assert chebyshev_s(1) == [0, 1]
    assert chebyshev_s(2) == [-1, 0, 1]
    assert chebyshev_s(3) == [0, -2, 0, 1]
    assert chebyshev_s(4) == [1, 0, -3, 0, 1]
    assert chebyshev_f(0) == [2]
    assert chebyshev_f(1) == [0, 1]
    assert chebyshev_f(2) == [-2, 0, 1]
    assert chebyshev_f(3) == [0, -3, 0, 1]
    assert chebyshev_f(4) == [2, 0, -4, 0, 1]


def test_shared_three_term_recurrence():
    # P_{n+1} = x P_n - P_{n-1} for both families
    for fam in (chebyshev_s, chebyshev_f):
        for n in range(1, 9):
            prev, cur, nxt = fam(n - 1), fam(n), fam(n + 1)
            shifted = [0] + cur            # multiply by x
            expect = [a - (prev[i] if i < len(prev) else 0)
                      for i, a in enumerate(shifted)]
            assert nxt == expect


def test_trace_identity_in_laurent_ring():
    t = LaurentPoly.variable(1, 1)
    x = LaurentPoly(1, {(1,): 1, (-1,): 1})  # t + 1/t
    for n in range(0, 9):
        lhs = substitute(chebyshev_f(n), x)
        rhs = LaurentPoly(1, {(n,): 1, (-n,): 1}) if n else LaurentPoly.const(1, 2)
        assert lhs == rhs
        lhs_s = substitute(chebyshev_s(n), x)
        rhs_s = LaurentPoly(1, {(n - 2 * k,): 1 for k in range(n + 1)})
        assert lhs_s == rhs_s


def test_s_as_f_sum():
    # index 0 stands for the constant 1, not the trace value 2
    assert s_as_f_sum(0) == [1]
    assert s_as_f_sum(1) == [0, 1]
    assert s_as_f_sum(2) == [1, 0, 1]
    assert s_as_f_sum(5) == [0, 1, 0, 1, 0, 1]
    x = LaurentPoly(1, {(1,): 1, (-1,): 1})
    for n in range(0, 8):
        coeffs = s_as_f_sum(n)
        total = LaurentPoly.zero(1)
        for k, c in enumerate(coeffs):
            if not c:
                continue
            part = LaurentPoly.one(1) if k == 0 else substitute(chebyshev_f(k), x)
            total = total + part.scale(c)
        assert total == substitute(chebyshev_s(n), x)
    with pytest.raises(InputError):
        s_as_f_sum(-1)


def test_tube_modules(kron):
    t1 = tube_module_kronecker(kron, 1, 1)
    assert t1.dim == (1, 1) and t1.p == 0
    assert hom_dim(t1, t1) == 1
    t2 = tube_module_kronecker(kron, 2, 1)
    assert hom_dim(t1, t2) == 0 and hom_dim(t2, t1) == 0
    deep = tube_module_kronecker(kron, 1, 3)
    assert deep.dim == (3, 3)
    assert hom_dim(deep, deep) == 3
    assert quasi_simple_kronecker(kron, 5).dim == (1, 1)


def test_tube_modules_are_not_rigid(kron):
    t1 = tube_module_kronecker(kron, 1, 1)
    assert ext_dim(t1, t1) == 1
    assert regular_rigid_check(kron, t1) is False
    rigid = ccmap.rigid_integer_rep(kron, (2, 1))
    assert regular_rigid_check(kron, rigid) is False  # nonzero defect
    from genvar.candecomp import exceptional_regular_dims
    assert exceptional_regular_dims(kron) == []


def test_regular_rigid_check_affine(atilde):
    from genvar.repfq import Representation
    r101 = Representation(atilde, 0, (1, 0, 1), ((), ((),), ((1,),)))
    assert regular_rigid_check(atilde, r101) is True


def test_delta_character_is_quasi_simple_character(kron, z_closed_form):
    assert delta_character(kron) == z_closed_form
    assert KRONECKER_DELTA == (1, 1)


def test_affine_generic_matches_direct_route(kron, atilde):
    for q, d in [(kron, (1, 1)), (kron, (2, 2)), (kron, (2, 1)),
                 (kron, (-1, 2)), (kron, (0, -2)),
                 (atilde, (1, 1, 1)), (atilde, (2, 1, 2))]:
        via_structure = generic_variable_affine(q, d)
        direct = ccmap.generic_variable(q, d)
        assert via_structure.poly == direct.poly, d


def test_affine_generic_tags(kron):
    assert generic_variable_affine(kron, (2, 2)).tag == "delta_layer"
    assert generic_variable_affine(kron, (2, 2)).delta_power == 2
    assert generic_variable_affine(kron, (3, 2)).tag == "cluster_monomial"
    assert generic_variable_affine(kron, (-1, -1)).tag == "cluster_monomial"
    assert generic_variable_affine(kron, (3, 3)).delta_power == 3


def test_affine_generic_rejects_dynkin(a2):
    with pytest.raises(InputError):
        generic_variable_affine(a2, (1, 1))


def test_membership_tube_characters(kron):
    t1 = tube_module_kronecker(kron, 1, 1)
    report = membership_check_A(kron, ccmap.DecoratedRep(t1, (0, 0)))
    assert report["integral"] is True
    assert report["den"] == [1, 1]
    assert report["coefficients"] == [["imag:1", 1]]


def test_membership_deeper_tube(kron):
    t2 = tube_module_kronecker(kron, 1, 2)
    report = membership_check_A(kron, ccmap.DecoratedRep(t2, (0, 0)))
    assert report["integral"] is True
    assert report["den"] == [2, 2]
    # hand-computed character: submodule counts over F_q for the
    # quasi-length-two module (identity, nilpotent Jordan block) give
    # 1, q+2, q+2, 1 by total dimension, so the character equals the
    # degree-two normalized family element: one generic layer minus the
    # unit monomial.
    names = dict((n, c) for n, c in report["coefficients"])
    assert names == {"imag:2": 1, "mono:0,0": -1}


def test_membership_rejects_other_quivers(atilde):
    from genvar.repfq import Representation
    m = Representation(atilde, 0, (1, 1, 1), (((1,),), ((1,),), ((2,),)))
    with pytest.raises(InputError):
        membership_check_A(atilde, ccmap.DecoratedRep(m, (0, 0, 0)))
