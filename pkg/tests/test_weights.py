import math

import pytest
import sympy

from affinecox.coxeter import ExponentData, affine_exponents, class_count, coxeter_polynomial, exponents_from_polynomial
from affinecox.errors import ChoiceForbidden, ChoiceRequired
from affinecox.polyalgebra import X, factor_cyclotomic
from affinecox.rootdata import DiagramId, all_affine_ids, cartan_matrix
from affinecox.weights import (
    a_family_coxeter_number,
    blm_expansion,
    blm_exponents,
    steinberg_polynomial,
)


def cases(max_rank):
    for id in all_affine_ids(max_rank):
        if id.family == "A":
            for j in range(1, class_count(id.rank) + 1):
                yield id, j
        else:
            yield id, None


CASES_12 = list(cases(12))
ids = lambda v: getattr(v, "name", str(v))


# --- Steinberg --------------------------------------------------------------


def test_steinberg_e8():
    f = steinberg_polynomial(DiagramId("E8", affine=False))
    assert f == (X - 1) ** 2 * (X + 1) * (X**2 + X + 1) * (X**4 + X**3 + X**2 + X + 1)
    assert factor_cyclotomic(f).as_dict() == {1: 2, 2: 1, 3: 1, 5: 1}


def test_steinberg_b4_and_a4():
    assert steinberg_polynomial(DiagramId("B", 4, False)) == (X - 1) ** 2 * (X**2 + X + 1) * (X + 1)
    assert steinberg_polynomial(DiagramId("A", 4, False), 2) == (X**2 - 1) * (X**3 - 1)


def test_steinberg_choice_rules():
    with pytest.raises(ChoiceRequired):
        steinberg_polynomial(DiagramId("A", 4, False))
    with pytest.raises(ChoiceForbidden):
        steinberg_polynomial(DiagramId("D", 5, False), 2)


@pytest.mark.parametrize("id, j", CASES_12, ids=ids)
def test_steinberg_equals_coxeter_polynomial(id, j):
    assert steinberg_polynomial(id, j) == coxeter_polynomial(id, j)


# --- coweights --------------------------------------------------------------


@pytest.mark.parametrize(
    "fid, branch, c, m",
    [
        (DiagramId("A", 4, False), 2, 5, (3, 6, 4, 2)),
        (DiagramId("B", 4, False), None, 2, (2, 4, 6, 3)),
        (DiagramId("D", 6, False), None, 1, (1, 2, 3, 4, 2, 2)),
        (DiagramId("A", 5, False), 3, 2, (1, 2, 3, 2, 1)),
    ],
)
def test_blm_examples(fid, branch, c, m):
    e = blm_expansion(fid, branch)
    assert (e.c, e.m) == (c, m)


def test_blm_b4_branch_and_h():
    e = blm_expansion(DiagramId("B", 4, False))
    assert e.branch == 3 and e.h == 6


def test_blm_orientation_pinned_by_b4():
    # the transpose convention gives a different vector for B4
    fid = DiagramId("B", 4, False)
    ct_inv = sympy.Matrix(cartan_matrix(fid).entries).T.inv()
    u = ct_inv[:, 2]
    scale = math.lcm(*[int(v.q) for v in u])
    assert tuple(int(v * scale) for v in u) != blm_expansion(fid).m


def test_blm_against_sympy_inverse():
    for id, j in CASES_12:
        fid = id.finite()
        e = blm_expansion(fid, j)
        u = sympy.Matrix(cartan_matrix(fid).entries).inv()[:, e.branch - 1]
        scale = math.lcm(*[int(v.q) for v in u])
        assert e.c == scale
        assert e.m == tuple(int(v * scale) for v in u)


@pytest.mark.parametrize("id, j", CASES_12, ids=ids)
def test_blm_multiplier_minimal(id, j):
    e = blm_expansion(id, j)
    assert all(v >= 0 for v in e.m)
    for p in sympy.primefactors(e.c):
        assert any(v % p for v in e.m)


def test_blm_exponent_examples():
    assert blm_exponents(blm_expansion(DiagramId("B", 4, False))) == ExponentData(6, (0, 2, 3, 4, 6))
    assert blm_exponents(blm_expansion(DiagramId("A", 4, False), 2)) == ExponentData(6, (0, 2, 3, 4, 6))
    assert blm_exponents(blm_expansion(DiagramId("A", 5, False), 3)) == ExponentData(3, (0, 1, 2, 3, 2, 1))


@pytest.mark.parametrize("id, j", CASES_12, ids=ids)
def test_three_way_agreement(id, j):
    cox = affine_exponents(id, j)
    assert blm_exponents(blm_expansion(id, j)) == cox
    assert exponents_from_polynomial(steinberg_polynomial(id, j)) == cox
    assert len(cox.exponents) == id.size
    assert cox.is_self_dual()


def test_a_branch_symmetry_and_closed_h():
    for l in range(1, 13):
        for b in range(1, l + 1):
            e = blm_expansion(DiagramId("A", l, False), b)
            mirror = blm_expansion(DiagramId("A", l, False), l + 1 - b)
            assert blm_exponents(e) == blm_exponents(mirror)
            assert e.h == a_family_coxeter_number(l, b)
