import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from affinecox import matrix as mx
from affinecox.coxeter import (
    ExponentData,
    affine_exponents,
    an_class_polynomial,
    an_class_representative,
    class_count,
    coxeter_element,
    coxeter_polynomial,
    coxeter_word,
    defect_check,
    exponents_from_polynomial,
    reflection_matrix,
)
from affinecox.errors import (
    ClassIndexForbidden,
    ClassIndexOutOfRange,
    ClassIndexRequired,
    NotCyclotomicProduct,
    UnitMultiplicityError,
)
from affinecox.polyalgebra import CyclotomicFactorization, X, parse_poly
from affinecox.rootdata import DiagramId, all_affine_ids, cartan_matrix, marks
from affinecox.spectra import charpoly_exact

TREES_9 = [i for i in all_affine_ids(9) if i.family != "A"]


def a_cases(max_rank):
    return [(l, j) for l in range(1, max_rank + 1) for j in range(1, class_count(l) + 1)]


# --- reflections ------------------------------------------------------------


@pytest.mark.parametrize("id", all_affine_ids(8), ids=lambda i: i.name)
def test_reflections_are_involutions_fixing_marks(id):
    c = cartan_matrix(id)
    z = marks(c)
    for i in range(c.size):
        s = reflection_matrix(c, i)
        assert mx.matmul(s, s) == mx.identity(c.size)
        # the imaginary root sum z_i alpha_i is fixed
        assert mx.matvec(s, z) == z


def test_g2_middle_reflection():
    s = reflection_matrix(cartan_matrix(DiagramId("G2")), 1)
    assert s == ((1, 0, 0), (1, -1, 1), (0, 0, 1))


def test_reflection_definition_against_sympy():
    c = cartan_matrix(DiagramId("F4"))
    for i in range(c.size):
        expect = sympy.eye(c.size)
        for j in range(c.size):
            expect[i, j] -= c.entries[j][i]
        assert sympy.Matrix(reflection_matrix(c, i)) == expect


# --- Coxeter elements -------------------------------------------------------


def test_a1_finite_element():
    c = cartan_matrix(DiagramId("A", 1, False))
    assert coxeter_element(c, [0]) == ((-1,),)


def test_b4_affine_polynomial():
    c = cartan_matrix(DiagramId("B", 4))
    assert charpoly_exact(coxeter_element(c, range(5))) == parse_poly("x^5-x^3-x^2+1")


def test_g2_affine_polynomial():
    c = cartan_matrix(DiagramId("G2"))
    assert charpoly_exact(coxeter_element(c, range(3))) == parse_poly("x^3-x^2-x+1")


def test_word_must_be_permutation():
    c = cartan_matrix(DiagramId("G2"))
    with pytest.raises(ValueError):
        coxeter_element(c, [0, 0, 1])


@pytest.mark.parametrize("id", TREES_9, ids=lambda i: i.name)
def test_tree_polynomial_independent_of_order(id):
    c = cartan_matrix(id)
    base = charpoly_exact(coxeter_element(c, range(c.size)))
    rng = random.Random(id.name)
    for _ in range(50):
        w = list(range(c.size))
        rng.shuffle(w)
        assert charpoly_exact(coxeter_element(c, w)) == base


def test_element_matches_sympy_product():
    c = cartan_matrix(DiagramId("E6"))
    word = [3, 0, 6, 1, 5, 2, 4]
    expect = sympy.eye(c.size)
    for i in word:
        expect = sympy.Matrix(reflection_matrix(c, i)) * expect
    assert sympy.Matrix(coxeter_element(c, word)) == expect


# --- polynomials and classes ------------------------------------------------


def test_coxeter_polynomial_examples():
    for l in range(2, 13):
        assert coxeter_polynomial(DiagramId("C", l)) == (X**l - 1) * (X - 1)
    assert coxeter_polynomial(DiagramId("A", 4), 2) == (X**2 - 1) * (X**3 - 1)
    assert coxeter_polynomial(DiagramId("E6")) == parse_poly("x^7+x^6-2x^4-2x^3+x+1")


def test_class_index_rules():
    with pytest.raises(ClassIndexRequired):
        coxeter_word(DiagramId("A", 5))
    with pytest.raises(ClassIndexForbidden):
        coxeter_word(DiagramId("B", 5), 1)
    with pytest.raises(ClassIndexOutOfRange):
        an_class_representative(5, 4)
    with pytest.raises(ClassIndexOutOfRange):
        an_class_representative(5, 0)


@pytest.mark.parametrize("rank, j", a_cases(12))
def test_a_class_words(rank, j):
    word = an_class_representative(rank, j)
    assert sorted(word) == list(range(rank + 1))
    c = cartan_matrix(DiagramId("A", rank))
    assert charpoly_exact(coxeter_element(c, word)) == (X**j - 1) * (X ** (rank + 1 - j) - 1)


def test_a_class_examples():
    c5 = cartan_matrix(DiagramId("A", 5))
    assert charpoly_exact(coxeter_element(c5, an_class_representative(5, 3))) == parse_poly("x^6-2x^3+1")
    c4 = cartan_matrix(DiagramId("A", 4))
    assert charpoly_exact(coxeter_element(c4, an_class_representative(4, 1))) == (X - 1) * (X**4 - 1)
    c1 = cartan_matrix(DiagramId("A", 1))
    assert charpoly_exact(coxeter_element(c1, an_class_representative(1, 1))) == (X - 1) ** 2


def test_a_classes_are_distinct():
    for l in range(1, 13):
        polys = {an_class_polynomial(l, j) for j in range(1, class_count(l) + 1)}
        assert len(polys) == class_count(l)


# --- exponents --------------------------------------------------------------


def test_exponents_e8():
    e = exponents_from_polynomial(coxeter_polynomial(DiagramId("E8")))
    assert e == ExponentData(30, (0, 6, 10, 12, 15, 18, 20, 24, 30))


def test_exponents_from_factorization():
    f = CyclotomicFactorization.from_dict({1: 2, 2: 1, 3: 1}).expand()
    assert exponents_from_polynomial(f) == ExponentData(6, (0, 2, 3, 4, 6))
    assert exponents_from_polynomial((X**3 - 1) ** 2) == ExponentData(3, (0, 1, 1, 2, 2, 3))


def test_degenerate_a1():
    assert exponents_from_polynomial((X - 1) ** 2) == ExponentData(1, (0, 1))
    assert affine_exponents(DiagramId("A", 1), 1) == ExponentData(1, (0, 1))


def test_exponent_errors():
    with pytest.raises(UnitMultiplicityError):
        exponents_from_polynomial((X - 1) ** 3)
    with pytest.raises(UnitMultiplicityError):
        exponents_from_polynomial((X - 1) * (X + 1))
    with pytest.raises(NotCyclotomicProduct):
        exponents_from_polynomial((X - 1) ** 2 * (X - 2))


@given(st.dictionaries(st.integers(2, 30), st.integers(1, 3), max_size=4))
def test_exponents_self_dual_and_sized(mapping):
    fac = dict(mapping)
    fac[1] = 2
    f = CyclotomicFactorization.from_dict(fac).expand()
    e = exponents_from_polynomial(f)
    assert len(e.exponents) == f.degree
    assert e.is_self_dual()
    assert 0 in e.exponents and e.h in e.exponents


def test_exponent_data_keeps_bad_inputs_constructible():
    e = ExponentData(6, (4, 0, 2))
    assert e.exponents == (0, 2, 4)
    assert not e.is_self_dual()


# --- defect -----------------------------------------------------------------


def _defect_cases():
    for id in all_affine_ids(9):
        if id.family == "A":
            for j in range(1, class_count(id.rank) + 1):
                yield id, j
        else:
            yield id, None


@pytest.mark.parametrize("id, j", list(_defect_cases()), ids=lambda v: getattr(v, "name", str(v)))
def test_defect_exact_order(id, j):
    c = cartan_matrix(id)
    word = coxeter_word(id, j)
    h = affine_exponents(id, j).h
    assert defect_check(c, word, h)
    for d in range(1, h):
        if h % d == 0:
            assert not defect_check(c, word, d)


def test_defect_examples():
    assert defect_check(cartan_matrix(DiagramId("B", 4)), range(5), 6)
    assert defect_check(cartan_matrix(DiagramId("A", 4)), an_class_representative(4, 1), 4)


@pytest.mark.parametrize("id", TREES_9, ids=lambda i: i.name)
def test_defect_wrong_h_fails(id):
    c = cartan_matrix(id)
    h = affine_exponents(id).h
    assert h >= 2
    assert not defect_check(c, range(c.size), h - 1)
