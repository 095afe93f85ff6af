import pytest
import sympy

from affinecox import matrix as mx
from affinecox.errors import ChoiceForbidden, ChoiceRequired, KernelDimensionError, RankOutOfRange
from affinecox.rootdata import (
    CartanMatrix,
    DiagramId,
    adjacency,
    all_affine_ids,
    branch_vertex,
    branch_weights,
    cartan_matrix,
    classify_finite,
    delete_vertex,
    marks,
)

AFFINE_12 = all_affine_ids(12)


def ids_param(ids):
    return pytest.mark.parametrize("id", ids, ids=[i.name for i in ids])


# --- DiagramId --------------------------------------------------------------


@pytest.mark.parametrize(
    "family, rank, affine",
    [("A", 0, True), ("B", 2, True), ("B", 1, False), ("C", 1, True), ("D", 3, True), ("E7", 6, True), ("H", 3, True)],
)
def test_rank_bounds(family, rank, affine):
    with pytest.raises(RankOutOfRange):
        DiagramId(family, rank, affine)


def test_exceptional_rank_implied():
    assert DiagramId("E8").rank == 8
    assert DiagramId("e", 6) == DiagramId("E6")
    assert DiagramId("G2").size == 3
    assert DiagramId("G2", affine=False).size == 2


def test_names():
    assert DiagramId("A", 4).name == "A4^(1)"
    assert DiagramId("B", 4, False).name == "B4"
    assert DiagramId("F4").name == "F4^(1)"


# --- Cartan matrices --------------------------------------------------------


def test_a2_affine_matrix():
    assert cartan_matrix(DiagramId("A", 2)).entries == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_g2_affine_matrix():
    assert cartan_matrix(DiagramId("G2")).entries == ((2, -1, 0), (-1, 2, -3), (0, -1, 2))


def test_b4_finite_matrix():
    e = cartan_matrix(DiagramId("B", 4, False)).entries
    assert len(e) == 4
    assert e[2][3] == -2 and e[3][2] == -1
    assert all(e[i][j] == 0 for i in range(4) for j in range(4) if abs(i - j) > 1)
    assert mx.determinant(e) > 0


def test_finite_is_affine_minus_vertex_zero():
    for id in AFFINE_12:
        if id.family == "A" and id.rank == 1:
            continue
        aff = cartan_matrix(id).entries
        fin = cartan_matrix(id.finite()).entries
        assert fin == mx.submatrix(aff, range(1, id.size))


@ids_param(AFFINE_12)
def test_generalized_cartan_axioms(id):
    e = cartan_matrix(id).entries
    n = len(e)
    for i in range(n):
        assert e[i][i] == 2
        for j in range(n):
            if i != j:
                assert e[i][j] <= 0
                assert (e[i][j] == 0) == (e[j][i] == 0)


@ids_param(AFFINE_12)
def test_affine_determinant_and_minors(id):
    e = cartan_matrix(id).entries
    assert sympy.Matrix(e).det() == 0
    for v in range(len(e)):
        assert mx.determinant(mx.principal_minor(e, [v])) > 0


@ids_param(AFFINE_12)
def test_finite_positive_determinant(id):
    fid = id.finite()
    assert sympy.Matrix(cartan_matrix(fid).entries).det() > 0


@ids_param(AFFINE_12)
def test_adjacency_complements(id):
    c = cartan_matrix(id)
    a = adjacency(c)
    assert mx.add(c.entries, a) == mx.scale(2, mx.identity(c.size))
    assert all(a[i][i] == 0 for i in range(c.size))
    assert all(v >= 0 for row in a for v in row)


def test_adjacency_examples():
    assert adjacency(cartan_matrix(DiagramId("G2"))) == ((0, 1, 0), (1, 0, 3), (0, 1, 0))
    a = adjacency(cartan_matrix(DiagramId("A", 5, False)))
    assert all(a[i][j] == (1 if abs(i - j) == 1 else 0) for i in range(5) for j in range(5))


# --- marks ------------------------------------------------------------------


@ids_param(AFFINE_12)
def test_marks_left_kernel(id):
    c = cartan_matrix(id)
    z = marks(c)
    assert mx.vecmat(z, c.entries) == (0,) * c.size
    assert all(v > 0 for v in z)
    assert sympy.gcd(list(z)) == 1


def test_marks_examples():
    assert marks(cartan_matrix(DiagramId("A", 6))) == (1,) * 7
    assert marks(cartan_matrix(DiagramId("G2"))) == (1, 2, 3)
    assert sorted(marks(cartan_matrix(DiagramId("D", 4)))) == [1, 1, 1, 1, 2]


def test_marks_rejects_corrupted_matrix():
    bad = CartanMatrix(((2, -1), (-1, 2)), DiagramId("A", 2, False))
    with pytest.raises(KernelDimensionError):
        marks(bad)


# --- branch vertices --------------------------------------------------------


def test_branch_vertex_d6_is_trivalent():
    fid = DiagramId("D", 6, False)
    v = branch_vertex(fid)
    e = cartan_matrix(fid).entries
    assert sum(1 for j in range(6) if j != v - 1 and e[v - 1][j]) == 3


def test_branch_vertex_c_is_long_root_end():
    for l in range(2, 10):
        fid = DiagramId("C", l, False)
        v = branch_vertex(fid)
        assert -2 in cartan_matrix(fid).entries[v - 1]
        assert v in (1, l)


def test_branch_vertex_f4_interior_with_double_bond():
    fid = DiagramId("F4", affine=False)
    v = branch_vertex(fid)
    assert v not in (1, 4)
    assert -2 in cartan_matrix(fid).entries[v - 1]
    assert sorted(c.rank for c in delete_vertex(fid, v).components) == [1, 2]


def test_branch_choice_rules():
    with pytest.raises(ChoiceRequired):
        branch_vertex(DiagramId("A", 4, False))
    with pytest.raises(ChoiceForbidden):
        branch_vertex(DiagramId("B", 4, False), 2)
    assert branch_vertex(DiagramId("A", 4, False), 2) == 2


def test_a_weights_constant():
    for l in range(2, 13):
        assert set(branch_weights(cartan_matrix(DiagramId("A", l, False)))) == {2}
    # a lone vertex has no neighbors, so no leaf bonus
    assert branch_weights(cartan_matrix(DiagramId("A", 1, False))) == [0]


def _ranks(fid):
    return sorted((c.family, c.rank) for c in delete_vertex(fid, branch_vertex(fid)).components)


def test_branch_deletion_shapes():
    for l in range(3, 13):
        assert _ranks(DiagramId("B", l, False)) == sorted([("A", 1), ("A", l - 2)])
        assert _ranks(DiagramId("C", l, False)) == [("A", l - 1)]
    for l in range(4, 13):
        expect = sorted([("A", 1), ("A", 1), ("A", l - 3)])
        assert _ranks(DiagramId("D", l, False)) == expect


def test_delete_vertex_examples():
    assert _ranks(DiagramId("E8", affine=False)) == [("A", 1), ("A", 2), ("A", 4)]
    got = delete_vertex(DiagramId("A", 4, False), 2)
    assert sorted(c.rank for c in got.components) == [1, 2]
    assert delete_vertex(DiagramId("A", 1, False), 1).components == ()


# --- classification ---------------------------------------------------------


@ids_param(AFFINE_12)
def test_classify_roundtrip(id):
    fid = id.finite()
    got = classify_finite(cartan_matrix(fid).entries)
    # B2 and C2 differ only by relabeling the two vertices
    expect = DiagramId("B", 2, False) if fid == DiagramId("C", 2, False) else fid
    assert got == expect
