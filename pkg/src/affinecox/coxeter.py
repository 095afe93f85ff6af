"""Reflections, Coxeter elements and affine exponents.

Matrices act on column coordinate vectors in the simple-root basis.  A
Coxeter word lists vertices in the order their reflections are applied,
so the word ``(w0, w1, ..., wn)`` gives the matrix ``S[wn] ... S[w1] S[w0]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import matrix as mx
from .errors import (
    ClassIndexForbidden,
    ClassIndexOutOfRange,
    ClassIndexRequired,
    UnitMultiplicityError,
)
from .polyalgebra import Poly, factor_cyclotomic
from .rootdata import CartanMatrix, DiagramId, cartan_matrix, marks
from .spectra import charpoly_exact


@dataclass(frozen=True)
class ExponentData:
    """Affine Coxeter number ``h`` and the sorted multiset of affine exponents."""

    h: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents)))

    def is_self_dual(self) -> bool:
        return sorted(self.h - m for m in self.exponents) == list(self.exponents)

    def __str__(self):
        return f"h={self.h} exponents={list(self.exponents)}"


def reflection_matrix(c: CartanMatrix, i: int):
    """Matrix of ``s_i``: column ``j`` is ``e_j - C[j][i] e_i``."""
    n = c.size
    e = c.entries
    return tuple(
        tuple((int(r == j) - (e[j][i] if r == i else 0)) for j in range(n)) for r in range(n)
    )


def _check_word(word: Sequence[int], n: int) -> None:
    if sorted(word) != list(range(n)):
        raise ValueError(f"word {tuple(word)} is not a permutation of 0..{n - 1}")


def coxeter_element(c: CartanMatrix, word: Sequence[int]):
    _check_word(word, c.size)
    m = mx.identity(c.size)
    for i in word:
        m = mx.matmul(reflection_matrix(c, i), m)
    return m


def class_count(rank: int) -> int:
    """Number of conjugacy classes of Coxeter elements of the affine A cycle."""
    return (rank + 1) // 2


def an_class_representative(rank: int, j: int) -> tuple[int, ...]:
    """Coxeter word for class ``j`` of ``A_rank^(1)``.

    Runs ``0, 1, ..., rank - j`` upward and then ``rank, ..., rank - j + 1``
    downward, so exactly ``j`` edges of the cycle are oriented against the
    rest.  Its characteristic polynomial is ``(x^j - 1)(x^(rank+1-j) - 1)``;
    :func:`coxeter_polynomial` checks this on every call.
    """
    if not 1 <= j <= class_count(rank):
        raise ClassIndexOutOfRange(f"class index {j} outside 1..{class_count(rank)}")
    return tuple(range(rank - j + 1)) + tuple(range(rank, rank - j, -1))


def coxeter_word(id: DiagramId, class_index: int | None = None) -> tuple[int, ...]:
    if id.family == "A" and id.affine:
        if class_index is None:
            raise ClassIndexRequired(f"{id} has {class_count(id.rank)} Coxeter classes; pick one")
        return an_class_representative(id.rank, class_index)
    if class_index is not None:
        raise ClassIndexForbidden(f"{id} is a tree; its Coxeter elements are all conjugate")
    return tuple(range(id.size))


def an_class_polynomial(rank: int, j: int) -> Poly:
    return (Poly.monomial(j) - 1) * (Poly.monomial(rank + 1 - j) - 1)


def coxeter_polynomial(id: DiagramId, class_index: int | None = None) -> Poly:
    """Characteristic polynomial of a Coxeter element, from exact reflection products."""
    word = coxeter_word(id, class_index)
    f = charpoly_exact(coxeter_element(cartan_matrix(id), word))
    if id.family == "A" and id.affine:
        expected = an_class_polynomial(id.rank, class_index)
        if f != expected:
            raise AssertionError(
                f"class {class_index} word {word} of {id} gave {f}, expected {expected}"
            )
    return f


def exponents_from_polynomial(f: Poly) -> ExponentData:
    """Affine exponents and Coxeter number from an affine Coxeter polynomial.

    ``h`` is the lcm of the cyclotomic indices above 1; every ``Phi_d``
    contributes ``h*k/d`` for the ``k`` coprime to ``d``, and the
    forced ``(x - 1)^2`` contributes ``0`` and ``h``.
    """
    fac = factor_cyclotomic(f)
    if fac.multiplicity(1) != 2:
        raise UnitMultiplicityError(
            f"(x - 1) divides {f} {fac.multiplicity(1)} times; an affine Coxeter polynomial needs 2"
        )
    h = 1
    for d in fac.indices():
        if d > 1:
            h = math.lcm(h, d)
    exps = [0, h]
    for d, m in fac.factors:
        if d == 1:
            continue
        for k in range(1, d):
            if math.gcd(k, d) == 1:
                exps.extend([h * k // d] * m)
    return ExponentData(h, tuple(exps))


def affine_exponents(id: DiagramId, class_index: int | None = None) -> ExponentData:
    return exponents_from_polynomial(coxeter_polynomial(id, class_index))


def defect_check(c: CartanMatrix, word: Sequence[int], h: int) -> bool:
    """True iff ``sigma^h - I`` sends every basis vector onto the marks line (integrally)."""
    z = marks(c)
    d = mx.sub(mx.matpow(coxeter_element(c, word), h), mx.identity(c.size))
    for col in mx.transpose(d):
        k, r = divmod(col[0], z[0])
        if r or any(col[i] != k * z[i] for i in range(len(z))):
            return False
    return True
