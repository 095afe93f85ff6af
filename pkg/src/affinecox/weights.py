"""Affine exponents from the finite diagram: branch-vertex deletion and coweights.

Both routes start from the finite diagram ``X_l`` and its branch vertex
``beta`` (for type A, any vertex chosen by the caller).

* Deletion: removing ``beta`` leaves a product of type-A chains
  ``A_m``; the affine Coxeter polynomial is ``(x - 1)^2`` times the
  product of their Coxeter polynomials ``(x^(m+1) - 1)/(x - 1)``.
* Coweight: the fundamental coweight at ``beta`` in the coroot basis is
  column ``beta`` of ``C^-1``.  Clearing denominators with the least
  multiplier ``c`` gives integer coefficients which, together with 0, are
  the affine exponents; the coefficient at ``beta`` is ``h``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import matrix as mx
from .coxeter import ExponentData
from .polyalgebra import Poly, poly_div_exact
from .rootdata import DiagramId, branch_vertex, cartan_matrix, delete_vertex


@dataclass(frozen=True)
class CoweightExpansion:
    branch: int  # 1-based vertex of the finite diagram
    c: int
    m: tuple[int, ...]

    @property
    def h(self) -> int:
        return self.m[self.branch - 1]


def _finite(id: DiagramId) -> DiagramId:
    return id.finite() if id.affine else id


def steinberg_polynomial(id: DiagramId, branch_choice: int | None = None) -> Poly:
    """``(x - 1)^2`` times the Coxeter polynomial of the diagram left after deleting the branch vertex."""
    fid = _finite(id)
    beta = branch_vertex(fid, branch_choice)
    reduced = delete_vertex(fid, beta)
    x_minus_1 = Poly([-1, 1])
    out = x_minus_1**2
    for comp in reduced.components:
        if comp.family != "A":
            raise ValueError(f"deleting vertex {beta} of {fid} left a non-A component {comp}")
        out = out * poly_div_exact(Poly.monomial(comp.rank + 1) - 1, x_minus_1)
    return out


def blm_expansion(id: DiagramId, branch_choice: int | None = None) -> CoweightExpansion:
    fid = _finite(id)
    beta = branch_vertex(fid, branch_choice)
    c = cartan_matrix(fid)
    rhs = [int(i == beta - 1) for i in range(c.size)]
    u = [Fraction(v) for v in mx.solve(c.entries, rhs)]
    scale = 1
    for v in u:
        scale = math.lcm(scale, v.denominator)
    return CoweightExpansion(beta, scale, tuple(int(v * scale) for v in u))


def blm_exponents(e: CoweightExpansion) -> ExponentData:
    return ExponentData(e.h, (0,) + e.m)


def a_family_coxeter_number(rank: int, branch: int) -> int:
    return branch * (rank + 1 - branch) // math.gcd(rank + 1, branch)
