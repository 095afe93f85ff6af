"""Characteristic polynomials attached to a Dynkin diagram.

For a diagram with Cartan matrix ``C`` and adjacency ``A = 2I - C``:

    p(x) = det(xI - C)          characteristic polynomial of C
    a(x) = det(xI + A)          characteristic polynomial of -A
    q(x) = det(2xI + A) = a(2x)
    Q(x) = x^n a(x + 1/x)

Each is available from exact determinants and, for the classical families,
from Chebyshev closed forms and explicit coefficient sums.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import matrix as mx
from .errors import NotBipartite, RankOutOfRange, UnsupportedFamily
from .polyalgebra import (
    ONE,
    Poly,
    X,
    chebyshev_T,
    divisors,
    psi,
    symmetrized_lift,
)
from .rootdata import CLASSICAL, DiagramId, adjacency, cartan_matrix, min_rank


def charpoly_exact(m) -> Poly:
    """``det(xI - m)`` for a square integer or rational matrix.

    Reduces to upper Hessenberg form by exact similarity transforms and
    then runs the Hessenberg determinant recurrence.  Zero entries are
    skipped throughout, so banded inputs cost close to ``O(n^2)``.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("charpoly_exact needs a square matrix")
    h = [list(row) for row in m]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k] != 0), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        p = h[k + 1][k]
        for i in range(k + 2, n):
            if h[i][k] == 0:
                continue
            t = h[i][k]
            f = t // p if isinstance(t, int) and isinstance(p, int) and t % p == 0 else Fraction(t) / p
            # row_i -= f * row_{k+1}; col_{k+1} += f * col_i
            hk = h[k + 1]
            hi = h[i]
            for j in range(n):
                if hk[j]:
                    hi[j] -= f * hk[j]
            for row in h:
                if row[i]:
                    row[k + 1] += f * row[i]
    polys = [ONE]
    for k in range(n):
        cur = (X - h[k][k]) * polys[k]
        prod = 1
        for i in range(k - 1, -1, -1):
            prod *= h[i + 1][i]
            if prod == 0:
                break
            if h[i][k]:
                cur = cur - (h[i][k] * prod) * polys[i]
        polys.append(cur)
    return polys[n]


@dataclass(frozen=True)
class SpectralBundle:
    id: DiagramId
    p: Poly
    q: Poly
    a: Poly
    Q: Poly


def bundle_from_determinants(id: DiagramId) -> SpectralBundle:
    c = cartan_matrix(id)
    p = charpoly_exact(c.entries)
    a = charpoly_exact(mx.scale(-1, adjacency(c)))
    q = a.scale_argument(2)
    return SpectralBundle(id, p, q, a, symmetrized_lift(a))


def q_closed_form(id: DiagramId) -> Poly:
    """Chebyshev closed form of ``q`` for the classical affine families."""
    if id.family not in CLASSICAL or not id.affine:
        raise UnsupportedFamily(f"no Chebyshev closed form for {id}")
    n = id.size
    T = chebyshev_T
    if id.family == "A":
        return 2 * (T(n) + (-1) ** (n - 1))
    if id.family == "B":
        return 2 * (T(n) - T(n - 4))
    if id.family == "C":
        return 2 * (T(n) - T(n - 2))
    return 8 * X**2 * (T(n - 2) - T(n - 4))


def _bundle_from_q(id: DiagramId, q: Poly) -> SpectralBundle:
    a = q.scale_argument(Fraction(1, 2))
    return SpectralBundle(id, a.shift(-2), q, a, symmetrized_lift(a))


def bundle_from_closed_form(id: DiagramId) -> SpectralBundle:
    """All four polynomials derived from :func:`q_closed_form`."""
    return _bundle_from_q(id, q_closed_form(id))


def p_coefficient_formula(family: str, n: int) -> Poly:
    """Explicit coefficient sum for ``p`` of the affine matrix of size ``n``."""
    if family not in CLASSICAL:
        raise UnsupportedFamily(f"no coefficient formula for family {family}")
    if n - 1 < min_rank(family, True):
        raise RankOutOfRange(f"{family} needs matrix size >= {min_rank(family, True) + 1}")
    fact = math.factorial
    if family == "A":
        return Poly(
            [0]
            + [
                (-1) ** (n + j) * 2 * n * fact(n + j - 1) // (fact(n - j) * fact(2 * j))
                for j in range(1, n + 1)
            ]
        )
    if family == "B":
        prefix, top, shift, sgn = X * (X - 2) * (X - 4), n - 3, 2, 1
    elif family == "C":
        prefix, top, shift, sgn = X * (X - 4), n - 2, 1, 0
    else:
        prefix, top, shift, sgn = X * (X - 2) ** 2 * (X - 4), n - 4, 3, 0
    body = Poly([(-1) ** (n + j + sgn) * math.comb(n + j - shift, 2 * j + 1) for j in range(top + 1)])
    return prefix * body


def a_psi_factorization(id: DiagramId) -> dict[int, int]:
    """Psi-index multiset whose product is ``a`` for the affine B, C and D families."""
    if id.family not in ("B", "C", "D") or not id.affine:
        raise UnsupportedFamily(f"no Psi factorization recorded for {id}")
    n = id.size
    base, extra = {"B": (2 * (n - 2), 1), "C": (2 * (n - 1), 0), "D": (2 * (n - 3), 2)}[id.family]
    counts = Counter(divisors(base))
    if extra:
        counts[4] += extra
    return dict(sorted(counts.items()))


def psi_product(indices: dict[int, int]) -> Poly:
    out = ONE
    for j, m in indices.items():
        out = out * psi(j) ** m
    return out


def is_bipartite(id: DiagramId) -> bool:
    """Trees are bipartite; the affine A cycle only when it has even length."""
    if id.family == "A" and id.affine:
        return id.size % 2 == 0
    return True


def _vanishes_to_order(poly: Poly, x: float, order: int, tol: float) -> bool:
    d = poly
    for k in range(order):
        val = sum(float(c) * x**i for i, c in enumerate(d))
        scale = max(1.0, sum(abs(float(c)) * abs(x) ** i for i, c in enumerate(d)))
        if abs(val) > tol * scale:
            return False
        d = d.derivative()
    return True


def _multiset_are_roots(poly: Poly, values: list[float], tol: float) -> bool:
    if len(values) != poly.degree:
        return False
    groups: list[list[float]] = []
    for v in sorted(values):
        if groups and abs(v - groups[-1][0]) <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    # every candidate is a root with at least its claimed multiplicity; the
    # multiplicities add up to the degree, so the multisets coincide
    return all(_vanishes_to_order(poly, g[0], len(g), tol) for g in groups)


def spectrum_numeric_check(bundle: SpectralBundle, exps, tol: float = 1e-9) -> bool:
    """Check the cosine formulas for the roots of ``a`` and ``p`` against ``exps``.

    ``exps`` is an :class:`~affinecox.coxeter.ExponentData`.  The roots of
    ``a`` must be ``2cos(m pi / h)`` and those of ``p`` must be
    ``4cos^2(m pi / 2h)`` as multisets.
    """
    if not is_bipartite(bundle.id):
        raise NotBipartite(f"{bundle.id} has an odd cycle")
    h = exps.h
    adj = [2 * math.cos(m * math.pi / h) for m in exps.exponents]
    cart = [4 * math.cos(m * math.pi / (2 * h)) ** 2 for m in exps.exponents]
    return _multiset_are_roots(bundle.a, adj, tol) and _multiset_are_roots(bundle.p, cart, tol)
