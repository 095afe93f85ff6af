"""Reference tables of affine exponents and Coxeter polynomials in closed form.

Rows come from the classical closed-form descriptions, not from any matrix
computation, so they serve as an independent check on :mod:`coxeter` and
:mod:`weights`.  Symbolic rows (``B_n``, ``A_n`` class ``j``, ...) are
instantiated at every concrete rank up to ``max_rank``.

A few entries of the commonly printed tables are wrong and are corrected
here (see :data:`ERRATA`); pass ``corrected=False`` to get the printed
values back.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coxeter import ExponentData, class_count
from .polyalgebra import (
    CyclotomicFactorization,
    Poly,
    divisors,
    parse_factorization,
    parse_poly,
)
from .rootdata import CLASSICAL, DiagramId, min_rank

EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


@dataclass(frozen=True)
class TableRow:
    id: DiagramId
    class_index: int | None = None
    polynomial: Poly | None = None
    factors: CyclotomicFactorization | None = None
    exponents: ExponentData | None = None
    comment: str = field(default="", compare=False)


# ---------------------------------------------------------------------------
# affine exponents


def _a_exponents(rank: int, j: int) -> ExponentData:
    d = math.gcd(rank + 1, j)
    k, nj = (rank + 1 - j) // d, j // d
    exps = [k * t for t in range(j + 1)] + [nj * t for t in range(1, rank - j + 1)]
    return ExponentData(j * k, tuple(exps))


def _classical_exponents(family: str, rank: int) -> ExponentData:
    if family == "B":
        if rank % 2:
            n = rank // 2
            return ExponentData(2 * n, tuple(range(2 * n + 1)) + (n,))
        n = rank // 2
        return ExponentData(2 * (2 * n - 1), tuple(range(0, 2 * (2 * n - 1) + 1, 2)) + (2 * n - 1,))
    if family == "C":
        return ExponentData(rank, tuple(range(rank + 1)))
    if family == "D":
        if rank % 2:
            n = rank // 2
            return ExponentData(
                2 * (2 * n - 1), tuple(range(0, 2 * (2 * n - 1) + 1, 2)) + (2 * n - 1,) * 2
            )
        n = rank // 2
        return ExponentData(2 * n - 2, tuple(range(2 * n - 1)) + (n - 1,) * 2)
    raise ValueError(f"family {family} has no symbolic exponent row")


EXCEPTIONAL_EXPONENTS = {
    "E6": ExponentData(6, (0, 2, 2, 3, 4, 4, 6)),
    "E7": ExponentData(12, (0, 3, 4, 6, 6, 8, 9, 12)),
    "E8": ExponentData(30, (0, 6, 10, 12, 15, 18, 20, 24, 30)),
    "F4": ExponentData(6, (0, 2, 3, 4, 6)),
    "G2": ExponentData(2, (0, 1, 2)),
}


def _ids(max_rank: int):
    for fam in CLASSICAL:
        for r in range(min_rank(fam, True), max_rank + 1):
            yield DiagramId(fam, r)
    for fam in EXCEPTIONAL:
        yield DiagramId(fam)


def table1_rows(max_rank: int) -> list[TableRow]:
    rows = []
    for id in _ids(max_rank):
        if id.family == "A":
            for j in range(1, class_count(id.rank) + 1):
                rows.append(TableRow(id, j, exponents=_a_exponents(id.rank, j)))
        elif id.is_exceptional:
            rows.append(TableRow(id, exponents=EXCEPTIONAL_EXPONENTS[id.family]))
        else:
            rows.append(TableRow(id, exponents=_classical_exponents(id.family, id.rank)))
    return rows


# ---------------------------------------------------------------------------
# Coxeter polynomials


def _xk_minus_1(k: int) -> Poly:
    return Poly.monomial(k) - 1


def _phi_all(n: int) -> dict[int, int]:
    return {d: 1 for d in divisors(n)}


def _merge(*parts: dict[int, int]) -> CyclotomicFactorization:
    out: dict[int, int] = {}
    for p in parts:
        for d, m in p.items():
            out[d] = out.get(d, 0) + m
    return CyclotomicFactorization.from_dict(out)


def _classical_coxeter(family: str, rank: int, j: int | None = None):
    if family == "A":
        i = j
        return (
            _xk_minus_1(i) * _xk_minus_1(rank + 1 - i),
            _merge(_phi_all(i), _phi_all(rank + 1 - i)),
        )
    if family == "B":
        return _xk_minus_1(rank - 1) * _xk_minus_1(2), _merge({1: 1, 2: 1}, _phi_all(rank - 1))
    if family == "C":
        return _xk_minus_1(rank) * _xk_minus_1(1), _merge({1: 1}, _phi_all(rank))
    x_plus_1 = Poly([1, 1])
    return (
        _xk_minus_1(rank - 2) * _xk_minus_1(1) * x_plus_1**2,
        _merge({1: 1, 2: 2}, _phi_all(rank - 2)),
    )


PRINTED_EXCEPTIONAL_COXETER = {
    "E6": ("x^7+x^6-2x^4-2x^3+x+1", "Phi_1^2 Phi_2 Phi_3^2"),
    "E7": ("x^8+x^7-x^5-2x^4-x^3+x+1", "Phi_1^2 Phi_2^2 Phi_3 Phi_4^2"),
    "E8": ("x^9+x^8-x^6-x^5-x^4-x^3+x+1", "Phi_1^2 Phi_2 Phi_3 Phi_5"),
    "F4": ("x^5-x^3-x^2+1", "Phi_1^2 Phi_2 Phi_3"),
    "G2": ("x^3-x^2-x+1", "Phi_1^2 Phi_2"),
}

#: (table, key) -> (corrected value, reason)
ERRATA = {
    (2, "E7"): (
        "Phi_1^2 Phi_2^2 Phi_3 Phi_4",
        "printed factor list has degree 10; the degree-8 polynomial has a single Phi_4",
    ),
    (3, (3, 1)): (
        "Phi_1^2 Phi_3",
        "printed as (x-1)(x^2-1)=Phi_1^2 Phi_2; the polynomial x^4-x^3-x+1 is (x-1)(x^3-1)",
    ),
    ("spectra", "F4", "p"): (
        "x^5-10x^4+35x^3-50x^2+24x",
        "printed p of F4^(1) has nonzero constant term, impossible for a singular matrix",
    ),
}


def table2_rows(max_rank: int, corrected: bool = True) -> list[TableRow]:
    rows = []
    for id in _ids(max_rank):
        if id.is_exceptional:
            poly_s, fac_s = PRINTED_EXCEPTIONAL_COXETER[id.family]
            comment = ""
            if corrected and (2, id.family) in ERRATA:
                fac_s, comment = ERRATA[(2, id.family)]
            rows.append(
                TableRow(id, None, parse_poly(poly_s), parse_factorization(fac_s), comment=comment)
            )
        elif id.family == "A":
            for j in range(1, class_count(id.rank) + 1):
                f, fac = _classical_coxeter("A", id.rank, j)
                rows.append(TableRow(id, j, f, fac))
        else:
            f, fac = _classical_coxeter(id.family, id.rank)
            rows.append(TableRow(id, None, f, fac))
    return rows


#: rank -> [(class, polynomial, (i, rank + 1 - i), factorization)] as usually printed
PRINTED_TABLE3 = {
    3: [
        (1, "x^4-x^3-x+1", (1, 2), "Phi_1^2 Phi_2"),
        (2, "x^4-2x^2+1", (2, 2), "Phi_1^2 Phi_2^2"),
    ],
    4: [
        (1, "x^5-x^4-x+1", (1, 4), "Phi_1^2 Phi_2 Phi_4"),
        (2, "x^5-x^3-x^2+1", (2, 3), "Phi_1^2 Phi_2 Phi_3"),
    ],
    5: [
        (1, "x^6-x^5-x+1", (1, 5), "Phi_1^2 Phi_5"),
        (2, "x^6-x^4-x^2+1", (2, 4), "Phi_1^2 Phi_2^2 Phi_4"),
        (3, "x^6-2x^3+1", (3, 3), "Phi_1^2 Phi_3^2"),
    ],
    6: [
        (1, "x^7-x^6-x+1", (1, 6), "Phi_1^2 Phi_2 Phi_3 Phi_6"),
        (2, "x^7-x^5-x^2+1", (2, 5), "Phi_1^2 Phi_2 Phi_5"),
        (3, "x^7-x^4-x^3+1", (3, 4), "Phi_1^2 Phi_2 Phi_3 Phi_4"),
    ],
    7: [
        (1, "x^8-x^7-x+1", (1, 7), "Phi_1^2 Phi_7"),
        (2, "x^8-x^6-x^2+1", (2, 6), "Phi_1^2 Phi_2^2 Phi_3 Phi_6"),
        (3, "x^8-x^5-x^3+1", (3, 5), "Phi_1^2 Phi_3 Phi_5"),
        (4, "x^8-2x^4+1", (4, 4), "Phi_1^2 Phi_2^2 Phi_4^2"),
    ],
    8: [
        (1, "x^9-x^8-x+1", (1, 8), "Phi_1^2 Phi_2 Phi_4 Phi_8"),
        (2, "x^9-x^7-x^2+1", (2, 7), "Phi_1^2 Phi_2 Phi_7"),
        (3, "x^9-x^6-x^3+1", (3, 6), "Phi_1^2 Phi_2 Phi_3^2 Phi_6"),
        (4, "x^9-x^5-x^4+1", (4, 5), "Phi_1^2 Phi_2 Phi_4 Phi_5"),
    ],
}


def table3_printed(corrected: bool = True) -> list[TableRow]:
    rows = []
    for rank, entries in PRINTED_TABLE3.items():
        for j, poly_s, _, fac_s in entries:
            comment = ""
            if corrected and (3, (rank, j)) in ERRATA:
                fac_s, comment = ERRATA[(3, (rank, j))]
            rows.append(
                TableRow(DiagramId("A", rank), j, parse_poly(poly_s), parse_factorization(fac_s), comment=comment)
            )
    return rows


def table3_rows(max_rank: int) -> list[TableRow]:
    """Closed-form ``(x^j - 1)(x^(l+1-j) - 1)`` rows for every class of ``A_l``, ``l <= max_rank``."""
    rows = []
    for rank in range(1, max_rank + 1):
        for j in range(1, class_count(rank) + 1):
            f, fac = _classical_coxeter("A", rank, j)
            comment = ERRATA.get((3, (rank, j)), (None, ""))[1]
            rows.append(TableRow(DiagramId("A", rank), j, f, fac, comment=comment))
    return rows


# ---------------------------------------------------------------------------
# exceptional spectral data


#: family -> printed p, a, Coxeter polynomial (as listed with the diagram)
PRINTED_EXCEPTIONAL_SPECTRA = {
    "E6": {
        "p": "x^7-14x^6+78x^5-220x^4+329x^3-246x^2+72x",
        "a": "x^7-6x^5+9x^3-4x",
        "f": "x^7+x^6-2x^4-2x^3+x+1",
    },
    "E7": {
        "p": "x^8-16x^7+105x^6-364x^5+714x^4-784x^3+440x^2-96x",
        "a": "x^8-7x^6+14x^4-8x^2",
        "f": "x^8+x^7-x^5-2x^4-x^3+x+1",
    },
    "E8": {
        "p": "x^9-18x^8+136x^7-560x^6+1364x^5-1992x^4+1679x^3-730x^2+120x",
        "a": "x^9-8x^7+20x^5-17x^3+4x",
        "f": "x^9+x^8-x^6-x^5-x^4-x^3+x+1",
    },
    "F4": {
        "p": "x^5-10x^4+33x^3-38x^2+2x+12",
        "a": "x^5-5x^3+4x",
        "f": "x^5-x^3-x^2+1",
    },
    "G2": {
        "p": "x^3-6x^2+8x",
        "a": "x^3-4x",
        "f": "x^3-x^2-x+1",
    },
}
