"""Cross-verification suites.

Each suite compares two independent routes to the same object over a range
of diagrams and yields ``(case, ok)`` pairs.  :func:`run_suites` collects
per-suite counts in a fixed order so the report is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .coxeter import (
    affine_exponents,
    class_count,
    coxeter_polynomial,
    coxeter_word,
    defect_check,
    exponents_from_polynomial,
)
from .errors import AffineCoxError
from .polyalgebra import Poly, cyclotomic, factor_cyclotomic, psi, symmetrized_lift, totient
from .rootdata import CLASSICAL, DiagramId, all_affine_ids, cartan_matrix, min_rank
from .spectra import (
    a_psi_factorization,
    bundle_from_closed_form,
    bundle_from_determinants,
    is_bipartite,
    p_coefficient_formula,
    psi_product,
    spectrum_numeric_check,
)
from .tables import table1_rows, table2_rows, table3_printed
from .weights import blm_expansion, blm_exponents, steinberg_polynomial

Case = tuple[str, bool]

PSI_MAX_INDEX = 100


def _classical_ids(max_rank: int) -> Iterator[DiagramId]:
    for fam in CLASSICAL:
        for r in range(min_rank(fam, True), max_rank + 1):
            yield DiagramId(fam, r)


def _with_classes(ids) -> Iterator[tuple[DiagramId, int | None]]:
    for id in ids:
        if id.family == "A":
            for j in range(1, class_count(id.rank) + 1):
                yield id, j
        else:
            yield id, None


def _label(id: DiagramId, j: int | None = None) -> str:
    return f"{id.name} class {j}" if j is not None else id.name


def suite_theorem1(max_rank: int) -> Iterator[Case]:
    for id in _classical_ids(max_rank):
        yield _label(id), bundle_from_closed_form(id).q == bundle_from_determinants(id).q


def suite_props(max_rank: int) -> Iterator[Case]:
    for id in _classical_ids(max_rank):
        det = bundle_from_determinants(id)
        n = id.size
        yield f"{id.name} p formula", p_coefficient_formula(id.family, n) == det.p
        yield f"{id.name} notation", (
            det.p == det.a.shift(-2)
            and det.q == det.a.scale_argument(2)
            and det.Q == symmetrized_lift(det.a)
            and det.p[0] == 0
        )
        xk = lambda k: Poly.monomial(k) - 1
        if id.family == "A":
            closed = (Poly.monomial(n) + (-1) ** (n - 1)) ** 2
        elif id.family == "B":
            closed = xk(4) * xk(2 * (n - 2))
        elif id.family == "C":
            closed = xk(2 * (n - 1)) * xk(2)
        else:
            closed = xk(4) * Poly([1, 0, 1]) * xk(2 * (n - 3))
        yield f"{id.name} Q closed form", det.Q == closed


def suite_psi(max_rank: int) -> Iterator[Case]:
    for n in range(1, PSI_MAX_INDEX + 1):
        ps = psi(n)
        if n <= 2:
            # roots 2cos(0) = 2 and 2cos(pi) = -2
            yield f"Psi_{n} root", ps.degree == 1 and ps(2 if n == 1 else -2) == 0
            continue
        half = totient(n) // 2
        yield f"Psi_{n} identity", ps.degree == half and symmetrized_lift(ps) == cyclotomic(n)
    for id in _classical_ids(max_rank):
        if id.family == "A":
            continue
        yield f"{id.name} Psi product", psi_product(a_psi_factorization(id)) == bundle_from_determinants(id).a


def suite_tables(max_rank: int) -> Iterator[Case]:
    for row in table1_rows(max_rank):
        yield f"table1 {_label(row.id, row.class_index)}", affine_exponents(row.id, row.class_index) == row.exponents
    for row in table2_rows(max_rank):
        f = coxeter_polynomial(row.id, row.class_index)
        yield f"table2 {_label(row.id, row.class_index)}", f == row.polynomial and factor_cyclotomic(f) == row.factors
    for row in table3_printed():
        f = coxeter_polynomial(row.id, row.class_index)
        yield f"table3 {_label(row.id, row.class_index)}", f == row.polynomial and factor_cyclotomic(f) == row.factors


def suite_threeway(max_rank: int) -> Iterator[Case]:
    for id, j in _with_classes(all_affine_ids(max_rank)):
        cox = affine_exponents(id, j)
        blm = blm_exponents(blm_expansion(id, j))
        stein = exponents_from_polynomial(steinberg_polynomial(id, j))
        yield _label(id, j), cox == blm == stein and cox.is_self_dual()


def suite_moody_square(max_rank: int) -> Iterator[Case]:
    for id in all_affine_ids(max_rank):
        if not is_bipartite(id):
            continue
        j = class_count(id.rank) if id.family == "A" else None
        b = bundle_from_determinants(id)
        f = coxeter_polynomial(id, j)
        sign = (-1) ** b.a.degree
        yield f"{id.name} Q = f(x^2)", b.Q == f(Poly([0, 0, 1]))
        yield f"{id.name} a(-x) = +-a(x)", b.a.scale_argument(-1) == sign * b.a
        yield f"{id.name} spectrum", spectrum_numeric_check(b, exponents_from_polynomial(f))


def suite_defect(max_rank: int) -> Iterator[Case]:
    for id, j in _with_classes(all_affine_ids(max_rank)):
        c = cartan_matrix(id)
        word = coxeter_word(id, j)
        h = affine_exponents(id, j).h
        ok = defect_check(c, word, h)
        ok = ok and not any(defect_check(c, word, d) for d in range(1, h) if h % d == 0)
        yield _label(id, j), ok


SUITES: dict[str, Callable[[int], Iterator[Case]]] = {
    "theorem1": suite_theorem1,
    "props": suite_props,
    "psi": suite_psi,
    "tables": suite_tables,
    "threeway": suite_threeway,
    "moody_square": suite_moody_square,
    "defect": suite_defect,
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(name: str, max_rank: int) -> SuiteResult:
    res = SuiteResult(name)
    try:
        for case, ok in SUITES[name](max_rank):
            if ok:
                res.passed += 1
            else:
                res.failures.append(case)
    except AffineCoxError as exc:
        # a route refusing its input counts as a failed case, not a crash
        res.failures.append(f"{type(exc).__name__}: {exc}")
    return res


def run_suites(max_rank: int, names=None) -> list[SuiteResult]:
    names = list(SUITES) if not names else [n for n in SUITES if n in set(names)]
    return [run_suite(n, max_rank) for n in names]
