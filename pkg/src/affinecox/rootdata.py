"""Dynkin diagrams and their (generalized) Cartan matrices.

Vertex numbering is fixed once for the whole package.  An affine diagram
of rank ``l`` has vertices ``0..l`` with the affine node at index 0; the
finite diagram of the same type is the affine one with vertex 0 removed,
so finite vertex ``k`` (1-based) sits in row ``k - 1`` of the finite
matrix.

    A   cycle 0-1-...-l-0
    B   0 and 1 both joined to 2, chain 2-...-l, C[l-1][l] = -2
    C   chain 0-...-l, C[0][1] = -2, C[l][l-1] = -2
    D   0 and 1 joined to 2, chain 2-...-(l-2), then l-1 and l joined to l-2
    E   tables below, affine node at the end of the longest arm
    F4  chain 0-1-2-3-4 with C[2][3] = -2
    G2  chain 0-1-2 with C[1][2] = -3
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import matrix as mx
from .errors import (
    ChoiceForbidden,
    ChoiceRequired,
    KernelDimensionError,
    RankOutOfRange,
)

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
CLASSICAL = ("A", "B", "C", "D")


def min_rank(family: str, affine: bool) -> int:
    if family in FIXED_RANK:
        return FIXED_RANK[family]
    return {"A": 1, "B": 3 if affine else 2, "C": 2, "D": 4}[family]


@dataclass(frozen=True, order=True)
class DiagramId:
    """Names a finite or untwisted affine Dynkin diagram."""

    family: str
    rank: int = 0
    affine: bool = True

    def __post_init__(self):
        fam = self.family.upper()
        if fam in ("E", "F", "G") and self.rank:
            fam = f"{fam}{self.rank}"
        if fam not in FAMILIES:
            raise RankOutOfRange(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        if fam in FIXED_RANK:
            if self.rank not in (0, FIXED_RANK[fam]):
                raise RankOutOfRange(f"{fam} has rank {FIXED_RANK[fam]}, got {self.rank}")
            object.__setattr__(self, "rank", FIXED_RANK[fam])
        lo = min_rank(fam, self.affine)
        if not isinstance(self.rank, int) or self.rank < lo:
            kind = "affine" if self.affine else "finite"
            raise RankOutOfRange(f"{kind} {fam} needs rank >= {lo}, got {self.rank}")

    @property
    def size(self) -> int:
        """Matrix dimension."""
        return self.rank + 1 if self.affine else self.rank

    @property
    def is_exceptional(self) -> bool:
        return self.family in FIXED_RANK

    @property
    def letter(self) -> str:
        return self.family[0]

    def finite(self) -> DiagramId:
        return DiagramId(self.family, self.rank, affine=False)

    def to_affine(self) -> DiagramId:
        return DiagramId(self.family, self.rank, affine=True)

    @property
    def name(self) -> str:
        base = self.family if self.is_exceptional else f"{self.family}{self.rank}"
        return f"{base}^(1)" if self.affine else base

    def __str__(self):
        return self.name


def all_affine_ids(max_rank: int, families=FAMILIES) -> list[DiagramId]:
    """Every affine id with rank at most ``max_rank`` (exceptional ones included when they fit)."""
    out = []
    for fam in families:
        if fam in FIXED_RANK:
            if FIXED_RANK[fam] <= max_rank:
                out.append(DiagramId(fam))
        else:
            out.extend(DiagramId(fam, r) for r in range(min_rank(fam, True), max_rank + 1))
    return out


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple
    id: DiagramId

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class FiniteProduct:
    """Connected components of a finite diagram after deleting vertices."""

    components: tuple[DiagramId, ...]
    vertex_sets: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def ranks_of(self, family: str) -> list[int]:
        return sorted(c.rank for c in self.components if c.family == family)


# Exceptional affine matrices, affine node first.
_E6 = (
    (2, 0, 0, 0, 0, 0, -1),
    (0, 2, -1, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, -1, 2, 0),
    (-1, 0, 0, -1, 0, 0, 2),
)
_E7 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, -1),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, -1, 0, 0, 0, 2),
)
_E8 = (
    (2, 0, 0, 0, 0, 0, 0, -1, 0),
    (0, 2, -1, 0, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, 0, -1, 2, -1, 0),
    (-1, 0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, -1, 0, 0, 0, 0, 2),
)
_F4 = (
    (2, -1, 0, 0, 0),
    (-1, 2, -1, 0, 0),
    (0, -1, 2, -2, 0),
    (0, 0, -1, 2, -1),
    (0, 0, 0, -1, 2),
)
_G2 = (
    (2, -1, 0),
    (-1, 2, -3),
    (0, -1, 2),
)
_EXCEPTIONAL = {"E6": _E6, "E7": _E7, "E8": _E8, "F4": _F4, "G2": _G2}


def _from_bonds(n: int, bonds) -> tuple:
    """Build a matrix from ``(i, j, C_ij, C_ji)`` bonds; repeated bonds accumulate."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in bonds:
        c[i][j] += cij
        c[j][i] += cji
    return mx.freeze(c)


def _classical_affine(family: str, l: int) -> tuple:
    n = l + 1
    if family == "A":
        bonds = [(k, (k + 1) % n, -1, -1) for k in range(n)]
    elif family == "B":
        bonds = [(0, 2, -1, -1), (1, 2, -1, -1)]
        bonds += [(k, k + 1, -2 if k == l - 1 else -1, -1) for k in range(2, l)]
    elif family == "C":
        bonds = [(0, 1, -2, -1)]
        bonds += [(k, k + 1, -1, -2 if k == l - 1 else -1) for k in range(1, l)]
    else:  # D
        bonds = [(0, 2, -1, -1), (1, 2, -1, -1)]
        bonds += [(k, k + 1, -1, -1) for k in range(2, l - 2)]
        bonds += [(l - 2, l - 1, -1, -1), (l - 2, l, -1, -1)]
    return _from_bonds(n, bonds)


def _classical_finite(family: str, l: int) -> tuple:
    # vertex k lives in row k - 1
    if family == "A":
        bonds = [(k, k + 1, -1, -1) for k in range(l - 1)]
    elif family == "B":
        bonds = [(k, k + 1, -2 if k == l - 2 else -1, -1) for k in range(l - 1)]
    elif family == "C":
        bonds = [(k, k + 1, -1, -2 if k == l - 2 else -1) for k in range(l - 1)]
    else:  # D
        bonds = [(k, k + 1, -1, -1) for k in range(l - 3)]
        bonds += [(l - 3, l - 2, -1, -1), (l - 3, l - 1, -1, -1)]
    return _from_bonds(l, bonds)


def cartan_matrix(id: DiagramId) -> CartanMatrix:
    """Canonical Cartan matrix of ``id`` (see module docstring for numbering)."""
    if id.is_exceptional:
        entries = _EXCEPTIONAL[id.family]
        if not id.affine:
            entries = mx.principal_minor(entries, [0])
    elif id.affine:
        entries = _classical_affine(id.family, id.rank)
    else:
        entries = _classical_finite(id.family, id.rank)
    return CartanMatrix(entries, id)


def adjacency(c: CartanMatrix):
    """Coxeter adjacency matrix ``2I - C``."""
    return mx.sub(mx.scale(2, mx.identity(c.size)), c.entries)


def marks(c: CartanMatrix) -> tuple[int, ...]:
    """Positive primitive integer vector ``z`` with ``z^T C = 0``."""
    kernel = mx.nullspace(mx.transpose(c.entries))
    if len(kernel) != 1:
        raise KernelDimensionError(f"left kernel of {c.id} has dimension {len(kernel)}")
    z = mx.primitive_integer_vector(kernel[0])
    if any(v <= 0 for v in z):
        raise KernelDimensionError(f"left kernel vector {z} of {c.id} is not positive")
    return z


def neighbors(entries, i: int) -> list[int]:
    return [j for j in range(len(entries)) if j != i and entries[i][j] != 0]


def branch_weights(c: CartanMatrix) -> list[int]:
    """Weight ``b`` of each vertex: minus the off-diagonal row sum, plus one for leaves."""
    e = c.entries
    out = []
    for i in range(c.size):
        b = -sum(e[i][j] for j in range(c.size) if j != i)
        if len(neighbors(e, i)) == 1:
            b += 1
        out.append(b)
    return out


def branch_vertex(id: DiagramId, choice: int | None = None) -> int:
    """Branch vertex (1-based) of a finite diagram.

    Every vertex of ``A_l`` attains the maximal weight, so the caller must
    pick one; for other families the maximizer is unique and ``choice`` must
    be omitted.
    """
    if id.affine:
        raise ValueError("branch vertices are defined on finite diagrams")
    if id.family == "A":
        if choice is None:
            raise ChoiceRequired(f"{id} needs an explicit branch vertex 1..{id.rank}")
        if not 1 <= choice <= id.rank:
            raise RankOutOfRange(f"branch vertex {choice} outside 1..{id.rank}")
        return choice
    if choice is not None:
        raise ChoiceForbidden(f"{id} has a unique branch vertex; no choice allowed")
    b = branch_weights(cartan_matrix(id))
    best = max(b)
    winners = [i for i, v in enumerate(b) if v == best]
    if len(winners) != 1:
        raise AssertionError(f"branch weight of {id} has no unique maximum: {b}")
    return winners[0] + 1


def _components(entries, verts: list[int]) -> list[list[int]]:
    left, comps = set(verts), []
    while left:
        start = min(left)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for w in neighbors(entries, v):
                if w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        comps.append(sorted(comp))
    return comps


def classify_finite(entries) -> DiagramId:
    """Identify a connected finite Cartan matrix up to relabeling.

    ``B2`` and ``C2`` are the same diagram with its vertices swapped; both
    come back as ``B2``.
    """
    n = len(entries)
    if n == 1:
        return DiagramId("A", 1, affine=False)
    deg = [len(neighbors(entries, i)) for i in range(n)]
    bonds = {}
    for i in range(n):
        for j in neighbors(entries, i):
            if i < j:
                bonds[(i, j)] = entries[i][j] * entries[j][i]
    if len(bonds) != n - 1 or max(deg) > 3:
        raise ValueError("not a finite-type diagram")
    laced = [b for b, m in bonds.items() if m > 1]
    if not laced:
        if max(deg) <= 2:
            return DiagramId("A", n, affine=False)
        centre = deg.index(3)
        arms = []
        for start in neighbors(entries, centre):
            length, prev, cur = 1, centre, start
            while True:
                nxt = [w for w in neighbors(entries, cur) if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return DiagramId("D", n, affine=False)
        return {(1, 2, 2): DiagramId("E6"), (1, 2, 3): DiagramId("E7"),
                (1, 2, 4): DiagramId("E8")}[tuple(arms)].finite()
    (i, j), = laced
    if bonds[(i, j)] == 3:
        return DiagramId("G2", affine=False)
    if n == 4 and deg[i] == 2 and deg[j] == 2:
        return DiagramId("F4", affine=False)
    # double bond at the end of a chain: B if the inner node's row holds the -2
    if deg[i] == 1 and deg[j] == 1:
        return DiagramId("B", 2, affine=False)
    end, inner = (i, j) if deg[i] == 1 else (j, i)
    return DiagramId("B" if entries[inner][end] == -2 else "C", n, affine=False)


def delete_vertex(id: DiagramId, v: int) -> FiniteProduct:
    """Components of the finite diagram ``id`` after removing vertex ``v`` (1-based)."""
    if id.affine:
        raise ValueError("delete_vertex works on finite diagrams")
    if not 1 <= v <= id.rank:
        raise RankOutOfRange(f"vertex {v} outside 1..{id.rank}")
    e = cartan_matrix(id).entries
    keep = [i for i in range(id.rank) if i != v - 1]
    pieces = []
    for comp in _components(e, keep):
        cid = classify_finite(mx.submatrix(e, comp))
        pieces.append((cid, tuple(i + 1 for i in comp)))
    pieces.sort(key=lambda t: (t[0].family, t[0].rank, t[1]))
    return FiniteProduct(tuple(p[0] for p in pieces), tuple(p[1] for p in pieces))
