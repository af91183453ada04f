"""Root systems of simple Lie algebras in an orthogonal ambient basis.

Weights are tuples of :class:`fractions.Fraction` holding coordinates in the
ambient "e-basis".  The invariant form is ``scale * (Euclidean dot product)``
with the scale chosen so that long roots have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Weight = tuple  # tuple[Fraction, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
MAX_RANK = 8


@dataclass(frozen=True, order=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in _MIN_RANK:
            raise ValueError(f"unknown series {s!r}")
        if not isinstance(r, int) or r < _MIN_RANK[s] or r > MAX_RANK:
            raise ValueError(f"invalid rank {r} for series {s}")
        if s == "E" and r not in (6, 7, 8):
            raise ValueError(f"invalid rank {r} for series E")
        if s == "F" and r != 4 or s == "G" and r != 2:
            raise ValueError(f"invalid rank {r} for series {s}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", text)
        if not m:
            raise ValueError(f"bad algebra descriptor {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


# --- exact vector helpers --------------------------------------------------

def vec(values: Iterable) -> Weight:
    return tuple(Fraction(v) for v in values)


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Weight) -> Weight:
    return tuple(c * a for a in x)


def neg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def is_zero(x: Weight) -> bool:
    return not any(x)


def lincomb(coeffs: Sequence, vectors: Sequence[Weight], dim: int) -> Weight:
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                out[i] += c * a
    return tuple(out)


def inverse_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rank_of(vectors: Sequence[Weight]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# --- root data -------------------------------------------------------------

class RootDatum:
    """Finite root system given by simple roots in an ambient e-basis.

    Used both for the simple algebras built by :func:`build_root_datum` and for
    reductive root subsystems (subalgebras, orthogonal partners, Levi factors),
    which share the ambient space and inner product of their parent.
    """

    def __init__(self, simple_roots: Sequence[Weight], form_scale, dim: int,
                 name: str, id: AlgebraId | None = None):
        self.id = id
        self.name = name
        self.dim = dim
        self.form_scale = Fraction(form_scale)
        self.simple_roots = tuple(vec(a) for a in simple_roots)
        r = self.rank = len(self.simple_roots)
        for a in self.simple_roots:
            if len(a) != dim:
                raise ValueError("simple root has wrong ambient dimension")
        self.symmetrizer = tuple(self.inner(a, a) / 2 for a in self.simple_roots)
        cartan = []
        for i in range(r):
            row = []
            for j in range(r):
                c = 2 * self.inner(self.simple_roots[i], self.simple_roots[j]) / self.inner(
                    self.simple_roots[j], self.simple_roots[j])
                if c.denominator != 1:
                    raise ValueError("simple roots do not give an integral Cartan matrix")
                row.append(int(c))
            cartan.append(tuple(row))
        self.cartan = tuple(cartan)
        if r and rank_of(self.simple_roots) != r:
            raise ValueError("simple roots are linearly dependent")
        self._inv_cartan = inverse_matrix(self.cartan) if r else []
        self.positive_root_coords = self._close_roots()
        self.positive_roots = tuple(
            (self.from_root_coords(c), 1) for c in self.positive_root_coords)
        self.roots = tuple(a for a, _ in self.positive_roots)
        self.rho = scale(Fraction(1, 2), lincomb([1] * len(self.roots), self.roots, dim))
        self.fundamental_weights = tuple(
            lincomb(self._inv_cartan[i], self.simple_roots, dim) for i in range(r))
        self.coroots = tuple(scale(2 / self.inner(a, a), a) for a in self.simple_roots)
        # half-sum of positive coroots; pairs to the height on the root lattice
        self.rho_coroot = scale(Fraction(1, 2), lincomb(
            [1] * len(self.roots), [scale(2 / self.inner(a, a), a) for a in self.roots], dim))

    def __repr__(self):
        return f"RootDatum({self.name})"

    def _close_roots(self) -> tuple:
        r = self.rank
        found = []
        seen = set()
        for i in range(r):
            e = tuple(int(i == j) for j in range(r))
            found.append(e)
            seen.add(e)
        queue = list(found)
        while queue:
            c = queue.pop()
            for i in range(r):
                p = sum(c[j] * self.cartan[j][i] for j in range(r))
                if p == 0:
                    continue
                s = tuple(c[j] - (p if j == i else 0) for j in range(r))
                if all(x >= 0 for x in s) and s not in seen:
                    seen.add(s)
                    found.append(s)
                    queue.append(s)
        return tuple(sorted(found, key=lambda c: (sum(c), c)))

    # --- pairing and coordinates ---

    def inner(self, x: Weight, y: Weight) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        return self.form_scale * sum((a * b for a, b in zip(x, y)), Fraction(0))

    def labels(self, x: Weight) -> tuple:
        """Dynkin labels ``2<x, a_i>/<a_i, a_i>``."""
        return tuple(self.inner(x, c) for c in self.coroots)

    def from_labels(self, labels: Sequence) -> Weight:
        if len(labels) != self.rank:
            raise ValueError(f"expected {self.rank} Dynkin labels, got {len(labels)}")
        return lincomb([Fraction(l) for l in labels], self.fundamental_weights, self.dim)

    def from_root_coords(self, coords: Sequence) -> Weight:
        return lincomb(coords, self.simple_roots, self.dim)

    def root_coords(self, x: Weight) -> tuple:
        """Coordinates of (the root-span part of) x in the simple-root basis."""
        lab = self.labels(x)
        r = self.rank
        return tuple(sum((lab[i] * self._inv_cartan[i][j] for i in range(r)), Fraction(0))
                     for j in range(r))

    def height(self, x: Weight) -> Fraction:
        return self.inner(x, self.rho_coroot)

    def is_dominant(self, x: Weight) -> bool:
        return all(l >= 0 for l in self.labels(x))

    def is_integral(self, x: Weight) -> bool:
        return all(l.denominator == 1 for l in self.labels(x))

    def is_dominant_integral(self, x: Weight) -> bool:
        return all(l >= 0 and l.denominator == 1 for l in self.labels(x))

    def in_root_span(self, x: Weight) -> bool:
        return self.from_root_coords(self.root_coords(x)) == tuple(x)

    def is_root(self, x: Weight) -> bool:
        x = tuple(x)
        return x in self._root_set

    @property
    def _root_set(self):
        try:
            return self.__root_set
        except AttributeError:
            self.__root_set = frozenset(self.roots) | frozenset(neg(a) for a in self.roots)
            return self.__root_set

    def is_positive_root(self, x: Weight) -> bool:
        return tuple(x) in self.roots

    def highest_root(self) -> Weight:
        return max(self.roots, key=lambda a: (self.height(a), a))

    def zero(self) -> Weight:
        return (Fraction(0),) * self.dim

    def subsystem(self, simple_roots: Sequence[Weight], name: str) -> "RootDatum":
        return RootDatum(simple_roots, self.form_scale, self.dim, name)

    def weyl_dimension(self, mu: Weight) -> int:
        """Weyl dimension formula."""
        num = Fraction(1)
        mr = add(mu, self.rho)
        for a in self.roots:
            num *= self.inner(mr, a) / self.inner(self.rho, a)
        if num.denominator != 1:
            raise ArithmeticError(f"non-integral dimension {num}")
        return int(num)


def _e(dim: int, *pairs) -> Weight:
    v = [Fraction(0)] * dim
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def _simple_roots(s: str, r: int) -> tuple[list, int, Fraction]:
    h = Fraction(1, 2)
    if s == "A":
        n = r + 1
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(r)], n, Fraction(1)
    if s == "B":
        return [_e(r, (i, 1), (i + 1, -1)) for i in range(r - 1)] + [_e(r, (r - 1, 1))], r, Fraction(1)
    if s == "C":
        return ([_e(r, (i, 1), (i + 1, -1)) for i in range(r - 1)] + [_e(r, (r - 1, 2))],
                r, Fraction(1, 2))
    if s == "D":
        return ([_e(r, (i, 1), (i + 1, -1)) for i in range(r - 1)] + [_e(r, (r - 2, 1), (r - 1, 1))],
                r, Fraction(1))
    if s == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))], 3, Fraction(1, 3)
    if s == "F":
        return ([_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                 _e(4, (0, h), (1, -h), (2, -h), (3, -h))], 4, Fraction(1))
    # E series, Bourbaki numbering inside the E8 lattice
    e8 = [_e(8, (0, h), (7, h), *[(k, -h) for k in range(1, 7)]),
          _e(8, (0, 1), (1, 1))] + [_e(8, (k, 1), (k - 1, -1)) for k in range(1, 7)]
    return e8[:r], 8, Fraction(1)


@lru_cache(maxsize=None)
def build_root_datum(id: AlgebraId | str) -> RootDatum:
    if isinstance(id, str):
        return build_root_datum(AlgebraId.parse(id))
    roots, dim, form_scale = _simple_roots(id.series, id.rank)
    return RootDatum(roots, form_scale, dim, str(id), id)


def inner_product(d: RootDatum, x: Weight, y: Weight) -> Fraction:
    return d.inner(x, y)


def dynkin_labels(d: RootDatum, x: Weight) -> tuple:
    return d.labels(x)


def is_dominant(d: RootDatum, x: Weight) -> bool:
    return d.is_dominant(x)


def positive_root_count(id: AlgebraId) -> int:
    """Classical count of positive roots, for cross-checks."""
    s, r = id.series, id.rank
    return {"A": r * (r + 1) // 2, "B": r * r, "C": r * r, "D": r * (r - 1),
            "G": 6, "F": 24}.get(s) or {6: 36, 7: 63, 8: 120}[r]


def weyl_group_order(id: AlgebraId) -> int:
    from math import factorial
    s, r = id.series, id.rank
    if s == "A":
        return factorial(r + 1)
    if s in "BC":
        return 2 ** r * factorial(r)
    if s == "D":
        return 2 ** (r - 1) * factorial(r)
    return {"G": 12, "F": 1152}.get(s) or {6: 51840, 7: 2903040, 8: 696729600}[r]
