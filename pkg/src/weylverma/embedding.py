"""Regular reductive subalgebras, their orthogonal partners and projections."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .rootspace import (
    RootDatum, Weight, add, build_root_datum, inverse_matrix, scale, sub,
)
from .weyl import WeylElement, act_word, element_from_image, enumerate_group


class EmbeddingError(ValueError):
    pass


class _Projector:
    """Orthogonal projection onto span(basis) w.r.t. the datum's form."""

    def __init__(self, d: RootDatum, basis: Sequence[Weight]):
        self.dim = d.dim
        self.basis = tuple(basis)
        n = len(self.basis)
        if not n:
            self.matrix = None
            return
        gram = [[d.inner(b, c) for c in self.basis] for b in self.basis]
        ginv = inverse_matrix(gram)
        s = d.form_scale
        dim = d.dim
        self.matrix = tuple(
            tuple(sum((self.basis[i][k] * ginv[i][j] * s * self.basis[j][l]
                       for i in range(n) for j in range(n)), Fraction(0))
                  for l in range(dim))
            for k in range(dim))

    def __call__(self, x: Weight) -> Weight:
        if self.matrix is None:
            return (Fraction(0),) * self.dim
        return tuple(sum((m * a for m, a in zip(row, x)), Fraction(0)) for row in self.matrix)


def parse_root_list(text: str) -> list[tuple[int, ...]]:
    """``"1,2;0,1"`` -> [(1, 2), (0, 1)]; empty string gives no roots."""
    text = text.strip()
    if not text:
        return []
    return [tuple(int(t) for t in part.split(",")) for part in text.split(";") if part.strip()]


class EmbeddingSpec:
    """Regular subalgebra a of the ambient algebra g, with its partner a_perp.

    ``a_root_coords`` are integer coefficient vectors of the simple roots of a
    in the simple-root basis of g.
    """

    def __init__(self, ambient: RootDatum, a_root_coords: Sequence[Sequence[int]]):
        g = self.ambient = ambient
        self.a_root_coords = tuple(tuple(int(c) for c in v) for v in a_root_coords)
        for v in self.a_root_coords:
            if len(v) != g.rank:
                raise EmbeddingError(f"root {v} has {len(v)} coefficients, expected {g.rank}")
        self.a_simple_roots = tuple(g.from_root_coords(v) for v in self.a_root_coords)
        for v, b in zip(self.a_root_coords, self.a_simple_roots):
            if not g.is_root(b):
                raise EmbeddingError(f"{list(v)} is not a root of {g.name}")
            if not g.is_positive_root(b):
                raise EmbeddingError(f"{list(v)} is a negative root; give positive roots")
        bs = self.a_simple_roots
        if len(set(bs)) != len(bs):
            raise EmbeddingError("repeated a_root")
        for i, b in enumerate(bs):
            for j, c in enumerate(bs):
                if i != j and g.inner(b, c) > 0:
                    raise EmbeddingError("a_roots do not form a simple system "
                                         "(positive Cartan integer)")
        try:
            self.a_datum = g.subsystem(bs, f"{g.name}|a")
        except ValueError as exc:
            raise EmbeddingError(str(exc)) from None
        a_roots = set(self.a_datum.roots)
        a_all = a_roots | {tuple(-x for x in r) for r in a_roots}
        for x in a_all:
            for y in a_all:
                s = add(x, y)
                if g.is_root(s) and s not in a_all:
                    raise EmbeddingError("root subsystem is not closed: not a regular subalgebra")

        self.perp_roots = tuple(b for b in g.roots if all(g.inner(b, c) == 0 for c in bs))
        pset = set(self.perp_roots)
        perp_simple = [b for b in self.perp_roots
                       if not any(sub(b, c) in pset for c in self.perp_roots)]
        self.perp_datum = g.subsystem(perp_simple, f"{g.name}|a_perp")
        if set(self.perp_datum.roots) != pset:
            raise EmbeddingError("orthogonal roots do not form a root subsystem")

        self._pa = _Projector(g, bs)
        self._pp = _Projector(g, self.perp_datum.simple_roots)
        self.h_perp_basis = self._complement_basis()
        self._ph = _Projector(g, self.h_perp_basis)
        self._pat = _Projector(g, list(bs) + list(self.h_perp_basis))

        self.defect_a = sub(self.a_datum.rho, self.project_a(g.rho))
        self.defect_perp = sub(self.perp_datum.rho, self.project_perp(g.rho))

    def _complement_basis(self) -> tuple:
        g = self.ambient
        ortho = []
        for b in list(self.a_simple_roots) + list(self.perp_datum.simple_roots):
            v = b
            for o in ortho:
                v = sub(v, scale(g.inner(v, o) / g.inner(o, o), o))
            ortho.append(v)
        comp = []
        for b in g.simple_roots:
            v = b
            for o in ortho + comp:
                v = sub(v, scale(g.inner(v, o) / g.inner(o, o), o))
            if any(v):
                comp.append(v)
        return tuple(comp)

    def __eq__(self, other):
        return isinstance(other, EmbeddingSpec) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash((self.ambient.name, self.a_root_coords))

    def __repr__(self):
        return f"EmbeddingSpec({self.ambient.name}, a_roots={[list(v) for v in self.a_root_coords]})"

    # --- descriptors ---

    @classmethod
    def from_descriptor(cls, desc: dict | str) -> "EmbeddingSpec":
        if isinstance(desc, str):
            desc = json.loads(desc)
        return cls(build_root_datum(desc["ambient"]), desc.get("a_roots", []))

    def descriptor(self) -> dict:
        return {"ambient": self.ambient.name, "a_roots": [list(v) for v in self.a_root_coords]}

    # --- projections ---

    def project_a(self, x: Weight) -> Weight:
        return self._pa(x)

    def project_perp(self, x: Weight) -> Weight:
        return self._pp(x)

    def project_h_perp(self, x: Weight) -> Weight:
        return self._ph(x)

    def project_a_tilde(self, x: Weight) -> Weight:
        return self._pat(x)

    @property
    def dim_h_perp(self) -> int:
        return len(self.h_perp_basis)

    def is_a_dominant(self, x: Weight) -> bool:
        return self.a_datum.is_dominant(x)

    def a_tilde_dimension(self, nu: Weight) -> int:
        """Dimension of the a~-module with highest weight nu (h_perp part is a character)."""
        return self.a_datum.weyl_dimension(self.project_a(nu))


def build_embedding(ambient: RootDatum | str, a_root_coords: Sequence[Sequence[int]]) -> EmbeddingSpec:
    if isinstance(ambient, str):
        ambient = build_root_datum(ambient)
    return EmbeddingSpec(ambient, a_root_coords)


def project_a(spec: EmbeddingSpec, x: Weight) -> Weight:
    return spec.project_a(x)


def project_perp(spec: EmbeddingSpec, x: Weight) -> Weight:
    return spec.project_perp(x)


def project_a_tilde(spec: EmbeddingSpec, x: Weight) -> Weight:
    return spec.project_a_tilde(x)


def perp_to_ambient(spec: EmbeddingSpec, word: Sequence[int]) -> WeylElement:
    """Ambient Weyl element of a word in the simple reflections of a_perp."""
    g = spec.ambient
    return element_from_image(g, act_word(spec.perp_datum, word, g.rho))


def orthogonal_weyl_subgroup(spec: EmbeddingSpec) -> list[WeylElement]:
    """W_{a_perp} as elements of the ambient Weyl group."""
    elems = {perp_to_ambient(spec, v.word) for v in enumerate_group(spec.perp_datum)}
    return sorted(elems, key=lambda w: (w.length, w.word))

