"""Generalized (parabolic) Verma characters and the Weyl-Verma decomposition.

ch L^mu = sum_u eps(u) e^{carrier(u)} ch L_perp^{perp_hw(u)} / R_J,
with R_J = prod over the positive roots of g outside a_perp of (1 - e^{-a}).

The a_perp roots need not be generated by simple roots of g; a Weyl element
(the witness) rotates them onto a standard Levi Delta_I^+. Characters are
computed in the original frame, where the identity above holds as written.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .characters import (
    kostant_series, offset, to_absolute, weyl_character_relative, window,
)
from .embedding import EmbeddingError, EmbeddingSpec
from .formal import FormalElement
from .rootspace import RootDatum, Weight, add, sub
from .singular import decompose
from .weyl import WeylElement, act, enumerate_group


@dataclass(frozen=True)
class ParabolicData:
    I: tuple                 # indices of simple roots of g spanning the Levi
    levi_roots: tuple        # Delta_I^+
    nilradical_roots: tuple  # Delta^+ minus Delta_I^+
    witness: WeylElement     # maps the a_perp simple roots onto {alpha_i : i in I}
    ambient: RootDatum
    perp: RootDatum
    denominator_coords: tuple  # root coordinates of Delta^+ minus Delta_perp^+

    @property
    def perp_simple_coords(self) -> tuple:
        return tuple(_int_coords(self.ambient, b) for b in self.perp.simple_roots)


def _int_coords(d: RootDatum, x: Weight) -> tuple:
    return offset(d, d.zero(), x)


def parabolic_data(spec: EmbeddingSpec) -> ParabolicData:
    g = spec.ambient
    perp_simple = spec.perp_datum.simple_roots
    index = {a: i for i, a in enumerate(g.simple_roots)}
    for w in sorted(enumerate_group(g), key=lambda w: (w.length, w.word)):
        images = [act(g, w, b) for b in perp_simple]
        if all(x in index for x in images):
            I = tuple(sorted(index[x] for x in images))
            break
    else:
        raise EmbeddingError("orthogonal roots are not conjugate to a standard Levi")
    levi, nil = [], []
    for c, a in zip(g.positive_root_coords, g.roots):
        (levi if all(c[i] == 0 for i in range(g.rank) if i not in I) else nil).append(a)
    pset = set(spec.perp_roots)
    denom = tuple(c for c, a in zip(g.positive_root_coords, g.roots) if a not in pset)
    return ParabolicData(I, tuple(levi), tuple(nil), w, g, spec.perp_datum, denom)


@dataclass(frozen=True)
class GVChar:
    """Truncated character of a generalized Verma module.

    ``relative`` is keyed by integer simple-root coordinates of x - highest_weight.
    """

    highest_weight: Weight
    relative: FormalElement
    depth: int
    ambient: RootDatum

    @property
    def terms(self) -> FormalElement:
        return to_absolute(self.ambient, self.highest_weight, self.relative)


def _perp_top_relative(pd: ParabolicData, lam: Weight, depth: int) -> FormalElement:
    """ch L_perp^lam relative to lam, in ambient coordinates, cut to the window."""
    rows = pd.perp_simple_coords
    n = pd.ambient.rank
    rel = weyl_character_relative(pd.perp, lam).map_keys(
        lambda k: tuple(sum(k[j] * rows[j][i] for j in range(len(rows))) for i in range(n)))
    return rel.restrict(window(depth))


def gv_relative(pd: ParabolicData, lam: Weight, depth: int) -> FormalElement:
    if depth < 0:
        return FormalElement()
    top = _perp_top_relative(pd, lam, depth)
    if not pd.denominator_coords:
        return top
    return top.mul(kostant_series(pd.denominator_coords, depth), window(depth))


def gv_character(pd: ParabolicData, lam: Weight, depth: int = 8) -> GVChar:
    lam = tuple(lam)
    if len(lam) != pd.ambient.dim or not pd.perp.is_dominant_integral(lam):
        raise ValueError("lambda must be dominant integral for a_perp")
    if depth < 1:
        raise ValueError("depth must be positive")
    return GVChar(lam, gv_relative(pd, lam, depth), depth, pd.ambient)


class VermaTerm(NamedTuple):
    sign: int
    carrier: Weight
    gv: GVChar
    u: WeylElement


def weyl_verma_decompose(spec: EmbeddingSpec, mu: Weight, depth: int = 8) -> list[VermaTerm]:
    pd = parabolic_data(spec)
    return [VermaTerm(e.sign, e.carrier, gv_character(pd, e.perp_hw, depth), e.u)
            for e in decompose(spec, mu).entries]


def euler_sum_relative(spec: EmbeddingSpec, mu: Weight, entries, depth: int,
                       pd: ParabolicData | None = None) -> FormalElement:
    """sum sign * e^{carrier} ch M_I^{perp_hw}, relative to mu, on the window.

    ``entries`` are (sign, carrier, perp_hw) triples.
    """
    g = spec.ambient
    pd = pd or parabolic_data(spec)
    out = FormalElement()
    for sign, carrier, lam in entries:
        off = offset(g, mu, add(carrier, lam))
        rest = depth + sum(off)
        if rest < 0:
            continue
        out = out + gv_relative(pd, lam, rest).shift(off) * sign
    return out


def euler_matches(spec: EmbeddingSpec, mu: Weight, entries, depth: int) -> bool:
    g = spec.ambient
    lhs = euler_sum_relative(spec, mu, entries, depth)
    return lhs == weyl_character_relative(g, tuple(mu)).restrict(window(depth))


def _ordinary_sum_relative(d: RootDatum, sub_datum: RootDatum, lam: Weight, depth: int) -> FormalElement:
    """sum_{w in W_sub} eps(w) ch M^{w(lam+rho_sub)-rho_sub} / e^lam on the window."""
    full = d.positive_root_coords
    top = add(lam, sub_datum.rho)
    out = FormalElement()
    for w in enumerate_group(sub_datum):
        off = offset(d, lam, sub(act(sub_datum, w, top), sub_datum.rho))
        rest = depth + sum(off)
        if rest < 0:
            continue
        series = kostant_series(full, rest) if full else FormalElement.one(d.rank)
        out = out + series.shift(off) * w.sign
    return out


def gv_to_ordinary(pd: ParabolicData, lam: Weight, depth: int = 8) -> FormalElement:
    lam = tuple(lam)
    if not pd.perp.is_dominant_integral(lam):
        raise ValueError("lambda must be dominant integral for a_perp")
    rel = _ordinary_sum_relative(pd.ambient, pd.perp, lam, depth)
    return to_absolute(pd.ambient, lam, rel)


def standard_weyl_verma(d: RootDatum, mu: Weight, depth: int = 8) -> FormalElement:
    mu = tuple(mu)
    if not d.is_dominant_integral(mu):
        raise ValueError("highest weight must be dominant integral")
    return to_absolute(d, mu, _ordinary_sum_relative(d, d, mu, depth))
