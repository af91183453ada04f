"""Finite and truncated characters used along the main computation path.

Truncated characters are stored relative to their top weight: the key of
e^x is the integer simple-root coordinate vector of ``x - top`` (all entries
non-positive), and the window of depth n is ``-sum(key) <= n``.
"""

from __future__ import annotations

from functools import lru_cache

from .formal import FormalElement
from .rootspace import RootDatum, Weight, add, lincomb, sub
from .weyl import act, enumerate_group


def rel_height(key: tuple) -> int:
    return -sum(key)


def window(depth: int):
    return lambda key: -sum(key) <= depth


def offset(d: RootDatum, top: Weight, x: Weight) -> tuple:
    """Integer simple-root coordinates of x - top."""
    c = d.root_coords(sub(x, top))
    if any(v.denominator != 1 for v in c):
        raise ValueError("weights differ by a non-lattice vector")
    return tuple(int(v) for v in c)


def to_absolute(d: RootDatum, top: Weight, rel: FormalElement) -> FormalElement:
    return rel.map_keys(lambda k: add(top, lincomb(k, d.simple_roots, d.dim)))


def to_relative(d: RootDatum, top: Weight, elem: FormalElement) -> FormalElement:
    return elem.map_keys(lambda x: offset(d, top, x))


@lru_cache(maxsize=4096)
def _weyl_character_rel(d: RootDatum, lam: Weight) -> FormalElement:
    top = add(lam, d.rho)
    psi = FormalElement((offset(d, top, act(d, w, top)), w.sign) for w in enumerate_group(d))
    for c in d.positive_root_coords:
        psi = psi.divide_one_minus(tuple(-v for v in c))
    return psi


def weyl_character_relative(d: RootDatum, lam: Weight) -> FormalElement:
    """Finite ch L^lam (Weyl character formula by exact division), keys relative to lam."""
    if not d.is_dominant_integral(lam):
        raise ValueError(f"highest weight must be dominant integral for {d.name}")
    return _weyl_character_rel(d, tuple(lam))


def weyl_character(d: RootDatum, lam: Weight) -> FormalElement:
    return to_absolute(d, lam, weyl_character_relative(d, lam))


@lru_cache(maxsize=1024)
def kostant_series(root_coords: tuple, depth: int) -> FormalElement:
    """prod 1/(1 - e^{-a}) over the given roots, truncated at height <= depth."""
    dim = len(root_coords[0]) if root_coords else 0
    out = FormalElement.one(dim)
    if depth < 0:
        return FormalElement()
    for c in root_coords:
        out = out.times_geometric(tuple(-v for v in c), window(depth), rel_height)
    return out


def verma_character_relative(d: RootDatum, depth: int) -> FormalElement:
    """ch M^nu / e^nu on the depth window (independent of nu)."""
    if not d.rank:
        return FormalElement.one(0) if depth >= 0 else FormalElement()
    return kostant_series(d.positive_root_coords, depth)


def verma_character(d: RootDatum, nu: Weight, depth: int) -> FormalElement:
    return to_absolute(d, nu, verma_character_relative(d, depth))

