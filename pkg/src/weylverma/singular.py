"""Singular elements and their decomposition along the orthogonal partner.

For u in U the weight u(mu+rho)-rho splits into a carrier living mostly in
h*_{a~} and an a_perp highest weight:

    carrier(u) = pi_{a~}[u(mu+rho)-rho] + D_perp
    perp_hw(u) = pi_perp[u(mu+rho)-rho] - D_perp

and Psi^(mu) = sum_u eps(u) e^{carrier(u)} Psi_perp^{perp_hw(u)}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import EmbeddingSpec
from .formal import FormalElement
from .rootspace import RootDatum, Weight, add, sub
from .weyl import WeylElement, act, enumerate_group


def _check_hw(d: RootDatum, mu: Weight):
    if len(mu) != d.dim or not d.is_dominant_integral(mu):
        raise ValueError(f"highest weight must be dominant integral for {d.name}")


def singular_element(d: RootDatum, mu: Weight) -> FormalElement:
    """Psi^(mu) = sum_w eps(w) e^{w(mu+rho)-rho}."""
    _check_hw(d, mu)
    top = add(mu, d.rho)
    return FormalElement((sub(act(d, w, top), d.rho), w.sign) for w in enumerate_group(d))


def perp_singular_element(spec: EmbeddingSpec, lam: Weight) -> FormalElement:
    """Singular element of the a_perp-module with highest weight lam."""
    p = spec.perp_datum
    top = add(lam, p.rho)
    return FormalElement((sub(act(p, v, top), p.rho), v.sign) for v in enumerate_group(p))


@dataclass(frozen=True)
class SingularEntry:
    u: WeylElement
    sign: int
    carrier: Weight
    perp_hw: Weight


@dataclass(frozen=True)
class SingularDecomposition:
    mu: Weight
    entries: tuple

    def __len__(self):
        return len(self.entries)


def compute_U(spec: EmbeddingSpec, mu: Weight) -> list[WeylElement]:
    """Coset representatives u with perp_hw(u) in the closed a_perp chamber.

    perp_hw(u) + rho_perp = pi_perp[u(mu+rho)], so the condition is that
    u(mu+rho) pairs positively with every simple root of a_perp.
    """
    g = spec.ambient
    _check_hw(g, mu)
    top = add(mu, g.rho)
    simple = spec.perp_datum.simple_roots
    return [u for u in enumerate_group(g)
            if all(g.inner(act(g, u, top), b) > 0 for b in simple)]


def carrier_and_perp_hw(spec: EmbeddingSpec, u: WeylElement, mu: Weight) -> tuple[Weight, Weight]:
    g = spec.ambient
    y = sub(act(g, u, add(mu, g.rho)), g.rho)
    carrier = add(spec.project_a_tilde(y), spec.defect_perp)
    perp_hw = sub(spec.project_perp(y), spec.defect_perp)
    return carrier, perp_hw


def decompose(spec: EmbeddingSpec, mu: Weight) -> SingularDecomposition:
    entries = []
    for u in compute_U(spec, mu):
        carrier, perp_hw = carrier_and_perp_hw(spec, u, mu)
        entries.append(SingularEntry(u, u.sign, carrier, perp_hw))
    return SingularDecomposition(tuple(mu), tuple(entries))


def expand(spec: EmbeddingSpec, dec: SingularDecomposition) -> FormalElement:
    """sum_u eps(u) e^{carrier(u)} Psi_perp^{perp_hw(u)}."""
    out = FormalElement()
    for e in dec.entries:
        out = out + perp_singular_element(spec, e.perp_hw).shift(e.carrier) * e.sign
    return out
