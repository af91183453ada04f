"""Generalized BGG resolution graded by Weyl length.

Only the Euler characteristic of the sequence is checked; the differentials
are never constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .branching import branch, compute_fan, default_depth, k_from_branching
from .embedding import EmbeddingError, EmbeddingSpec
from .rootspace import Weight, add, scale, sub
from .singular import decompose
from .verma import euler_matches
from .weyl import WeylElement, act, element_sending, enumerate_group


@dataclass(frozen=True)
class ResolutionEntry:
    u: WeylElement
    highest_weight: Weight  # u(mu+rho)-rho
    carrier: Weight
    perp_hw: Weight
    sign: int


@dataclass
class ResolutionSequence:
    mu: Weight
    grades: list = field(default_factory=list)  # grades[k]: entries with length(u) = k

    @property
    def entries(self) -> list[ResolutionEntry]:
        return [e for grade in self.grades for e in grade]

    def __len__(self):
        return sum(len(g) for g in self.grades)

    def grade_sizes(self) -> list[int]:
        return [len(g) for g in self.grades]


def _grade(mu: Weight, entries) -> ResolutionSequence:
    top = max((e.u.length for e in entries), default=-1)
    grades = [[] for _ in range(top + 1)]
    for e in entries:
        grades[e.u.length].append(e)
    for grade in grades:
        grade.sort(key=lambda e: e.u.word)
    return ResolutionSequence(tuple(mu), grades)


def bgg_resolution(spec: EmbeddingSpec, mu: Weight) -> ResolutionSequence:
    g = spec.ambient
    entries = []
    for e in decompose(spec, mu).entries:
        hw = sub(act(g, e.u, add(mu, g.rho)), g.rho)
        entries.append(ResolutionEntry(e.u, hw, e.carrier, e.perp_hw, e.sign))
    return _grade(mu, entries)


def verify_euler(seq: ResolutionSequence, spec: EmbeddingSpec, depth: int = 8) -> bool:
    """Alternating sum over grades against ch L^mu on the depth window.

    An entry whose stored sign disagrees with (-1)^k also fails the check.
    """
    triples = []
    for k, grade in enumerate(seq.grades):
        for e in grade:
            if e.sign != (-1) ** k:
                return False
            triples.append((e.sign, e.carrier, e.perp_hw))
    return euler_matches(spec, seq.mu, triples, depth)


def resolution_from_branching(spec: EmbeddingSpec, mu: Weight, depth: int | None = None,
                              b: dict | None = None) -> ResolutionSequence:
    """Rebuild the resolution from branching data when a_perp is of type A1.

    The product v = k * F has one nonzero coefficient per u in U, at
    xi = carrier(u) - D_perp + gamma0, with |v_xi| = dim L_perp^{perp_hw(u)}.
    """
    g = spec.ambient
    p = spec.perp_datum
    if p.rank != 1:
        raise EmbeddingError(f"a_perp has rank {p.rank}; rank 1 is required")
    mu = tuple(mu)
    if depth is None:
        depth = default_depth(spec, mu)
    if b is None:
        b = branch(spec, mu, depth).b
    fan = compute_fan(spec, depth)
    k = k_from_branching(spec, b)
    # candidate positions: xi + gamma - (shifts) reachable from k
    cands = set()
    for xi in k:
        cands.add(xi)
        for gamma in fan.shifts:
            cands.add(sub(xi, gamma))
    beta = p.simple_roots[0]
    top = add(mu, g.rho)
    entries = []
    seen = set()
    for xi in sorted(cands):
        v = -fan.s0 * k.get(xi, 0) - sum(s * k.get(add(xi, gamma), 0)
                                         for gamma, s in fan.shifts.items())
        if not v:
            continue
        carrier = add(sub(xi, fan.gamma0), spec.defect_perp)
        if carrier in seen:
            raise ArithmeticError("two coset representatives share a carrier")
        seen.add(carrier)
        dim = abs(v)
        lam = scale(Fraction(dim - 1, 2), beta)
        image = add(add(carrier, lam), g.rho)  # u(mu+rho)
        try:
            u = element_sending(g, top, image)
        except ValueError:
            raise ArithmeticError(f"no Weyl element realizes the carrier {carrier}") from None
        if (v > 0) != (u.sign > 0):
            raise ArithmeticError("sign of the recovered entry disagrees with eps(u)")
        hw = sub(image, g.rho)
        entries.append(ResolutionEntry(u, hw, carrier, lam, u.sign))
    expected = len(enumerate_group(g)) // len(enumerate_group(p))
    if len(entries) != expected:
        raise ArithmeticError(f"recovered {len(entries)} entries, expected {expected}")
    return _grade(mu, entries)
