"""Brute-force ground truth, independent of the singular/branching/verma path.

Only the root-datum and Weyl-group layers are shared with the main code.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .formal import FormalElement
from .rootspace import RootDatum, Weight, add, inverse_matrix, lincomb, sub
from .weyl import act, enumerate_group


@dataclass(frozen=True)
class WeightDiagram:
    hw: Weight
    multiplicities: dict

    def dimension(self) -> int:
        return sum(self.multiplicities.values())


def _lattice_coords(d: RootDatum, x: Weight):
    c = d.root_coords(x)
    if any(v.denominator != 1 for v in c):
        return None
    return tuple(int(v) for v in c)


def weyl_dimension(d: RootDatum, mu: Weight) -> int:
    num, den = Fraction(1), Fraction(1)
    for a in d.roots:
        num *= d.inner(add(mu, d.rho), a)
        den *= d.inner(d.rho, a)
    q = num / den
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {q}")
    return int(q)


def _dominant_labels(cartan, labs: tuple) -> tuple:
    labs = list(labs)
    while True:
        i = next((j for j, v in enumerate(labs) if v < 0), None)
        if i is None:
            return tuple(labs)
        c = labs[i]
        labs = [v - c * a for v, a in zip(labs, cartan[i])]


def freudenthal(d: RootDatum, mu: Weight) -> WeightDiagram:
    """Full weight table by Freudenthal's recursion, in integer Dynkin labels."""
    if not d.is_dominant_integral(mu):
        raise ValueError("highest weight must be dominant integral")
    return _freudenthal(d, tuple(mu))


@lru_cache(maxsize=512)
def _freudenthal(d: RootDatum, mu: Weight) -> WeightDiagram:
    r = d.rank
    cartan = d.cartan
    top = tuple(int(v) for v in d.labels(mu))
    # label vectors of simple and positive roots; row i of the Cartan matrix is alpha_i
    pos = [tuple(sum(c[i] * cartan[i][j] for i in range(r)) for j in range(r))
           for c in d.positive_root_coords]
    # <x, alpha> for x with labels l equals sum_j l_j <omega_j, alpha>
    pair = [[d.inner(w, a) for w in d.fundamental_weights] for a in d.roots]
    inv = [[Fraction(v) for v in row] for row in inverse_matrix(cartan)]
    gram = [[d.inner(a, b) for b in d.fundamental_weights] for a in d.fundamental_weights]

    def norm(l):
        return sum((l[i] * gram[i][j] * l[j] for i in range(r) for j in range(r)), Fraction(0))

    dom_of: dict = {}

    def dom(l):
        hit = dom_of.get(l)
        if hit is None:
            hit = dom_of[l] = _dominant_labels(cartan, l)
        return hit

    def below(l):
        # top - l must be a non-negative integral root combination
        diff = [a - b for a, b in zip(top, l)]
        c = [sum(Fraction(diff[j]) * inv[j][i] for j in range(r)) for i in range(r)]
        return all(v.denominator == 1 and v >= 0 for v in c)

    weights = {top}
    stack = [top]
    while stack:
        x = stack.pop()
        for i in range(r):
            y = tuple(a - b for a, b in zip(x, cartan[i]))
            if y not in weights and below(dom(y)):
                weights.add(y)
                stack.append(y)

    def depth_of(l):
        diff = [a - b for a, b in zip(top, l)]
        return sum(sum(Fraction(diff[j]) * inv[j][i] for j in range(r)) for i in range(r))

    dominant = sorted((x for x in weights if dom(x) == x), key=depth_of)
    norm_top = norm(tuple(a + 1 for a in top))
    mult = {}
    for lam in dominant:
        if lam == top:
            mult[lam] = 1
            continue
        total = Fraction(0)
        for a, pa in zip(pos, pair):
            y = tuple(u + v for u, v in zip(lam, a))
            while y in weights:
                total += mult[dom(y)] * sum((c * p for c, p in zip(y, pa)), Fraction(0))
                y = tuple(u + v for u, v in zip(y, a))
        m = 2 * total / (norm_top - norm(tuple(a + 1 for a in lam)))
        if m.denominator != 1:
            raise ArithmeticError("non-integral multiplicity")
        mult[lam] = int(m)
    table = {d.from_labels(x): mult[dom(x)] for x in weights if mult[dom(x)]}
    return WeightDiagram(mu, dict(sorted(table.items())))


def _project_a_tilde(g: RootDatum, a_simple: list) -> callable:
    perp = [b for b in g.roots if all(g.inner(b, c) == 0 for c in a_simple)]
    # a basis of span(perp): greedy independent subset
    basis = []
    for b in perp:
        trial = basis + [b]
        gram = [[g.inner(x, y) for y in trial] for x in trial]
        try:
            inverse_matrix(gram)
        except ValueError:
            continue
        basis = trial
    if not basis:
        return lambda x: tuple(x)
    ginv = inverse_matrix([[g.inner(x, y) for y in basis] for x in basis])

    def proj(x):
        rhs = [g.inner(b, x) for b in basis]
        coeffs = [sum((ginv[i][j] * rhs[j] for j in range(len(basis))), Fraction(0))
                  for i in range(len(basis))]
        return sub(x, lincomb(coeffs, basis, g.dim))

    return proj


def brute_force_branch(spec, mu: Weight) -> dict:
    """Project all weights of L^mu and peel off highest a~-modules."""
    g = spec.ambient
    a = spec.a_datum
    proj = _project_a_tilde(g, list(spec.a_simple_roots))
    remaining: dict = defaultdict(int)
    for x, m in freudenthal(g, mu).multiplicities.items():
        remaining[proj(x)] += m
    a_proj = _a_projector(g, list(spec.a_simple_roots))
    b: dict = defaultdict(int)
    # projected weights only ever lose multiplicity, so one heap pass suffices
    heap = [(-g.height(x), tuple(-c for c in x), x) for x in remaining]
    heapq.heapify(heap)
    while heap:
        nu = heap[0][2]
        if nu not in remaining:
            heapq.heappop(heap)
            continue
        nu_a = a_proj(nu)
        charge = sub(nu, nu_a)
        for x, m in freudenthal(a, nu_a).multiplicities.items():
            y = add(x, charge)
            left = remaining.get(y, 0) - m
            if left < 0:
                raise ArithmeticError("negative multiplicity while peeling")
            if left:
                remaining[y] = left
            else:
                remaining.pop(y, None)
        b[nu] += 1
    return dict(sorted(b.items()))


def _a_projector(g: RootDatum, a_simple: list):
    if not a_simple:
        return lambda x: g.zero()
    ginv = inverse_matrix([[g.inner(x, y) for y in a_simple] for x in a_simple])
    n = len(a_simple)

    def proj(x):
        rhs = [g.inner(b, x) for b in a_simple]
        return lincomb([sum((ginv[i][j] * rhs[j] for j in range(n)), Fraction(0))
                        for i in range(n)], a_simple, g.dim)

    return proj


def character_by_division(d: RootDatum, mu: Weight, depth: int) -> FormalElement:
    """ch L^mu = Psi^(mu) / Psi^(0) as a power series, on the height window."""
    if not d.is_dominant_integral(mu):
        raise ValueError("highest weight must be dominant integral")
    mu = tuple(mu)
    group = enumerate_group(d)
    num: dict = defaultdict(int)
    den: dict = defaultdict(int)
    for w in group:
        num[_lattice_coords(d, sub(sub(act(d, w, add(mu, d.rho)), d.rho), mu))] += w.sign
        den[_lattice_coords(d, sub(act(d, w, d.rho), d.rho))] += w.sign
    zero = (0,) * d.rank
    if den.get(zero) != 1:
        raise ArithmeticError("denominator must start with 1")
    den_terms = [(q, c) for q, c in den.items() if c and q != zero]
    by_height: dict = defaultdict(list)
    # enumerate the window: non-positive coordinate vectors of height <= depth
    frontier = {zero}
    for h in range(depth + 1):
        by_height[h] = sorted(frontier)
        nxt = set()
        for q in frontier:
            for i in range(d.rank):
                nxt.add(tuple(v - (j == i) for j, v in enumerate(q)))
        frontier = nxt
    coeff: dict = {}
    for h in range(depth + 1):
        for q in by_height[h]:
            c = num.get(q, 0)
            for eta, r in den_terms:
                c -= r * coeff.get(tuple(x - y for x, y in zip(q, eta)), 0)
            if c < 0:
                raise ArithmeticError("division produced a negative multiplicity")
            if c:
                coeff[q] = c
    return FormalElement({add(mu, lincomb(q, d.simple_roots, d.dim)): c for q, c in coeff.items()})


def restrict_to_window(d: RootDatum, mu: Weight, elem: FormalElement | dict, depth: int) -> FormalElement:
    items = elem.items()
    return FormalElement({x: c for x, c in items if d.height(sub(mu, x)) <= depth})
