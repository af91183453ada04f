"""Injection fan and the recurrent computation of branching coefficients.

The projected character satisfies

    (sum_xi k_xi e^xi) * F = sum_u eps(u) dim L_perp^{perp_hw(u)} e^{pi_{a~}[u(mu+rho)-rho]}

with F = prod_{a in D+ \\ D_perp+} (1 - e^{-pi a}) / prod_{b in D_a+} (1 - e^{-b})
        = -sum_gamma s(gamma) e^{-gamma}.

Solving for k from the top down along an additive total order on weights gives
the recurrence; the branching coefficients are the values of k on the closed
fundamental chamber of a.
"""

from __future__ import annotations

import heapq
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import EmbeddingSpec
from .formal import FormalElement
from .rootspace import RootDatum, Weight, add, neg, sub
from .singular import SingularDecomposition, decompose
from .weyl import WeylElement, act, enumerate_group


class DepthError(RuntimeError):
    """The truncation window is too small for the requested computation."""


def order_key(d: RootDatum, x: Weight) -> tuple:
    """Additive total order on weights: ambient height, then coordinates."""
    return (d.height(x), tuple(x))


@dataclass(frozen=True)
class Fan:
    gamma0: Weight
    s0: int
    shifts: dict  # gamma in Gamma -> s(gamma + gamma0)
    depth: int
    exponents: dict = field(default_factory=dict)  # projected root -> exponent

    def s(self, gamma: Weight) -> int:
        """The coefficient s(gamma) of the defining expansion."""
        gamma = tuple(gamma)
        if gamma == tuple(self.gamma0):
            return self.s0
        return self.shifts.get(sub(gamma, self.gamma0), 0)

    def polynomial(self) -> FormalElement:
        """-sum_gamma s(gamma) e^{-gamma}."""
        terms = {neg(self.gamma0): -self.s0}
        for g, c in self.shifts.items():
            terms[neg(add(g, self.gamma0))] = -c
        return FormalElement(terms)


def fan_exponents(spec: EmbeddingSpec) -> dict:
    exps: dict = defaultdict(int)
    pset = set(spec.perp_roots)
    for a in spec.ambient.roots:
        if a not in pset:
            exps[spec.project_a_tilde(a)] += 1
    for b in spec.a_datum.roots:
        exps[b] -= 1
    return {g: n for g, n in sorted(exps.items()) if n}


def compute_fan(spec: EmbeddingSpec, depth: int = 8) -> Fan:
    """Expand F; ``depth`` is recorded for the recurrence window.

    Every positive root of a lies outside a_perp and projects to itself, so
    the denominator cancels and F is a polynomial.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    g = spec.ambient
    exps = fan_exponents(spec)
    poly = FormalElement.one(g.dim)
    for gamma, n in exps.items():
        if n < 0:
            raise ArithmeticError(f"fan denominator does not cancel at {gamma}")
        factor = FormalElement({g.zero(): 1, neg(gamma): -1})
        for _ in range(n):
            poly = poly * factor
    s = {neg(x): -c for x, c in poly.items()}
    gamma0 = min(s, key=lambda x: order_key(g, x))
    shifts = {sub(x, gamma0): c for x, c in sorted(s.items()) if x != gamma0}
    return Fan(gamma0, s[gamma0], shifts, depth, exps)


def fan_round_trip(spec: EmbeddingSpec, fan: Fan) -> FormalElement:
    """Divide the fan polynomial back by its defining factors; 1 when consistent."""
    out = fan.polynomial()
    for gamma, n in fan.exponents.items():
        for _ in range(n):
            out = out.divide_one_minus(neg(gamma))
    return out


@dataclass
class BranchingResult:
    mu: Weight
    k_table: dict
    b: dict
    fan: Fan
    depth: int

    def sum_rule(self, spec: EmbeddingSpec) -> int:
        return sum(m * spec.a_tilde_dimension(nu) for nu, m in self.b.items())


def perp_dimension(spec: EmbeddingSpec, u: WeylElement, mu: Weight) -> int:
    g = spec.ambient
    y = sub(act(g, u, add(mu, g.rho)), g.rho)
    lam = sub(spec.project_perp(y), spec.defect_perp)
    return spec.perp_datum.weyl_dimension(lam)


def default_depth(spec: EmbeddingSpec, mu: Weight) -> int:
    """Height window guaranteed to contain every nonzero k.

    Nonzero k sit at w(nu+rho_a)-rho_a with nu a projected weight of L^mu, so
    their norm is at most |mu| + 2|rho_a|; Cauchy-Schwarz against rho^vee bounds
    the height spread.
    """
    g = spec.ambient
    norm = lambda x: math.sqrt(float(g.inner(x, x)))
    r = norm(mu) + 2 * norm(spec.a_datum.rho)
    return math.ceil(2 * r * norm(g.rho_coroot)) + 2


def sources(spec: EmbeddingSpec, mu: Weight, dec: SingularDecomposition | None = None) -> dict:
    """position pi_{a~}[u(mu+rho)-rho] -> sum of eps(u) dim L_perp^{perp_hw(u)}."""
    dec = dec or decompose(spec, mu)
    src: dict = defaultdict(int)
    for e in dec.entries:
        pos = sub(e.carrier, spec.defect_perp)
        src[pos] += e.sign * spec.perp_datum.weyl_dimension(e.perp_hw)
    return {p: c for p, c in src.items() if c}


def _scaled(vectors) -> int:
    """Common denominator of all coordinates."""
    n = 1
    for v in vectors:
        for c in v:
            n = math.lcm(n, Fraction(c).denominator)
    return n


def run_recurrence(spec: EmbeddingSpec, src: dict, fan: Fan, depth: int) -> dict:
    """Solve for k from the top down; integer-encoded for speed."""
    g = spec.ambient
    if not src:
        return {}
    gamma0, s0 = fan.gamma0, fan.s0
    starts = [add(p, gamma0) for p in src]
    n = _scaled(starts + [gamma0] + list(fan.shifts))
    hv = [g.form_scale * c for c in g.rho_coroot]
    m = _scaled([hv])

    def enc(x):
        return tuple(int(c * n) for c in x)

    hv_int = tuple(int(c * m) for c in hv)

    def height(x):
        return sum(a * b for a, b in zip(hv_int, x))

    shifts = [(enc(gm), c) for gm, c in fan.shifts.items()]
    source = {enc(add(p, gamma0)): c for p, c in src.items()}
    top_h = max(height(x) for x in source)
    limit = depth * n * m
    k: dict = {}
    heap = []
    queued = set()

    def push(x):
        if x not in queued:
            queued.add(x)
            heapq.heappush(heap, (-height(x), tuple(-v for v in x), x))

    for x in source:
        push(x)
    while heap:
        _, _, xi = heapq.heappop(heap)
        acc = source.get(xi, 0)
        for gm, c in shifts:
            y = tuple(a + b for a, b in zip(xi, gm))
            acc += c * k.get(y, 0)
        q, r = divmod(-acc, s0)
        if r:
            raise ArithmeticError("non-integral branching coefficient")
        if q:
            if top_h - height(xi) > limit:
                raise DepthError(f"nonzero coefficient beyond depth {depth}; increase depth")
            k[xi] = q
            for gm, _ in shifts:
                push(tuple(a - b for a, b in zip(xi, gm)))
    return {tuple(Fraction(c, n) for c in x): v for x, v in k.items()}


def branch(spec: EmbeddingSpec, mu: Weight, depth: int | None = None) -> BranchingResult:
    g = spec.ambient
    if not g.is_dominant_integral(mu):
        raise ValueError("highest weight must be dominant integral")
    if depth is None:
        depth = default_depth(spec, mu)
    fan = compute_fan(spec, depth)
    k = run_recurrence(spec, sources(spec, mu), fan, depth)
    b = {}
    for xi, c in sorted(k.items()):
        if spec.is_a_dominant(xi):
            if c < 0:
                raise ArithmeticError(f"negative branching coefficient at {xi}")
            b[xi] = c
    return BranchingResult(tuple(mu), k, b, fan, depth)


def a_tilde_singular(spec: EmbeddingSpec, nu: Weight) -> FormalElement:
    """Psi_{a~}^nu = sum_{w in W_a} eps(w) e^{w(nu+rho_a)-rho_a}."""
    a = spec.a_datum
    top = add(nu, a.rho)
    return FormalElement((sub(act(a, w, top), a.rho), w.sign) for w in enumerate_group(a))


def k_from_branching(spec: EmbeddingSpec, b: dict) -> dict:
    out = FormalElement()
    for nu, m in b.items():
        out = out + a_tilde_singular(spec, nu) * m
    return dict(out.items())
