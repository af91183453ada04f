"""Sparse formal elements: finite integer combinations of exponentials e^x.

Keys are tuples of numbers.  Two coordinate conventions are used in the
package: absolute weights in the ambient e-basis (Fractions), and integer
simple-root coordinates relative to a top weight (used for truncated
characters, where ``(0,...,0)`` is the top and heights grow downward).
"""

from __future__ import annotations

import heapq
import math
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Mapping


def _vadd(x: tuple, y: tuple) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def _floordiv(a, b) -> int:
    if isinstance(a, int) and isinstance(b, int):
        return a // b
    return math.floor(Fraction(a) / Fraction(b))


class FormalElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = defaultdict(int)
        for k, c in items:
            acc[tuple(k)] += c
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def monomial(cls, key, coeff: int = 1) -> "FormalElement":
        return cls({tuple(key): coeff})

    @classmethod
    def one(cls, dim: int) -> "FormalElement":
        return cls({(0,) * dim: 1})

    # --- container protocol ---

    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> set:
        return set(self._terms)

    def sorted_items(self) -> list:
        return sorted(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, FormalElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = " + ".join(f"{c}*e^{list(map(str, k))}" for k, c in self.sorted_items())
        return f"FormalElement({body or '0'})"

    # --- ring operations ---

    def __add__(self, other: "FormalElement") -> "FormalElement":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return FormalElement(acc)

    def __neg__(self) -> "FormalElement":
        return FormalElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FormalElement") -> "FormalElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalElement({k: c * other for k, c in self._terms.items()})
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "FormalElement", keep: Callable | None = None) -> "FormalElement":
        acc: dict = defaultdict(int)
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _vadd(k1, k2)
                if keep is None or keep(k):
                    acc[k] += c1 * c2
        return FormalElement(acc)

    def shift(self, v) -> "FormalElement":
        v = tuple(v)
        return FormalElement({_vadd(k, v): c for k, c in self._terms.items()})

    def map_keys(self, f: Callable) -> "FormalElement":
        return FormalElement((f(k), c) for k, c in self._terms.items())

    def restrict(self, keep: Callable) -> "FormalElement":
        return FormalElement({k: c for k, c in self._terms.items() if keep(k)})

    def divide_one_minus(self, g) -> "FormalElement":
        """Exact quotient by ``(1 - e^g)``; raises if it is not a polynomial.

        With ``P = (1 - e^g) Q`` one has ``Q(x) = sum_{k>=0} P(x - k g)``, so Q is
        the running sum along each g-string, which must vanish past the string.
        """
        g = tuple(g)
        if not any(g):
            raise ZeroDivisionError("division by 1 - e^0")
        i = next(j for j, a in enumerate(g) if a)
        strings: dict = defaultdict(dict)
        for k, c in self._terms.items():
            n = _floordiv(k[i], g[i])
            base = tuple(a - n * b for a, b in zip(k, g))
            strings[base][n] = c
        out = {}
        for base, row in strings.items():
            lo, hi = min(row), max(row)
            run = 0
            for n in range(lo, hi + 1):
                run += row.get(n, 0)
                if run and n < hi:
                    out[tuple(a + n * b for a, b in zip(base, g))] = run
            if run:
                raise ArithmeticError(f"not divisible by 1 - e^{list(map(str, g))}")
        return FormalElement(out)

    def times_geometric(self, g, keep: Callable, level: Callable) -> "FormalElement":
        """Multiply by ``sum_{k>=0} e^{k g}``, keeping only keys accepted by ``keep``.

        ``level(key + g) > level(key)`` must hold and ``keep`` must be downward
        closed in ``level`` so the truncated result is exact.
        """
        g = tuple(g)
        acc = {k: c for k, c in self._terms.items() if keep(k)}
        heap = [(level(k), k) for k in acc]
        heapq.heapify(heap)
        done = set()
        while heap:
            _, k = heapq.heappop(heap)
            if k in done:
                continue
            done.add(k)
            c = acc.get(k, 0)
            if not c:
                continue
            y = _vadd(k, g)
            if keep(y):
                if y not in acc:
                    heapq.heappush(heap, (level(y), y))
                acc[y] = acc.get(y, 0) + c
        return FormalElement(acc)
