"""The finite Weyl group: action, enumeration, lengths, orbits.

Elements are identified by their image of the (regular) Weyl vector, so two
WeylElements compare equal iff they act identically.  Each element carries a
canonical reduced word obtained greedily from that image.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .rootspace import RootDatum, Weight, lincomb, scale, sub

MAX_GROUP_ORDER = 500_000


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element; ``word`` (i1, ..., ik) means s_i1 s_i2 ... s_ik."""

    word: tuple = field(compare=False)
    datum: str
    rho_image: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def is_identity(self) -> bool:
        return not self.word

    def __repr__(self):
        w = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"WeylElement({self.datum}: {w})"


def reflect(d: RootDatum, i: int, x: Weight) -> Weight:
    if not 0 <= i < d.rank:
        raise IndexError(f"simple reflection index {i} out of range for {d.name}")
    a = d.simple_roots[i]
    return sub(x, scale(d.inner(x, d.coroots[i]), a))


def act_word(d: RootDatum, word: Sequence[int], x: Weight) -> Weight:
    if not word:
        return tuple(x)
    if len(word) == 1:
        return reflect(d, word[0], x)
    if not all(0 <= i < d.rank for i in word):
        raise IndexError(f"simple reflection index out of range for {d.name}")
    # track Dynkin labels and the accumulated root shift; integral labels stay ints
    labs = [l.numerator if l.denominator == 1 else l for l in d.labels(x)]
    shift = [0] * d.rank
    cartan = d.cartan
    for i in reversed(word):
        n = labs[i]
        if n:
            row = cartan[i]
            labs = [l - n * c for l, c in zip(labs, row)]
            shift[i] += n
    return sub(x, lincomb(shift, d.simple_roots, d.dim))


def act(d: RootDatum, w: WeylElement, x: Weight) -> Weight:
    return act_word(d, w.word, x)


def _greedy_word(d: RootDatum, y: Weight) -> tuple:
    """Word of the element w with w(rho) = y."""
    word = []
    while True:
        labs = d.labels(y)
        i = next((j for j, l in enumerate(labs) if l < 0), None)
        if i is None:
            break
        word.append(i)
        y = reflect(d, i, y)
    return tuple(word)


def element_from_image(d: RootDatum, y: Weight) -> WeylElement:
    """The element mapping rho to y (y must lie in the orbit of rho)."""
    y = tuple(y)
    word = _greedy_word(d, y)
    if act_word(d, word, d.rho) != y:
        raise ValueError("weight is not in the Weyl orbit of rho")
    return WeylElement(word, d.name, y)


def element_sending(d: RootDatum, top: Weight, y: Weight) -> WeylElement:
    """The element w with w(top) = y, for top regular dominant."""
    word = _greedy_word(d, tuple(y))
    if act_word(d, word, top) != tuple(y):
        raise ValueError("weight is not in the Weyl orbit of the given dominant weight")
    return element_from_word(d, word)


def element_from_word(d: RootDatum, word: Sequence[int]) -> WeylElement:
    return element_from_image(d, act_word(d, tuple(word), d.rho))


def identity(d: RootDatum) -> WeylElement:
    return WeylElement((), d.name, d.rho)


def compose(d: RootDatum, a: WeylElement, b: WeylElement) -> WeylElement:
    return element_from_image(d, act(d, a, b.rho_image))


def inverse(d: RootDatum, w: WeylElement) -> WeylElement:
    return element_from_word(d, tuple(reversed(w.word)))


_cache: dict = {}
_lock = threading.Lock()


def enumerate_group(d: RootDatum) -> list[WeylElement]:
    """All elements of W, ordered by length then canonical word."""
    with _lock:
        hit = _cache.get(id(d))
        if hit is not None and hit[0] is d:
            return list(hit[1])
    seen = {d.rho}
    queue = deque([d.rho])
    while queue:
        y = queue.popleft()
        for i in range(d.rank):
            if d.inner(y, d.simple_roots[i]) > 0:
                z = reflect(d, i, y)
                if z not in seen:
                    seen.add(z)
                    if len(seen) > MAX_GROUP_ORDER:
                        raise ValueError(f"Weyl group of {d.name} too large to enumerate")
                    queue.append(z)
    elems = sorted((element_from_image(d, y) for y in seen), key=lambda w: (len(w.word), w.word))
    with _lock:
        _cache[id(d)] = (d, elems)
    return list(elems)


def length(d: RootDatum, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for a in d.roots if d.inner(act(d, w, a), d.rho_coroot) < 0)


def to_dominant(d: RootDatum, x: Weight) -> tuple[Weight, WeylElement, int]:
    """Dominant representative of x, the minimal-length w with w(x) dominant, and sign."""
    word = []
    y = tuple(x)
    while True:
        labs = d.labels(y)
        i = next((j for j, l in enumerate(labs) if l < 0), None)
        if i is None:
            break
        word.append(i)
        y = reflect(d, i, y)
    w = element_from_word(d, tuple(reversed(word)))
    return y, w, w.sign


def orbit(d: RootDatum, x: Weight) -> set:
    x = tuple(x)
    seen = {x}
    queue = [x]
    while queue:
        y = queue.pop()
        for i in range(d.rank):
            z = reflect(d, i, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def is_regular(d: RootDatum, x: Weight) -> bool:
    return all(d.inner(x, a) != 0 for a in d.roots)


def signed_sum(d: RootDatum) -> int:
    return sum(w.sign for w in enumerate_group(d))

