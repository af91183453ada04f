"""The standard verification matrix of (algebra, subalgebra, highest weight) triples."""

from __future__ import annotations

from itertools import combinations, product

from .embedding import EmbeddingSpec, build_embedding
from .rootspace import build_root_datum

ALGEBRAS = ("A2", "B2", "G2", "A3", "B3", "C3")


def subalgebra_roots(name: str) -> list[list[list[int]]]:
    """Every nonempty simple-root subset, then the A1 on the highest root."""
    d = build_root_datum(name)
    r = d.rank
    out = []
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            out.append([[int(i == j) for j in range(r)] for i in subset])
    theta = list(d.positive_root_coords[-1])
    if [theta] not in out:
        out.append([theta])
    return out


def label_grid(rank: int, top: int = 2) -> list[tuple[int, ...]]:
    return list(product(range(top + 1), repeat=rank))


def specs(algebras=ALGEBRAS) -> list[EmbeddingSpec]:
    return [build_embedding(name, a) for name in algebras for a in subalgebra_roots(name)]


def triples(algebras=ALGEBRAS, top: int = 2):
    """Yield (spec, mu) over the matrix."""
    for spec in specs(algebras):
        g = spec.ambient
        for labels in label_grid(g.rank, top):
            yield spec, g.from_labels(labels)
