"""Small named groups used to exercise the normal-subgroup machinery.

Each entry is built from explicit generators, so the corpus doubles as a
regression fixture: orders, class counts, normal subgroup counts and
minimal abelian indices for these groups are all known by hand.
"""

from __future__ import annotations

from .groups import FiniteGroup, Permutation, close_generators
from .semidirect import build_group

__all__ = ["small_group_corpus"]


def small_group_corpus() -> dict[str, FiniteGroup]:
    """Named corpus, keyed by a short structural name."""

    def perms(degree: int, *cycle_lists) -> list[Permutation]:
        return [Permutation.from_cycles(degree, cycles) for cycles in cycle_lists]

    corpus: dict[str, FiniteGroup] = {}
    corpus["s3"] = close_generators(perms(3, [[1, 2]], [[2, 3]]))
    corpus["d6"] = close_generators(perms(6, [[1, 2, 3, 4, 5, 6]], [[2, 6], [3, 5]]))
    corpus["c6"] = close_generators(perms(6, [[1, 2, 3, 4, 5, 6]]))
    corpus["q8"] = close_generators(
        perms(8, [[1, 2, 3, 4], [5, 6, 7, 8]], [[1, 5, 3, 7], [2, 8, 4, 6]])
    )
    corpus["c4xc2"] = close_generators(perms(6, [[1, 2, 3, 4]], [[5, 6]]))
    corpus["a4"] = close_generators(perms(4, [[1, 2, 3]], [[1, 2], [3, 4]]))
    corpus["s4"] = close_generators(perms(4, [[1, 2]], [[1, 2, 3, 4]]))
    corpus["h2"] = build_group(2)
    return corpus
