"""Configuration grid for the offline representation/reducer/clusterer study."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..cluster.assignment import SWEEP_K_VALUES, USER_ALGORITHMS
from ..errors import ParameterError
from ..reduce.types import METHOD_SVD, METHOD_UMAP, SWEEP_COMPONENTS
from ..text.matrix import REPRESENTATION_TAGS


@dataclass(frozen=True, order=True)
class SweepConfig:
    """One grid point; field order defines the lexicographic config order."""

    representation: str
    reducer: str
    n_components: int
    algorithm: str
    k: int
    seed: int = 0

    def label(self) -> str:
        return (
            f"{self.representation}/{self.reducer}-{self.n_components}"
            f"/{self.algorithm}-k{self.k}/s{self.seed}"
        )

    def to_dict(self) -> dict:
        return {
            "representation": self.representation,
            "reducer": self.reducer,
            "n_components": self.n_components,
            "algorithm": self.algorithm,
            "k": self.k,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SweepGrid:
    representations: tuple[str, ...]
    reducers: tuple[str, ...] = (METHOD_SVD, METHOD_UMAP)
    components: tuple[int, ...] = SWEEP_COMPONENTS
    algorithms: tuple[str, ...] = USER_ALGORITHMS
    k_values: tuple[int, ...] = SWEEP_K_VALUES
    seeds: tuple[int, ...] = (0,)

    def __post_init__(self):
        axes = {
            "representations": self.representations,
            "reducers": self.reducers,
            "components": self.components,
            "algorithms": self.algorithms,
            "k_values": self.k_values,
            "seeds": self.seeds,
        }
        for name, values in axes.items():
            if not values:
                raise ParameterError(f"grid axis {name!r} is empty")
        unknown = set(self.representations) - set(REPRESENTATION_TAGS)
        if unknown:
            raise ParameterError(f"unknown representations: {sorted(unknown)}")

    @classmethod
    def paper_grid(cls, representations=("tfidf", "hashed", "external"), seeds=(0,)):
        return cls(representations=tuple(representations), seeds=tuple(seeds))


def enumerate_grid(grid: SweepGrid) -> list[SweepConfig]:
    """Full Cartesian product in deterministic lexicographic order."""
    return [
        SweepConfig(rep, red, comp, algo, k, seed)
        for rep, red, comp, algo, k, seed in itertools.product(
            sorted(grid.representations),
            sorted(grid.reducers),
            sorted(grid.components),
            sorted(grid.algorithms),
            sorted(grid.k_values),
            sorted(grid.seeds),
        )
    ]
