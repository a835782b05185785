"""Run configurations shared by the CLI, the experiment scripts and the acceptance suite."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SolveConfig:
    mu: Fraction = Fraction(1)
    degree: int = 4
    N: int | None = None  # None: classical associator only
    seed: int | None = None  # None: zero representative in underdetermined degrees

    def free_choice(self):
        if self.seed is None:
            return None
        from .solver import random_free_choice
        return random_free_choice(self.seed)


@dataclass(frozen=True)
class SuiteConfig:
    moduli: tuple = (1, 2, 3)
    lie_degree: int = 5
    cd_degree: int = 3
    moperad_degree: int = 3
    assoc_degree: int = 4
    cyc_N: int = 2
    cyc_degree: int = 3
    torsor_degree: int = 3
    samples: int = 20
    word_length: int = 10
    seed: int = 0

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items()}
