from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CutStats:
    """Expected cut fraction together with its derived performance measures.

    ``improvement`` is the gain over a uniformly random assignment and
    ``scaled_b`` is the coefficient b in ``cut_fraction = 1/2 + b / sqrt(D)``.
    """

    cut_fraction: float
    improvement: float
    scaled_b: float
    degree: int

    @classmethod
    def from_cut_fraction(cls, cut_fraction: float, degree: int) -> CutStats:
        improvement = cut_fraction - 0.5
        return cls(cut_fraction, improvement, improvement * math.sqrt(degree), degree)

    @classmethod
    def from_improvement(cls, improvement: float, degree: int) -> CutStats:
        return cls(0.5 + improvement, improvement, improvement * math.sqrt(degree), degree)

    def as_dict(self) -> dict:
        return {
            "cut_fraction": self.cut_fraction,
            "improvement": self.improvement,
            "scaled_b": self.scaled_b,
            "degree": self.degree,
        }
