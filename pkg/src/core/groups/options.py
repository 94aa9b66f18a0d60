"""
Extraction Settings
===================

`ExtractionConfig` is shared by the search, the null model and the
extraction loop. Only the significance level comes with a fixed meaning;
the restart count and the number of Erdos-Renyi replicas trade run time for
search quality and p-value resolution.
"""

from dataclasses import asdict, dataclass, replace
from typing import Optional

from src.core.config import DEFAULT_ALPHA, DEFAULT_NULL_SAMPLES, DEFAULT_RESTARTS, DEFAULT_SEED
from src.core.errors import ContractViolation


@dataclass(frozen=True)
class ExtractionConfig:
    """
    Parameters of the sequential group extraction.

    Attributes:
        restarts: Hill climbs per search (alternating community-like and
            module-like initialisations).
        null_samples: Erdos-Renyi replicas per null estimate.
        alpha: A group is kept when its p-value is below alpha.
        seed: Master seed; every random stream is derived from it.
        max_groups: Optional cap on the number of extracted groups.
        workers: Parallelism for restarts and replicas (1 = serial).
    """

    restarts: int = DEFAULT_RESTARTS
    null_samples: int = DEFAULT_NULL_SAMPLES
    alpha: float = DEFAULT_ALPHA
    seed: int = DEFAULT_SEED
    max_groups: Optional[int] = None
    workers: int = 1

    def validate(self) -> "ExtractionConfig":
        if self.restarts < 1:
            raise ContractViolation(f"restarts must be >= 1, got {self.restarts}")
        if self.null_samples < 1:
            raise ContractViolation(f"null_samples must be >= 1, got {self.null_samples}")
        if not 0.0 < self.alpha < 1.0:
            raise ContractViolation(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.max_groups is not None and self.max_groups < 0:
            raise ContractViolation(f"max_groups must be >= 0, got {self.max_groups}")
        if self.workers < 1:
            raise ContractViolation(f"workers must be >= 1, got {self.workers}")
        return self

    def serial(self) -> "ExtractionConfig":
        """Same settings with parallelism switched off (for nested work)."""
        return self if self.workers == 1 else replace(self, workers=1)

    def to_dict(self) -> dict:
        """Echo of the search-relevant settings; `workers` never changes results."""
        data = asdict(self)
        data.pop("workers")
        return data
