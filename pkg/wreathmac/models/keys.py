from __future__ import annotations

import json
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from wreathmac.services.partcomb import AffineWeylElt, MultiPartition, multi_size


Variant = Literal["standard", "forward", "opposite"]


class WreathKey(BaseModel):
    """Index of one wreath Macdonald polynomial: (r, w = (u, beta), mu, variant)."""

    model_config = ConfigDict(frozen=True)

    r: int
    u: Tuple[int, ...]
    beta: Tuple[int, ...]
    mu: Tuple[Tuple[int, ...], ...]
    variant: Variant = "standard"

    @model_validator(mode="after")
    def _check_shape(self) -> "WreathKey":
        if self.r < 1:
            raise ValueError("r must be positive")
        if sorted(self.u) != list(range(self.r)):
            raise ValueError(f"u={self.u} is not a permutation of 0..{self.r - 1}")
        if len(self.beta) != self.r or sum(self.beta) != 0:
            raise ValueError(f"beta={self.beta} must be a zero-sum vector of length {self.r}")
        if len(self.mu) != self.r:
            raise ValueError(f"mu has {len(self.mu)} components, expected {self.r}")
        for part in self.mu:
            if any(x <= 0 for x in part) or list(part) != sorted(part, reverse=True):
                raise ValueError(f"{part} is not a partition")
        return self

    @classmethod
    def of(cls, w: AffineWeylElt, mu: MultiPartition, variant: Variant = "standard") -> "WreathKey":
        return cls(r=w.r, u=w.u, beta=w.beta, mu=mu, variant=variant)

    @property
    def n(self) -> int:
        return multi_size(self.mu)

    @property
    def w(self) -> AffineWeylElt:
        return AffineWeylElt(self.u, self.beta)

    def with_mu(self, mu: MultiPartition) -> "WreathKey":
        return self.model_copy(update={"mu": tuple(tuple(p) for p in mu)})

    def canonical_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
