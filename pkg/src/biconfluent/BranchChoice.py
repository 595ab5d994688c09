from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

__all__ = ["BranchChoice"]


@dataclass(frozen=True)
class BranchChoice:
    """
    The three independent sign choices of the map to the bi-confluent Heun equation: the sign in front of the square
    root in `gamma`, the sign of `epsilon` and the sign of `s0 = +-(-epsilon/2)^(1/2)`.
    """

    BOUND_STATE: ClassVar[BranchChoice]

    sign_gamma: int = -1
    sign_epsilon: int = -1
    sign_s0: int = 1

    def __post_init__(self) -> None:
        for name in ("sign_gamma", "sign_epsilon", "sign_s0"):
            if getattr(self, name) not in (1, -1):
                raise ValueError(f"BranchChoice.{name} must be +1 or -1, got {getattr(self, name)!r}")


BranchChoice.BOUND_STATE = BranchChoice(sign_gamma=-1, sign_epsilon=-1, sign_s0=1)
