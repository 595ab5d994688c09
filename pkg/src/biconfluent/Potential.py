from __future__ import annotations

from dataclasses import dataclass
from typing import overload

import numpy as np
import numpy.typing as npt

__all__ = ["Potential"]


@dataclass(frozen=True)
class Potential:
    """
    The sextic oscillator `V(r) = v_m2/r^2 + v0 + v2 r^2 + v4 r^4 + v6 r^6`.
    """

    v_m2: float = 0.0
    v0: float = 0.0
    v2: float = 0.0
    v4: float = 0.0
    v6: float = 0.0

    @overload
    def __call__(self, r: float) -> float:
        ...

    @overload
    def __call__(self, r: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        ...

    def __call__(self, r: float | npt.NDArray[np.float64]) -> float | npt.NDArray[np.float64]:
        r2 = r * r
        return self.v_m2 / r2 + self.v0 + r2 * (self.v2 + r2 * (self.v4 + r2 * self.v6))

    def is_confining(self) -> bool:
        return self.v6 > 0
