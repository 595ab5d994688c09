from __future__ import annotations

from dataclasses import dataclass

__all__ = ["EvalPolicy"]


@dataclass(frozen=True)
class EvalPolicy:
    """
    Numerical knobs for the special function evaluations in #SpecialFunctions.

    :param series_tol: Relative size of the last series term at which a power series is considered converged.
    :param max_terms: Upper bound on the number of series terms before #SpecialFunctions.NonConvergence is raised.
    :param recurrence_switch_threshold: Value of `y**2` above which Hermite functions of positive argument in the
        non-oscillatory region are computed from the integral representation and an upward recurrence in the order
        instead of the two Kummer series.
    """

    series_tol: float = 1e-15
    max_terms: int = 1000
    recurrence_switch_threshold: float = 10.0

    def __post_init__(self) -> None:
        if not self.series_tol > 0:
            raise ValueError(f"EvalPolicy.series_tol must be positive, got {self.series_tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"EvalPolicy.max_terms must be at least 1, got {self.max_terms!r}")
        if self.recurrence_switch_threshold < 0:
            raise ValueError(
                f"EvalPolicy.recurrence_switch_threshold must be non-negative, got {self.recurrence_switch_threshold!r}"
            )
