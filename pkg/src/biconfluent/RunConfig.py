from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from os import PathLike
from pathlib import Path
from typing import Any, cast

import databind.json
import yaml
from databind.core import ConversionError

from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential

__all__ = ["RunConfig"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """
    Potential coefficients and physical constants shared by the commands, loaded from a YAML file such as

    ```yaml
    v2: -6.0
    v4: 0.0
    v6: 1.0
    hbar: 1.0
    mass: 0.5
    ```

    Without `v_m2` the centrifugal coefficient of the requested hierarchy level is used.
    """

    class Error(Exception):
        pass

    @dataclass
    class InvalidFile(Error):
        path: str
        message: str

        def __str__(self) -> str:
            return f"invalid configuration {self.path}: {self.message}"

    v_m2: float | None = None
    v0: float = 0.0
    v2: float = 0.0
    v4: float = 0.0
    v6: float = 1.0
    hbar: float = 1.0
    mass: float = 0.5

    @classmethod
    def load(cls, path: PathLike[str] | str) -> RunConfig:
        """
        :raise RunConfig.InvalidFile: If the file is not a mapping of the fields of #RunConfig.
        """

        with Path(path).open() as fp:
            payload = yaml.safe_load(fp)
        if payload is None:
            payload = {}
        try:
            config = cast(RunConfig, databind.json.load(payload, RunConfig, filename=str(path)))
            config.constants()
        except (ConversionError, ValueError) as exc:
            raise cls.InvalidFile(str(path), str(exc)) from exc
        logger.debug("loaded %s from %s", config, path)
        return config

    def with_overrides(self, **values: Any) -> RunConfig:
        """
        Replace the fields given with a value other than `None`.
        """

        return replace(self, **{k: v for k, v in values.items() if v is not None})

    def constants(self) -> PhysicalConstants:
        return PhysicalConstants(hbar=self.hbar, mass=self.mass)

    def potential(self, level_N: int) -> Potential:
        v_m2 = self.constants().level_v_m2(level_N) if self.v_m2 is None else self.v_m2
        return Potential(v_m2=v_m2, v0=self.v0, v2=self.v2, v4=self.v4, v6=self.v6)
