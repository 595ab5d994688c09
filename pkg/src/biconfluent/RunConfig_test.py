import tempfile
from pathlib import Path
from typing import Iterator

import pytest

from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.RunConfig import RunConfig


@pytest.fixture
def tempdir() -> Iterator[Path]:
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


def test__RunConfig__load__reads_a_yaml_mapping(tempdir: Path) -> None:
    path = tempdir / "run.yaml"
    path.write_text("v2: -6.0\nv4: 0.5\nv6: 2.0\nhbar: 1.0\nmass: 1.0\n")
    config = RunConfig.load(path)
    assert config == RunConfig(v2=-6.0, v4=0.5, v6=2.0, hbar=1.0, mass=1.0)
    assert config.constants() == PhysicalConstants(hbar=1.0, mass=1.0)


def test__RunConfig__load__empty_file_gives_the_defaults(tempdir: Path) -> None:
    path = tempdir / "run.yaml"
    path.write_text("")
    assert RunConfig.load(path) == RunConfig()


@pytest.mark.parametrize("text", ["v6: [1.0, 2.0]\n", "hbar: -1.0\n", "mass: 0.0\n"])
def test__RunConfig__load__invalid_file(tempdir: Path, text: str) -> None:
    path = tempdir / "run.yaml"
    path.write_text(text)
    with pytest.raises(RunConfig.InvalidFile) as excinfo:
        RunConfig.load(path)
    assert excinfo.value.path == str(path)


def test__RunConfig__with_overrides__ignores_unset_values() -> None:
    config = RunConfig(v2=-6.0, v6=2.0).with_overrides(v2=1.5, v4=None, v6=None)
    assert config == RunConfig(v2=1.5, v6=2.0)


def test__RunConfig__potential__defaults_to_the_level_centrifugal_term() -> None:
    config = RunConfig(v2=2.0)
    assert config.potential(0) == Potential(v_m2=0.75, v2=2.0, v6=1.0)
    assert config.potential(1).v_m2 == PhysicalConstants().level_v_m2(1)
    assert RunConfig(v_m2=0.3).potential(1).v_m2 == 0.3
