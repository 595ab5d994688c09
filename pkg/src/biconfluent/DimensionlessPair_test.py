import math

import pytest

from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.HeunParameters import map_potential
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential


def test__DimensionlessPair__from_potential() -> None:
    pair = DimensionlessPair.from_potential(Potential(v2=3.0, v4=1.0, v6=1.0))
    assert pair.xi0 == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)))
    assert pair.w == pytest.approx(1.5)


def test__DimensionlessPair__round_trip() -> None:
    consts = PhysicalConstants(hbar=1.3, mass=0.7)
    pair = DimensionlessPair(xi0=-1.25, w=0.6)
    for N in range(4):
        pot = pair.to_potential(N, consts, v6=2.5, v0=-0.4)
        assert pot.v_m2 == consts.level_v_m2(N)
        assert pot.v0 == -0.4
        back = DimensionlessPair.from_potential(pot, consts)
        assert back.xi0 == pytest.approx(pair.xi0, rel=1e-13)
        assert back.w == pytest.approx(pair.w, rel=1e-13)


def test__DimensionlessPair__matches_the_heun_parameters() -> None:
    consts = PhysicalConstants(hbar=0.9, mass=1.4)
    pair = DimensionlessPair(xi0=0.8, w=-2.1)
    for N in range(4):
        hp, _ = map_potential(pair.to_potential(N, consts, v6=0.6), 0.0, consts)
        assert hp.s0(1) * hp.xi_shift == pytest.approx(pair.xi0, rel=1e-12)
        assert hp.mu == pytest.approx(pair.hermite_index(N), abs=1e-12)


def test__DimensionlessPair__errors() -> None:
    with pytest.raises(ValueError):
        DimensionlessPair(math.nan, 0.0)
    with pytest.raises(ValueError):
        DimensionlessPair.from_potential(Potential(v2=1.0))
    with pytest.raises(ValueError):
        DimensionlessPair(0.0, 0.0).to_potential(0, v6=-1.0)
