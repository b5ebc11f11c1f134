import sys
from pathlib import Path

import pytest

from ramanslab import (AtomicParams, SlabConfig, build_spectral_response,
                       default_sweep_grid)

sys.path.insert(0, str(Path(__file__).parent))


def make_atoms(**overrides):
    return AtomicParams(**overrides)


def make_slab(**overrides):
    return SlabConfig(**overrides)


def response_for(omega_c=1.5, thickness="resonant", **atom_overrides):
    atoms = AtomicParams(Omega_c=omega_c, **atom_overrides)
    slab = SlabConfig(thickness=thickness)
    return build_spectral_response(atoms, slab, default_sweep_grid(atoms, slab))


@pytest.fixture(scope="session")
def fig2_response():
    return response_for(1.5, "resonant")


@pytest.fixture(scope="session")
def fig7_response():
    return response_for(6.0, "resonant")
