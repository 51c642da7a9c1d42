import numpy as np
import pytest

import magspec as ms


@pytest.fixture(scope="session")
def square_spectrum():
    """Unit-square Dirichlet spectrum, long enough for k <= 200 checks."""
    return ms.box_spectrum([1.0, 1.0], 300)


@pytest.fixture(scope="session")
def disk_unit_spectrum():
    return ms.disk_spectrum(1.0, 250)


@pytest.fixture(scope="session")
def small_square_op():
    """Non-magnetic unit square at h=1/16 (dense-solver territory)."""
    dom = ms.build_domain(ms.Rectangle(1.0, 1.0), 1 / 16)
    return dom, ms.assemble(dom, ms.GaugeSpec.none(), ms.PotentialSpec.zero())


@pytest.fixture(scope="session")
def magnetic_square_op():
    """Uniform field B=5 on the unit square at h=1/16."""
    dom = ms.build_domain(ms.Rectangle(1.0, 1.0), 1 / 16)
    return dom, ms.assemble(dom, ms.GaugeSpec.uniform(5.0), ms.PotentialSpec.zero())


@pytest.fixture(scope="session")
def square_ground_state_h64():
    """Ground state of the non-magnetic unit square at h=1/64."""
    dom = ms.build_domain(ms.Rectangle(1.0, 1.0), 1 / 64)
    op = ms.assemble(dom, ms.GaugeSpec.none(), ms.PotentialSpec.zero())
    spec, pairs = ms.lowest_eigenpairs(op, 1)
    return dom, spec, pairs[0]


def rng(seed=0):
    return np.random.default_rng(seed)
