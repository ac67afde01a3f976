import math

import numpy as np
import pytest

from metric_ripple import GaussianPacket, SymTensor3, TwoSlitSetup

LAM = 5e-11
K_TABLE = 2 * math.pi / LAM
C_LIGHT = 299792458.0


@pytest.fixture
def cross_packet():
    """Cross-polarized packet at Table I scale, |A| = 1e-6."""
    return GaussianPacket(SymTensor3.from_components(a12=1e-6), K_TABLE,
                          C_LIGHT * K_TABLE, 0.0, 1e-5)


@pytest.fixture
def table1_setup():
    return TwoSlitSetup.table1()


@pytest.fixture
def plane_setup():
    """Table I geometry with the envelope switched off."""
    return TwoSlitSetup.table1(sigma=math.inf)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
