"""Shared fixtures for the p-adic Lattice Tool tests.

Authors
-------
    - Mees Fix
"""

import matplotlib

matplotlib.use("Agg")

import pytest  # noqa: E402

from padic_lattice_tool.lattice import gen_instance, latticeBasis  # noqa: E402
from padic_lattice_tool.norms import identity_space  # noqa: E402

ZETA5_ROWS = [(1, 0, 0, 0), (1, 2, 0, 0), (2, 8, 16, 16)]
ZETA5_ORTHOGONAL_ROWS = [(1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 16, 16)]


@pytest.fixture
def zeta5_space():
    """Q_2(zeta_5) with basis 1, zeta, zeta^2, zeta^3 and the maximum norm."""
    return identity_space(2, 4)


@pytest.fixture
def zeta5_basis(zeta5_space):
    return latticeBasis(zeta5_space, ZETA5_ROWS)


@pytest.fixture
def zeta5_orthogonal_basis(zeta5_space):
    return latticeBasis(zeta5_space, ZETA5_ORTHOGONAL_ROWS)


@pytest.fixture
def zeta5_full_rank_basis(zeta5_space):
    return latticeBasis(zeta5_space, ZETA5_ROWS + [(0, 0, 0, 16)])


@pytest.fixture
def small_instances():
    """Seeded generated instances at sizes the brute force oracles handle quickly."""

    def generate(
        count, seed=0, max_dim=3, valuation_range=(-1, 2), full_rank=False, random_frame=False
    ):
        instances = []
        for offset in range(count):
            s = seed + offset
            p = (2, 3, 5)[s % 3]
            n = 1 + (s // 3) % max_dim
            m = n if full_rank else 1 + (s // 7) % n
            weight_spec = ("zero", "integer", "half")[(s // 2) % 3]
            instances.append(
                gen_instance(
                    p,
                    n,
                    m,
                    weight_spec=weight_spec,
                    valuation_range=valuation_range,
                    seed=s,
                    random_frame=random_frame,
                )
            )
        return instances

    return generate
