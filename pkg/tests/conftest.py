import random

import pytest

from cendlab.fields import QQ
from cendlab.groups import (
    cyclic_group,
    dihedral_group,
    product_group,
    symmetric_group,
)
from cendlab.linalg import Mat


TARGET_GROUPS = {
    "C2": cyclic_group(2),
    "C3": cyclic_group(3),
    "C4": cyclic_group(4),
    "C2xC2": product_group(cyclic_group(2), cyclic_group(2)),
    "S3": symmetric_group(3),
    "D4": dihedral_group(4),
}


@pytest.fixture(scope="session")
def target_groups():
    return TARGET_GROUPS


@pytest.fixture
def rng():
    return random.Random(12345)


def rand_scalar(rng, field=QQ, lo=-4, hi=4):
    return field.scalar(rng.randint(lo, hi))


def rand_invertible(rng, n, field=QQ, lo=-3, hi=3):
    while True:
        m = Mat([[field.scalar(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])
        if m.rank() == n:
            return m
