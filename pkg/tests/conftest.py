import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyparr import catalog
from hyparr.arrangement import Arrangement, SignVector, validate
from hyparr.errors import DuplicateHyperplane, NotEssential, ZeroForm


@pytest.fixture(scope="session")
def generic4():
    return catalog.generic4()


@pytest.fixture(scope="session")
def cx2():
    return catalog.x2_coned()


@pytest.fixture(scope="session")
def braid4():
    return catalog.braid(4)


def random_arrangement(rng: random.Random, dim=None, n=None, bound=3) -> Arrangement:
    """A random valid central essential arrangement with small coefficients."""
    d = dim if dim is not None else rng.randint(2, 4)
    m = n if n is not None else rng.randint(d, 8)
    if m < d:
        raise ValueError("need n >= dim for an essential arrangement")
    while True:
        forms = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(m)]
        try:
            return validate(Arrangement.from_forms(d, forms))
        except (ZeroForm, DuplicateHyperplane, NotEssential):
            continue


def random_sign_vector(rng: random.Random, n: int) -> SignVector:
    return SignVector(tuple(rng.choice((1, -1)) for _ in range(n)))
