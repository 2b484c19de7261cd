import random

import pytest


def rand_string(rng: random.Random, length: int, sigma: int) -> str:
    alpha = "acgt"[:sigma]
    return "".join(rng.choice(alpha) for _ in range(length))


def rand_instance(rng: random.Random, max_m: int = 10, max_n: int = 40, max_delta: int = 3):
    """One random (pattern, text, delta, sigma) search instance."""
    sigma = rng.choice([2, 4])
    m = rng.randint(1, max_m)
    n = rng.randint(m, max_n)
    return (
        rand_string(rng, m, sigma),
        rand_string(rng, n, sigma),
        rng.randint(0, max_delta),
        sigma,
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
