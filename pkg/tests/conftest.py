import random
from fractions import Fraction
from typing import Callable, Tuple

import pytest


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240617)


@pytest.fixture
def random_rational(rng: random.Random) -> Callable[..., Fraction]:
    def draw(low: int = 1, high: int = 9, max_den: int = 7) -> Fraction:
        return Fraction(rng.randint(low * max_den, high * max_den), rng.randint(1, max_den))

    return draw


@pytest.fixture
def random_ell_a(rng: random.Random) -> Callable[[], Tuple[Fraction, Fraction]]:
    """Rational (ℓ, a) with 0 < a < ℓ."""

    def draw() -> Tuple[Fraction, Fraction]:
        ell = Fraction(rng.randint(1, 40), rng.randint(1, 6))
        a = ell * Fraction(rng.randint(1, 19), 20)
        return ell, a

    return draw


@pytest.fixture
def quiet_sampling(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ISOCANT_MC_SAMPLES", "20000")
    monkeypatch.setenv("ISOCANT_MC_WORKERS", "2")
    monkeypatch.setenv("ISOCANT_MC_CHUNK", "4096")
