import numpy as np
import pytest

from core import Colouring, enumerate_solutions, verify_colouring

N_MAX = 300


def brute_force(colouring: Colouring):
    """Least monochromatic triple in lexicographic order, by enumeration."""
    array = colouring.as_array()
    for x, y, z in enumerate_solutions(colouring.n):
        if array[x] == array[y] == array[z]:
            return (x, y, z), int(array[x])
    return None, None


@pytest.fixture
def random_colourings():
    rng = np.random.default_rng(42)
    colourings = []
    for _ in range(200):
        n = int(rng.integers(1, N_MAX + 1))
        k = int(rng.integers(1, 5))
        # long runs make clean prefixes likely
        breaks = np.sort(rng.choice(np.arange(2, n + 2), size=min(n, 6), replace=False))
        colours = np.zeros(n, dtype=int)
        lo = 1
        for hi in breaks:
            colours[lo - 1 : hi - 1] = rng.integers(0, k)
            lo = hi
        colourings.append(Colouring.explicit(colours.tolist(), k=k))
    return colourings


def test_monochromatic_interval_has_least_violation():
    verdict = verify_colouring(Colouring.monochromatic(2))
    assert not verdict.clean
    assert verdict.witness == (2, 1, 1)
    assert verdict.colour == 0
    assert verdict.to_text() == "violation 2 1 1 colour 0"
    assert verify_colouring(Colouring.monochromatic(1)).to_text() == "clean"


def test_explicit_and_run_forms_report_the_same_witness(random_colourings):
    for colouring in random_colourings:
        explicit = verify_colouring(colouring)
        runs = verify_colouring(colouring.to_runs())
        witness, colour = brute_force(colouring)
        assert explicit == runs
        assert explicit.clean == (witness is None)
        if witness is not None:
            assert tuple(explicit.witness) == witness
            assert explicit.colour == colour


def test_exhaustive_small_colourings():
    for n in range(1, 8):
        for code in range(2**n):
            colours = [(code >> i) & 1 for i in range(n)]
            colouring = Colouring.explicit(colours, k=2)
            witness, _ = brute_force(colouring)
            verdict = verify_colouring(colouring.to_runs())
            assert verdict.clean == (witness is None)
            assert verdict.witness is None or tuple(verdict.witness) == witness


def test_verify_is_pure():
    colouring = Colouring.explicit([0, 1, 0, 1, 1, 0, 1, 0], k=2)
    first, second = verify_colouring(colouring), verify_colouring(colouring)
    assert first == second
    assert first.clean
