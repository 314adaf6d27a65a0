import random

import pytest

from gstir.exact import (InexactDivision, bell, binomial, exact_div,
                         falling_factorial, fibonacci, lucas, parse_count,
                         render_count, stirling2)
from conftest import all_set_partitions


def partitions_into_k(n, k):
    return sum(1 for p in all_set_partitions(n) if len(p) == k)


@pytest.mark.parametrize("n,k,expected", [
    (0, 0, 1),
    (2, 1, 1),
    (3, 2, 3),   # enumerated: {12|3, 13|2, 1|23}
    (4, 2, 7),
    (5, 0, 0),
    (3, 5, 0),
])
def test_stirling2_examples(n, k, expected):
    assert stirling2(n, k) == expected


def test_stirling2_matches_enumeration():
    for n in range(0, 9):
        for k in range(0, n + 2):
            assert stirling2(n, k) == partitions_into_k(n, k), (n, k)


def test_bell_examples():
    assert bell(0) == 1
    assert bell(3) == 5
    assert bell(7) == 877


def test_bell_is_row_sum():
    for n in range(13):
        assert bell(n) == sum(stirling2(n, k) for k in range(n + 1))


def test_bell_binomial_recurrence():
    for n in range(21):
        assert bell(n + 1) == sum(binomial(n, k) * bell(k)
                                  for k in range(n + 1))


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0


def test_falling_factorial():
    assert falling_factorial(4, 2) == 12
    assert falling_factorial(3, 0) == 1
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(-2, 2) == 6  # (-2)(-3)
    assert falling_factorial(-1, 3) == -6


def test_fibonacci_lucas():
    assert [fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [lucas(n) for n in range(6)] == [2, 1, 3, 4, 7, 11]


def test_exact_div():
    assert exact_div(258, 3) == 86
    assert exact_div(18, 3) == 6
    with pytest.raises(InexactDivision):
        exact_div(7, 3)
    with pytest.raises(ValueError):
        exact_div(6, 0)


def test_decimal_roundtrip():
    rng = random.Random(1)
    for _ in range(100):
        digits = rng.randint(1, 200)
        x = rng.randrange(10 ** digits)
        assert parse_count(render_count(x)) == x
    with pytest.raises(ValueError):
        parse_count("-3")
