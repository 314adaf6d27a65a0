"""Exact big-integer combinatorial primitives.

Everything here returns plain Python ints (arbitrary precision), which is
what the rest of the library means by "count": graphical Bell numbers
overflow 64 bits around n = 25, so no floats appear anywhere.

The Stirling triangle is memoized in a shared table that grows by whole
rows and is retained for the process lifetime; growth is serialized so
concurrent callers always see identical values.
"""

import math
import threading


class InexactDivision(ArithmeticError):
    """Raised when a checked division leaves a remainder.

    A closed form that has been rearranged to integer arithmetic must
    divide exactly; a remainder signals an implementation bug, never a
    data condition.
    """


class StirlingTable:
    """Triangular memo of Stirling numbers of the second kind.

    Rows are grown on demand and never discarded. Row n holds
    S2(n, 0..n); queries outside the triangle return 0 without growing
    it.
    """

    def __init__(self):
        self._rows = [[1]]  # S2(0,0) = 1
        self._lock = threading.Lock()

    @property
    def max_n(self):
        return len(self._rows) - 1

    def _grow_to(self, n):
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                # S2(m,k) = k*S2(m-1,k) + S2(m-1,k-1)
                row = [0] * (m + 1)
                for k in range(1, m):
                    row[k] = k * prev[k] + prev[k - 1]
                row[m] = 1
                self._rows.append(row)

    def get(self, n, k):
        if k > n or k < 0 or n < 0:
            return 0
        if n > self.max_n:
            self._grow_to(n)
        return self._rows[n][k]


_TABLE = StirlingTable()
_BELLS = [1]  # bell(n) cache, bell(0) = 1
_BELL_LOCK = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S2(n, k).

    Counts partitions of an n-set into exactly k nonempty blocks.
    Out-of-range k gives 0; S2(0, 0) = 1.
    """
    return _TABLE.get(n, k)


def bell(n: int) -> int:
    """Classical Bell number: total partitions of an n-set. bell(0) = 1."""
    if n < len(_BELLS):
        return _BELLS[n]
    with _BELL_LOCK:
        while len(_BELLS) <= n:
            m = len(_BELLS)
            _BELLS.append(sum(_TABLE.get(m, k) for k in range(m + 1)))
    return _BELLS[n]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1), the empty product being 1.

    Accepts negative x; the result may then be negative. Used with
    nonnegative x by the chromatic-polynomial transform.
    """
    out = 1
    for i in range(k):
        out *= x - i
    return out


def fibonacci(n: int) -> int:
    """F(0)=0, F(1)=1, F(2)=1, ..."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """L(0)=2, L(1)=1, L(2)=3, L(3)=4, L(4)=7, ..."""
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def exact_div(num: int, den: int) -> int:
    """Integer division that must be exact.

    Raises InexactDivision on a nonzero remainder so a broken formula
    rearrangement fails loudly instead of truncating.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{num} is not divisible by {den}")
    return q


def render_count(x: int) -> str:
    """Decimal-string form of a count; parse_count inverts it losslessly."""
    if x < 0:
        raise ValueError("counts are nonnegative")
    return str(x)


def parse_count(s: str) -> int:
    x = int(s, 10)
    if x < 0:
        raise ValueError("counts are nonnegative")
    return x
