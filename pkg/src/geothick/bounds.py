"""Explicit upper bounds for Ramsey and Erdos-Szekeres numbers.

Values are exact integers while they fit in ``EXACT_BITS`` bits.  Past that
they become :class:`HugeCount`, a power tower ``2^2^...^top`` whose float top
is always rounded upward, so every returned value remains an upper bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import comb
from typing import Union

from .errors import InvalidParametersError

EXACT_BITS = 1_000_000
_TOP = 2.0 ** 1000  # canonical towers keep 1000 < top <= 2^1000 when height >= 1
_SLACK = 1 + 1e-12


@total_ordering
@dataclass(frozen=True, eq=False)
class HugeCount:
    """Upper bound 2^(2^(...^top)) with ``height`` exponentiations."""

    height: int
    top: float

    def __post_init__(self):
        if self.height < 1 or not 1000 < self.top <= _TOP:
            raise ValueError("non-canonical HugeCount")

    def _key(self) -> tuple[int, float]:
        return (self.height, self.top)

    def __eq__(self, other) -> bool:
        return isinstance(other, (int, HugeCount)) and _level(self) == _level(other)

    def __lt__(self, other) -> bool:
        if not isinstance(other, (int, HugeCount)):
            return NotImplemented
        return _level(self) < _level(other)

    def __hash__(self) -> int:
        return hash(self._key())

    def log10_digits(self) -> Union[int, "HugeCount"]:
        """Decimal digit count (an upper bound)."""
        if self.height == 1:
            return math.floor(self.top * math.log10(2)) + 1
        return _from_level(_mul_level((0, math.log10(2)), (self.height - 1, self.top)))

    def __str__(self) -> str:
        if self.height == 1:
            return f"<{self.log10_digits()} digits>"
        return "2^" * self.height + f"{self.top:.6g}"

    __repr__ = __str__


BigCount = Union[int, HugeCount]

# A "level" (h, x) stands for x when h == 0, else for 2^level(h - 1, x).
Level = tuple[int, float]


def _norm(h: int, x: float) -> Level:
    while x > _TOP:
        x, h = math.log2(x) * _SLACK, h + 1
    while h > 0 and x <= 1000:
        x, h = 2.0 ** x * _SLACK, h - 1
    return (h, x)


def _level(v: BigCount) -> Level:
    if isinstance(v, HugeCount):
        return (v.height, v.top)
    if v.bit_length() <= 1000:
        return (0, float(v) * _SLACK if v else 0.0)
    return _norm(1, float(v.bit_length()))


def _from_level(lv: Level) -> HugeCount:
    h, x = _norm(*lv)
    if h == 0:
        # only reached for values that were too large to keep exact
        h, x = 1, max(math.log2(x), 1000.5) if x > 0 else 1000.5
    return HugeCount(h, x)


def _log2(lv: Level) -> Level:
    h, x = lv
    if h == 0:
        return (0, math.log2(x) * _SLACK if x > 1 else 0.0)
    return _norm(h - 1, x)


def _exp2(lv: Level) -> Level:
    return _norm(lv[0] + 1, lv[1])


def _max(a: Level, b: Level) -> Level:
    return max(_norm(*a), _norm(*b))


def _add_level(a: Level, b: Level) -> Level:
    # a + b <= 2 max(a, b)
    m = _max(a, b)
    if m[0] == 0:
        return _norm(0, (a[1] + b[1]) * _SLACK)
    return _mul_level((0, 2.0), m)


def _mul_level(a: Level, b: Level) -> Level:
    a, b = _norm(*a), _norm(*b)
    if a[0] == 0 and b[0] == 0:
        return _norm(0, a[1] * b[1] * _SLACK)
    return _exp2(_add_level(_log2(a), _log2(b)))


def _fits(bits_estimate: float) -> bool:
    return bits_estimate <= EXACT_BITS


def _binomial_upper(n: BigCount, k: int) -> BigCount:
    """C(n, k) exactly when small, else the bound n^k."""
    if isinstance(n, int) and _fits(k * n.bit_length()):
        return comb(n, k)
    lv = _level(n)
    return _from_level(_exp2(_mul_level((0, float(k)), _log2(lv))))


def _add_small(v: BigCount, s: int) -> BigCount:
    if isinstance(v, int):
        return v + s
    return _from_level(_add_level(_level(v), (0, float(s))))


def erdos_szekeres_upper(k: int) -> int:
    """C(2k-4, k-2) + 1 points in general position contain k in convex position."""
    if k < 3:
        raise InvalidParametersError("need k >= 3")
    return comb(2 * k - 4, k - 2) + 1


def theorem_color_classes(t: int) -> int:
    if t < 2:
        raise InvalidParametersError("need t >= 2")
    return comb(t - 1, 3) + comb(t - 1, 2) + (t - 1)


def _two_color(s: int, t: BigCount) -> BigCount:
    """R(s, t) <= C(s + t - 2, s - 1)."""
    return _binomial_upper(_add_small(t, s - 2), s - 1)


@lru_cache(maxsize=None)
def _ramsey(e: int, l: int, c: int) -> BigCount:
    if c == 1:
        return l
    if l == e:
        return e
    if e == 1:
        return c * (l - 1) + 1
    if e == 2:
        # merge colours 2..c into one: R(l; c) <= R(l, R(l; c - 1))
        return _two_color(l, _ramsey(2, l, c - 1))
    # end-homogeneous sequences of length M = R_{e-1}(l-1; c) + 1 exist in
    # any set of sum_{j<M} c^C(j, e-1) points
    m = _add_small(_ramsey(e - 1, l - 1, c), 1)
    if isinstance(m, int):
        top = comb(m - 1, e - 1)
        if top.bit_length() < 64 and _fits(top * math.log2(c)):
            return sum(c ** comb(j, e - 1) for j in range(m))
    else:
        top = _binomial_upper(_add_small(m, -1), e - 1)
    # sum <= M * c^C(M-1, e-1)
    log_total = _add_level(_log2(_level(m)), _mul_level(_level(top), (0, math.log2(c) * _SLACK)))
    return _from_level(_exp2(log_total))


def ramsey_upper(e: int, l: int, c: int) -> BigCount:
    """Upper bound for R_e(l; c), the hypergraph Ramsey number."""
    if e < 1 or l < e or c < 1:
        raise InvalidParametersError(f"need e >= 1, l >= e, c >= 1; got e={e}, l={l}, c={c}")
    return _ramsey(e, l, c)


COHERENT_CLASSES = 27
INNER_OUTER_CLASSES = 2
TYPE_CLASSES = 6


def separation_pipeline_bound(t: int, n1: int) -> BigCount:
    if n1 < 3:
        raise InvalidParametersError("need n1 >= 3")
    return ramsey_upper(3, n1, theorem_color_classes(t))


def pipeline_stages(t: int, n1: int) -> dict[str, BigCount]:
    """Named intermediate bounds for target size ``n1``."""
    return {
        "color_classes": theorem_color_classes(t),
        "n2": separation_pipeline_bound(t, n1),
        "coherent": ramsey_upper(3, n1, COHERENT_CLASSES),
        "inner_outer": ramsey_upper(3, n1, INNER_OUTER_CLASSES),
        "type_uniform": ramsey_upper(3, n1, TYPE_CLASSES),
    }


def format_count(v: BigCount, max_digits: int = 60) -> str:
    """Decimal text, or a digit count once the expansion gets long."""
    if isinstance(v, HugeCount):
        return str(v)
    if v.bit_length() > 4 * max_digits:  # cheap pre-check before str()
        digits = len(str(v)) if v.bit_length() < 200_000 else math.floor(v.bit_length() * math.log10(2)) + 1
        if digits > max_digits:
            return f"<{digits} digits>"
    return str(v)
