"""Exact arithmetic on the extended rational line Q u {oo}.

Finite points are plain :class:`fractions.Fraction` values, which are always
stored in lowest terms with a positive denominator, so equality and hashing
are structural.  The single unsigned point at infinity is :data:`INF`.

Only division of a nonzero finite value by zero produces ``INF``.  Every other
operation that touches ``INF`` raises :class:`InfinityArithmeticError`; maps
that need limits (Mobius evaluation) handle infinity by case analysis instead.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union


class InfinityArithmeticError(ArithmeticError):
    """Field arithmetic was attempted with the point at infinity."""


class IndeterminateError(ValueError):
    """The form 0/0 has no value on the extended line."""


class _Infinity:
    __slots__ = ()
    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


INF = _Infinity()

ExtRational = Union[Fraction, _Infinity]


def is_inf(x: object) -> bool:
    return x is INF


def make_rational(numerator: int, denominator: int = 1) -> ExtRational:
    """Canonical value of ``numerator/denominator``; ``n/0`` with ``n != 0`` is INF."""
    if denominator == 0:
        if numerator == 0:
            raise IndeterminateError("0/0 is not a point of the extended line")
        return INF
    return Fraction(numerator, denominator)


def as_ext(x) -> ExtRational:
    """Coerce ints, Fractions, ``"p/q"`` strings and INF to an extended rational."""
    if x is INF:
        return INF
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if s.lower() in ("inf", "oo", "infinity"):
            return INF
        if "/" in s:
            p, q = s.split("/", 1)
            return make_rational(int(p), int(q))
        return Fraction(int(s))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _finite(x: ExtRational) -> Fraction:
    if x is INF:
        raise InfinityArithmeticError("arithmetic on the point at infinity is undefined")
    return x


def add(x: ExtRational, y: ExtRational) -> Fraction:
    return _finite(x) + _finite(y)


def sub(x: ExtRational, y: ExtRational) -> Fraction:
    return _finite(x) - _finite(y)


def mul(x: ExtRational, y: ExtRational) -> Fraction:
    return _finite(x) * _finite(y)


def div(x: ExtRational, y: ExtRational) -> ExtRational:
    x, y = _finite(x), _finite(y)
    if y == 0:
        if x == 0:
            raise IndeterminateError("0/0 is not a point of the extended line")
        return INF
    return x / y


def canonical(x: ExtRational) -> ExtRational:
    """Re-canonicalize a value (identity on anything produced by this module)."""
    if x is INF:
        return INF
    return Fraction(x.numerator, x.denominator)


def sort_key(x: ExtRational):
    # INF sorts after every finite value
    return (1, 0) if x is INF else (0, x)


def common_denominator(values: Iterable[Fraction]) -> int:
    return lcm(1, *(v.denominator for v in values))


def parse_value(text: str) -> Fraction:
    """Parse one finite value written as an integer or ``p/q``."""
    v = as_ext(text)
    if v is INF:
        raise ValueError(f"infinite value {text!r} is not allowed here")
    return v


def primitive_vector(entries) -> tuple[int, ...]:
    """Canonical integer representative of a projective class of rational vectors.

    Clears denominators, divides out the content and makes the first nonzero
    entry positive.  Two vectors are proportional iff their representatives match.
    """
    if all(type(e) is int or (type(e) is Fraction and e.denominator == 1) for e in entries):
        ints = [int(e) for e in entries]
    else:
        fr = [Fraction(e) for e in entries]
        m = common_denominator(fr)
        ints = [int(f * m) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("the zero vector has no projective class")
    if next(v for v in ints if v) < 0:
        g = -g
    return tuple(v // g for v in ints)
