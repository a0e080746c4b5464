"""Projective transformations of the extended rational line and the cross ratio.

A transformation x -> (p x + q) / (r x + s) is stored as its canonical integer
matrix: entries coprime, first nonzero entry positive.  Scaling a rational
matrix to determinant one would need square roots, so the class is the
projective (PGL2) representative; the action on the line is the same.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .exact import INF, ExtRational, as_ext, primitive_vector


class DegenerateInputError(ValueError):
    """Repeated points where distinct points are required."""


class Mobius:
    """A projective transformation [[p, q], [r, s]] in canonical integer form."""

    __slots__ = ("p", "q", "r", "s")

    def __init__(self, p, q, r, s):
        cp, cq, cr, cs = primitive_vector((p, q, r, s))
        if cp * cs - cq * cr == 0:
            raise ValueError(f"singular matrix [{p}, {q}, {r}, {s}]")
        object.__setattr__(self, "p", cp)
        object.__setattr__(self, "q", cq)
        object.__setattr__(self, "r", cr)
        object.__setattr__(self, "s", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    @property
    def det_sign(self) -> int:
        return 1 if self.det > 0 else -1

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(("Mobius",) + self.entries)

    def __repr__(self):
        return f"Mobius({self.p}, {self.q}, {self.r}, {self.s})"

    def __call__(self, x) -> ExtRational:
        return apply(self, x)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return compose(self, other)

    def __reduce__(self):
        return (Mobius, self.entries)


IDENTITY = Mobius(1, 0, 0, 1)


def apply(t: Mobius, x) -> ExtRational:
    """Evaluate t at x, sending poles to INF and INF to p/r."""
    x = as_ext(x)
    if x is INF:
        if t.r == 0:
            return INF
        return Fraction(t.p, t.r)
    num = t.p * x + t.q
    den = t.r * x + t.s
    if den == 0:
        # num != 0 here because det != 0
        return INF
    return num / den


def compose(t1: Mobius, t2: Mobius) -> Mobius:
    """The transformation x -> t1(t2(x))."""
    return Mobius(
        t1.p * t2.p + t1.q * t2.r,
        t1.p * t2.q + t1.q * t2.s,
        t1.r * t2.p + t1.s * t2.r,
        t1.r * t2.q + t1.s * t2.s,
    )


def inverse(t: Mobius) -> Mobius:
    return Mobius(t.s, -t.q, -t.r, t.p)


def _check_distinct(points, what: str) -> None:
    if len(set(points)) != len(points):
        raise DegenerateInputError(f"{what} entries must be pairwise distinct, got {tuple(points)}")


def to_standard_frame(a, b, c) -> Mobius:
    """The transformation sending (a, b, c) to (INF, 0, 1).

    Solves r*a + s = 0, p*b + q = 0, p*c + q = r*c + s directly.  For finite
    points this is x -> (c - a)(x - b) / ((c - b)(x - a)).
    """
    a, b, c = as_ext(a), as_ext(b), as_ext(c)
    _check_distinct((a, b, c), "triple")
    if a is INF:
        return Mobius(1, -b, 0, c - b)
    if b is INF:
        return Mobius(0, c - a, 1, -a)
    if c is INF:
        return Mobius(1, -b, 1, -a)
    return Mobius(c - a, -(c - a) * b, c - b, -(c - b) * a)


def solve_triple(src: Sequence, dst: Sequence) -> Mobius:
    """The unique transformation t with t(src[i]) = dst[i] for i = 0, 1, 2."""
    if len(src) != 3 or len(dst) != 3:
        raise ValueError("solve_triple needs two triples")
    t_src = to_standard_frame(*src)
    t_dst = to_standard_frame(*dst)
    return compose(inverse(t_dst), t_src)


def cross_ratio(a, b, c, d) -> Fraction:
    """(a - b)(c - d) / ((b - c)(a - d)) for four distinct finite rationals."""
    a, b, c, d = (as_ext(v) for v in (a, b, c, d))
    if INF in (a, b, c, d):
        raise ValueError("cross_ratio takes finite points only")
    _check_distinct((a, b, c, d), "quadruple")
    return (a - b) * (c - d) / ((b - c) * (a - d))


def witness(aq: Sequence, bq: Sequence) -> Mobius | None:
    """A transformation sending aq[i] to bq[i] for all four i, or None."""
    if len(aq) != 4 or len(bq) != 4:
        raise ValueError("quadruples must have four entries")
    aq = [as_ext(v) for v in aq]
    bq = [as_ext(v) for v in bq]
    _check_distinct(aq, "quadruple")
    _check_distinct(bq, "quadruple")
    t = solve_triple(aq[:3], bq[:3])
    return t if apply(t, aq[3]) == bq[3] else None


def quadruple_related(aq: Sequence, bq: Sequence) -> bool:
    """Whether some projective transformation carries aq onto bq entrywise."""
    return witness(aq, bq) is not None


def quadruple_related_by_cross_ratio(aq: Sequence, bq: Sequence) -> bool:
    return cross_ratio(*aq) == cross_ratio(*bq)
