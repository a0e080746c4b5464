"""Image sets of the cross-ratio expander functions.

    f(a, b, c)          = X(0, a, b, c)
    g(a, b, c, d)       = X(a, b, c, d)
    h(a, b, c, d, e)    = (X(a, b, c, d), X(a, b, c, e))

Only tuples whose cross-ratio arguments are pairwise distinct are evaluated;
the rest of A^k is reported as skipped.  Inputs are scaled by the common
denominator before enumeration.  Every function here is invariant under
x -> u x (u != 0), so the values are unchanged.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from .exact import INF, as_ext, common_denominator
from .kernels import KernelResult, enumerate_keys
from .projective import cross_ratio

ORDERS = {"f": 1, "g": 2, "h": 3}
ARITY = {"f": 3, "g": 4, "h": 5}


class DuplicateElementError(ValueError):
    pass


@dataclass(frozen=True)
class InputSet:
    """A finite set of distinct rationals, stored sorted."""

    elements: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        vals = []
        for v in values:
            v = as_ext(v)
            if v is INF:
                raise ValueError("input sets hold finite rationals only")
            vals.append(v)
        if len(set(vals)) != len(vals):
            raise DuplicateElementError("input set has repeated elements")
        object.__setattr__(self, "elements", tuple(sorted(vals)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return as_ext(x) in self.elements

    def scale(self) -> int:
        return common_denominator(self.elements)

    def as_integers(self) -> list[int]:
        m = self.scale()
        return [int(v * m) for v in self.elements]

    def __repr__(self) -> str:
        return "InputSet({" + ", ".join(str(v) for v in self.elements) + "})"


@dataclass(frozen=True)
class ValueSet:
    function: str
    count: int
    valid_tuples: int
    skipped: int
    values: frozenset | None = field(default=None, compare=False)
    elapsed_ms: float = field(default=0.0, compare=False)


def as_input_set(A) -> InputSet:
    return A if isinstance(A, InputSet) else InputSet(A)


def _key_to_value(key: tuple):
    if len(key) == 2:
        return Fraction(key[0], key[1])
    return (Fraction(key[0], key[1]), Fraction(key[2], key[3]))


def image(function: str, A, *, values: bool = True, backend: str = "auto",
          passes: int | None = None, workers: int = 1) -> ValueSet:
    """Exact image set of f, g or h over A, with the skipped-tuple count."""
    if function not in ORDERS:
        raise ValueError(f"function must be one of f, g, h; got {function!r}")
    A = as_input_set(A)
    t0 = time.perf_counter()
    res: KernelResult = enumerate_keys(
        ORDERS[function], A.as_integers(), want_histogram=values,
        backend=backend, passes=passes, workers=workers,
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    vals = None
    if values:
        vals = frozenset(_key_to_value(k) for k in res.histogram)
    return ValueSet(
        function=function,
        count=res.distinct,
        valid_tuples=res.total,
        skipped=len(A) ** ARITY[function] - res.total,
        values=vals,
        elapsed_ms=elapsed,
    )


def image_f(A, **kw) -> ValueSet:
    return image("f", A, **kw)


def image_g(A, **kw) -> ValueSet:
    return image("g", A, **kw)


def image_h(A, **kw) -> ValueSet:
    return image("h", A, **kw)


def naive_image(function: str, A) -> set:
    """Brute-force image straight from the cross-ratio formula over all of A^k.

    Independent of the kernels: Fractions, itertools.product, no scaling.
    """
    A = list(as_input_set(A))
    out = set()
    if function == "f":
        for a, b, c in product(A, repeat=3):
            if len({0, a, b, c}) == 4:
                out.add(cross_ratio(0, a, b, c))
    elif function == "g":
        for t in product(A, repeat=4):
            if len(set(t)) == 4:
                out.add(cross_ratio(*t))
    elif function == "h":
        for a, b, c, d, e in product(A, repeat=5):
            if len({a, b, c, d, e}) == 5:
                out.add((cross_ratio(a, b, c, d), cross_ratio(a, b, c, e)))
    else:
        raise ValueError(function)
    return out
