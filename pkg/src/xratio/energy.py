"""Cross-ratio energies counted two independent ways.

E1, E2, E3 count ordered pairs of valid tuples with equal f, g or h value.
``energy_direct`` squares the multiplicities of the value histogram.
``energy_dual`` instead enumerates the transformations that carry one tuple
onto another: a pair of equal-valued tuples is the same thing as a
transformation t together with an ordered choice of k distinct pairs
(a, t(a)) inside A x A, so the energy is sum_t N(t)(N(t)-1)...(N(t)-k+1).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .expander import as_input_set
from .kernels import enumerate_keys, falling
from .projective import Mobius, compose, inverse, to_standard_frame

DIRECT_CAPS = {1: 64, 2: 32, 3: 16}
DUAL_CAP = 12
# tuple length per order: one side of the energy equation
TUPLE_LEN = {1: 3, 2: 4, 3: 5}


class CapExceededError(ValueError):
    pass


def _check(order: int, n: int, cap: int) -> None:
    if order not in TUPLE_LEN:
        raise ValueError("order must be 1, 2 or 3")
    if n > cap:
        raise CapExceededError(f"|A| = {n} exceeds the cap {cap} for order {order}")


@dataclass(frozen=True)
class EnergyResult:
    order: int
    method: str
    n: int
    energy: int
    tuple_count: int | None
    image_count: int | None
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "method": self.method,
            "n": self.n,
            "energy": self.energy,
            "tuple_count": self.tuple_count,
            "image_count": self.image_count,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def histogram(order: int, A, *, cap: int | None = None, backend: str = "auto"):
    """Exact value histogram (canonical key -> multiplicity) for f, g or h."""
    A = as_input_set(A)
    _check(order, len(A), DIRECT_CAPS[order] if cap is None else cap)
    return enumerate_keys(order, A.as_integers(), want_histogram=True, backend=backend).histogram


def energy_direct_result(order: int, A, *, cap: int | None = None, backend: str = "auto") -> EnergyResult:
    A = as_input_set(A)
    _check(order, len(A), DIRECT_CAPS[order] if cap is None else cap)
    t0 = time.perf_counter()
    res = enumerate_keys(order, A.as_integers(), backend=backend)
    return EnergyResult(order, "direct", len(A), res.sum_sq, res.total, res.distinct,
                        (time.perf_counter() - t0) * 1000.0)


def energy_direct(order: int, A, **kw) -> int:
    return energy_direct_result(order, A, **kw).energy


def _matches(t: Mobius, xs: list[int], members: frozenset[int]) -> int:
    """Number of x in xs with t(x) in members (integer inputs, so a pole never matches)."""
    p, q, r, s = t.entries
    count = 0
    for x in xs:
        den = r * x + s
        if den == 0:
            continue
        num = p * x + q
        if num % den == 0 and num // den in members:
            count += 1
    return count


def transformation_tally(order: int, A, *, cap: int = DUAL_CAP) -> dict[Mobius, int]:
    """Every transformation matching at least three pairs of A x A, with its match count N.

    For order 1 only transformations fixing 0 are considered and pairs
    involving 0 are not counted.  A transformation with N >= 3 maps some
    3-subset of A injectively into A, so solving from every 3-subset onto
    every ordered triple finds all of them.
    """
    A = as_input_set(A)
    _check(order, len(A), cap)
    xs = A.as_integers()
    tally: dict[Mobius, int] = {}
    if order == 1:
        pool = [x for x in xs if x != 0]
        sources = [(0, a1, a2) for a1, a2 in combinations(pool, 2)]
        targets = [(0, b1, b2) for b1, b2 in permutations(pool, 2)]
    else:
        pool = xs
        sources = list(combinations(pool, 3))
        targets = list(permutations(pool, 3))
    members = frozenset(pool)
    # solve_triple factors through the standard frame; reuse the frames
    from_src = [to_standard_frame(*src) for src in sources]
    to_dst = [inverse(to_standard_frame(*dst)) for dst in targets]
    for back in to_dst:
        for fwd in from_src:
            t = compose(back, fwd)
            if t not in tally:
                tally[t] = _matches(t, pool, members)
    return tally


def energy_dual_result(order: int, A, *, cap: int = DUAL_CAP) -> EnergyResult:
    A = as_input_set(A)
    t0 = time.perf_counter()
    tally = transformation_tally(order, A, cap=cap)
    k = TUPLE_LEN[order]
    energy = sum(falling(nt, k) for nt in tally.values())
    return EnergyResult(order, "dual", len(A), energy, None, None, (time.perf_counter() - t0) * 1000.0)


def energy_dual(order: int, A, **kw) -> int:
    return energy_dual_result(order, A, **kw).energy


def determinant_signs(tally: dict[Mobius, int], min_matches: int = 4) -> dict[str, int]:
    """How many witnessing transformations have positive vs negative determinant."""
    pos = sum(1 for t, nt in tally.items() if nt >= min_matches and t.det > 0)
    neg = sum(1 for t, nt in tally.items() if nt >= min_matches and t.det < 0)
    return {"positive": pos, "negative": neg}


@dataclass(frozen=True)
class CauchySchwarzRecord:
    order: int
    n: int
    tuple_count: int
    image_count: int
    energy: int
    lower_bound: int

    @property
    def holds(self) -> bool:
        return self.image_count >= self.lower_bound

    @property
    def tight(self) -> bool:
        return self.tuple_count**2 == self.image_count * self.energy

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "n": self.n,
            "tuple_count": self.tuple_count,
            "image_count": self.image_count,
            "energy": self.energy,
            "lower_bound": self.lower_bound,
            "holds": self.holds,
        }


def cs_record(order: int, n: int, tuple_count: int, image_count: int, energy: int) -> CauchySchwarzRecord:
    lb = ceil_div(tuple_count**2, energy) if energy else 0
    return CauchySchwarzRecord(order, n, tuple_count, image_count, energy, lb)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def cauchy_schwarz_report(order: int, A, *, cap: int | None = None, backend: str = "auto") -> CauchySchwarzRecord:
    """(sum of multiplicities)^2 <= |image| * energy, checked exactly."""
    res = energy_direct_result(order, A, cap=cap, backend=backend)
    return cs_record(order, res.n, res.tuple_count, res.image_count, res.energy)


def tuple_count_closed_form(order: int, A) -> int:
    """Valid tuples: distinct nonzero triples for order 1, distinct 4- or 5-tuples otherwise."""
    A = as_input_set(A)
    if order == 1:
        return falling(len(A) - (1 if 0 in A else 0), 3)
    return falling(len(A), TUPLE_LEN[order])
