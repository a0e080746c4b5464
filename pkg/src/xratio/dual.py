"""Transformations as points of projective 3-space, and the planes pi_ab.

A transformation [[p, q], [r, s]] is the point [p, q, r, s].  It sends a to b
exactly when a p + q - a b r - b s = 0, so the transformations with t(a) = b
form the plane with coefficient vector [a, 1, -a b, -b].  All linear algebra
here is exact row reduction over the rationals.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .exact import as_ext, primitive_vector
from .expander import as_input_set
from .projective import Mobius, solve_triple

DEFAULT_LEMMA_CAP = 6


class CapExceededError(ValueError):
    """An exhaustive check was asked to run above its size cap."""


@dataclass(frozen=True)
class ProjPoint3:
    coords: tuple[int, int, int, int]

    def __init__(self, coords: Sequence):
        object.__setattr__(self, "coords", primitive_vector(coords))
        if len(self.coords) != 4:
            raise ValueError("a point of projective 3-space has four coordinates")

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "[" + ",".join(map(str, self.coords)) + "]"


@dataclass(frozen=True)
class DualPlane:
    label: tuple[Fraction, Fraction]
    coeffs: tuple[int, int, int, int]

    def __repr__(self):
        a, b = self.label
        return f"pi({a},{b})"


@dataclass(frozen=True)
class Line3:
    """A projective line as the reduced row-echelon form of two plane equations."""

    rref: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


@dataclass(frozen=True)
class Intersection:
    kind: str  # "point", "line", "plane" or "empty"
    point: ProjPoint3 | None = None


def embed(t: Mobius) -> ProjPoint3:
    return ProjPoint3(t.entries)


def on_quadric(pt: ProjPoint3) -> bool:
    p, q, r, s = pt.coords
    return p * s == q * r


def plane_for(a, b) -> DualPlane:
    a, b = as_ext(a), as_ext(b)
    return DualPlane(label=(a, b), coeffs=primitive_vector((a, 1, -a * b, -b)))


def incident(pt: ProjPoint3, plane: DualPlane) -> bool:
    return sum(x * c for x, c in zip(pt.coords, plane.coeffs)) == 0


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form with pivots scaled to 1; zero rows dropped."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def triple_intersection_type(p1: DualPlane, p2: DualPlane, p3: DualPlane) -> Intersection:
    """Classify the common points of three distinct planes by the rank of their equations."""
    if len({p1.coeffs, p2.coeffs, p3.coeffs}) != 3:
        raise ValueError("triple_intersection_type needs three distinct planes")
    red, pivots = rref([p1.coeffs, p2.coeffs, p3.coeffs])
    rank = len(pivots)
    if rank == 3:
        free = next(c for c in range(4) if c not in pivots)
        sol = [Fraction(0)] * 4
        sol[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            sol[pc] = -row[free]
        return Intersection("point", ProjPoint3(sol))
    if rank == 2:
        return Intersection("line")
    if rank == 1:
        return Intersection("plane")
    return Intersection("empty")


def line_of(p1: DualPlane, p2: DualPlane) -> Line3:
    red, pivots = rref([p1.coeffs, p2.coeffs])
    if len(pivots) != 2:
        raise ValueError("coincident planes do not define a line")
    return Line3(rref=(tuple(red[0]), tuple(red[1])))


def planes(A) -> list[DualPlane]:
    A = as_input_set(A)
    return [plane_for(a, b) for a in A for b in A]


@dataclass
class PropertyResult:
    holds: bool
    checked: int
    failures: int
    examples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "checked": self.checked,
            "failures": self.failures,
            "examples": [repr(e) for e in self.examples],
        }


def _shares_label(triple: Sequence[DualPlane]) -> bool:
    firsts = {p.label[0] for p in triple}
    seconds = {p.label[1] for p in triple}
    return len(firsts) == 1 or len(seconds) == 1


def verify_planes_lemma(A, cap: int = DEFAULT_LEMMA_CAP, max_examples: int = 5) -> dict:
    """Exhaustively test the four stated properties of {pi_ab : a, b in A}.

    Besides the literal properties, the report carries a diagnosis of every
    failure of property 1: which triples are colinear, whether they are exactly
    the triples sharing a first label or a second label, and whether the common
    line lies on the quadric ps = qr.
    """
    A = as_input_set(A)
    n = len(A)
    if n > cap:
        raise CapExceededError(f"|A| = {n} exceeds the planes-lemma cap {cap}")
    pis = planes(A)

    # property 1 over all triples of distinct planes
    kinds: Counter = Counter()
    p1_fail: list = []
    colinear_shared = colinear_other = point_shared = 0
    lines_on_quadric = True
    transversal_points_match = True
    for tri in combinations(pis, 3):
        res = triple_intersection_type(*tri)
        kinds[res.kind] += 1
        shared = _shares_label(tri)
        if res.kind != "point":
            if len(p1_fail) < max_examples:
                p1_fail.append((tri, res.kind))
            if shared:
                colinear_shared += 1
            else:
                colinear_other += 1
            if res.kind == "line" and not _line_inside_quadric(line_of(tri[0], tri[1])):
                lines_on_quadric = False
        else:
            if shared:
                point_shared += 1
            firsts = [p.label[0] for p in tri]
            seconds = [p.label[1] for p in tri]
            if len(set(firsts)) == 3 and len(set(seconds)) == 3:
                expected = embed(solve_triple(firsts, seconds))
                if res.point != expected:
                    transversal_points_match = False
    n_triples = sum(kinds.values())
    prop1 = PropertyResult(kinds["point"] == n_triples, n_triples, n_triples - kinds["point"], p1_fail)

    # property 2: (a, b) -> pi_ab injective
    coeff_to_labels: dict = {}
    for p in pis:
        coeff_to_labels.setdefault(p.coeffs, []).append(p.label)
    dup = [labels for labels in coeff_to_labels.values() if len(labels) > 1]
    prop2 = PropertyResult(not dup, len(pis), len(dup), dup[:max_examples])

    # property 3: distinct plane pairs give distinct lines
    line_to_pairs: dict = {}
    for p, q in combinations(pis, 2):
        line_to_pairs.setdefault(line_of(p, q), []).append((p, q))
    shared_lines = [pairs for pairs in line_to_pairs.values() if len(pairs) > 1]
    lines_explained = all(
        len({p.label[0] for pair in pairs for p in pair}) == 1
        or len({p.label[1] for pair in pairs for p in pair}) == 1
        for pairs in shared_lines
    )
    n_pairs = len(pis) * (len(pis) - 1) // 2
    prop3 = PropertyResult(
        not shared_lines,
        n_pairs,
        sum(len(pairs) for pairs in shared_lines) - len(shared_lines),
        [pairs[:2] for pairs in shared_lines[:max_examples]],
    )

    # property 4: candidate off-quadric points are the transformations
    # determined by triples of distinct elements mapped to triples of distinct elements
    candidates = set()
    for src in combinations(A, 3):
        for dst in permutations(A, 3):
            candidates.add(embed(solve_triple(src, dst)))
    for tri in combinations(pis, 3):
        res = triple_intersection_type(*tri)
        if res.kind == "point" and not on_quadric(res.point):
            candidates.add(res.point)
    over = []
    max_deg = 0
    for pt in candidates:
        deg = sum(1 for p in pis if incident(pt, p))
        max_deg = max(max_deg, deg)
        if deg > n:
            over.append((pt, deg))
    prop4 = PropertyResult(not over, len(candidates), len(over), over[:max_examples])

    return {
        "A": [str(v) for v in A],
        "n_planes": len(pis),
        "line_representation": "rref",
        "property_1_triples_meet_in_point": prop1.to_dict()
        | {"kinds": dict(kinds)},
        "property_2_labels_injective": prop2.to_dict(),
        "property_3_pair_lines_distinct": prop3.to_dict(),
        "property_4_at_most_n_incidences": prop4.to_dict() | {"max_degree": max_deg},
        "diagnosis": {
            "colinear_triples_sharing_a_label": colinear_shared,
            "colinear_triples_not_sharing_a_label": colinear_other,
            "point_triples_sharing_a_label": point_shared,
            "every_common_line_inside_quadric": lines_on_quadric,
            "transversal_points_equal_solve_triple": transversal_points_match,
            "coincident_lines_come_from_shared_label_pairs": lines_explained,
        },
        "passed": prop1.holds and prop2.holds and prop3.holds and prop4.holds,
    }


def _line_inside_quadric(line: Line3) -> bool:
    # ps - qr restricted to a line is a binary quadratic form; it vanishes
    # identically iff it vanishes at three distinct points of the line
    basis = _line_points(line)
    u, v = basis
    samples = [u, v, [x + y for x, y in zip(u, v)]]
    return all(x[0] * x[3] == x[1] * x[2] for x in samples)


def _line_points(line: Line3) -> tuple[list[Fraction], list[Fraction]]:
    red = [list(r) for r in line.rref]
    pivots = [next(c for c in range(4) if r[c] != 0) for r in red]
    free = [c for c in range(4) if c not in pivots]
    basis = []
    for f in free:
        sol = [Fraction(0)] * 4
        sol[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            sol[pc] = -row[f]
        basis.append(sol)
    return basis[0], basis[1]


@dataclass
class IncidenceReport:
    total: int
    degrees: dict  # point -> number of incident planes
    rich: dict  # k -> number of points with degree >= k

    def corollary_constant(self, n_planes: int) -> float:
        """Smallest C with #points(degree >= k) <= C (|planes|^3 / k^5 + |planes| / k) for all k >= 1."""
        best = 0.0
        for k, cnt in self.rich.items():
            if k < 1 or cnt == 0:
                continue
            bound = n_planes**3 / k**5 + n_planes / k
            best = max(best, cnt / bound)
        return best


def incidence_counts(points: Iterable[ProjPoint3], planes_: Iterable[DualPlane]) -> IncidenceReport:
    """Exact incidences by evaluating every (point, plane) pair."""
    pts = list(dict.fromkeys(points))
    pls = list(planes_)
    degrees = {pt: sum(1 for pl in pls if incident(pt, pl)) for pt in pts}
    total = sum(degrees.values())
    top = max(degrees.values(), default=0)
    rich = {k: sum(1 for d in degrees.values() if d >= k) for k in range(1, top + 1)}
    return IncidenceReport(total=total, degrees=degrees, rich=rich)


def lines_in_base_plane(A) -> list[Line3]:
    """The lines pi_ab meet pi_00 for nonzero a, b in A."""
    base = plane_for(0, 0)
    return [line_of(base, plane_for(a, b)) for a in as_input_set(A) for b in as_input_set(A) if a != 0 and b != 0]
