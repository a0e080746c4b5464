"""Growth scans over set families and exponent fitting."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from .expander import image
from .families import FamilySpec, generate

log = logging.getLogger(__name__)

# largest |A| the CLI enumerates per function without --unsafe-cap
IMAGE_CAPS = {"f": 256, "g": 128, "h": 32}
MODELS = ("pure_power", "power_over_log")
CSV_FIELDS = ("family", "kind", "n", "function", "image_count", "skipped", "elapsed_ms")


@dataclass(frozen=True)
class GrowthRecord:
    family: str
    kind: str
    n: int
    function: str
    image_count: int
    skipped: int
    elapsed_ms: float

    def to_row(self, timing: bool = True) -> dict:
        row = asdict(self)
        row["elapsed_ms"] = round(self.elapsed_ms, 3) if timing else ""
        return row


@dataclass(frozen=True)
class ExponentFit:
    model: str
    exponent: float  # 1 + delta
    delta: float
    constant: float
    residual: float
    sizes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "log_base": "e",
            "exponent": self.exponent,
            "delta": self.delta,
            "constant": self.constant,
            "residual": self.residual,
            "sizes": list(self.sizes),
        }


class CapError(ValueError):
    pass


def check_cap(function: str, n: int, unsafe_cap: bool = False) -> None:
    if not unsafe_cap and n > IMAGE_CAPS[function]:
        raise CapError(f"n = {n} exceeds the {function} cap {IMAGE_CAPS[function]}")


def measure(function: str, spec: FamilySpec, *, unsafe_cap: bool = False, workers: int = 1) -> GrowthRecord:
    check_cap(function, spec.n, unsafe_cap)
    A = generate(spec)
    vs = image(function, A, values=False, workers=workers)
    return GrowthRecord(spec.label, spec.kind, spec.n, function, vs.count, vs.skipped, vs.elapsed_ms)


def scan(function: str, family: FamilySpec, sizes, *, unsafe_cap: bool = False,
         workers: int = 1) -> tuple[list[GrowthRecord], list[int]]:
    """One record per size; sizes over the cap are skipped and returned separately."""
    records, rejected = [], []
    for n in sizes:
        try:
            records.append(measure(function, family.with_size(n), unsafe_cap=unsafe_cap, workers=workers))
        except CapError as exc:
            log.warning("skipping size %d: %s", n, exc)
            rejected.append(n)
    return records, rejected


def fit_exponent(records, model: str = "pure_power") -> ExponentFit:
    """Least-squares fit of count ~ C n^e (pure_power) or C n^e / ln n (power_over_log)."""
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    pts = sorted({(r.n, r.image_count) for r in records})
    ns = [p[0] for p in pts]
    if len(pts) < 3 or len(set(ns)) != len(ns):
        raise ValueError("fit_exponent needs at least three records with distinct sizes")
    if any(c <= 0 for _, c in pts):
        raise ValueError("image counts must be positive to fit in log space")
    x = np.log(np.array(ns, dtype=float))
    y = np.log(np.array([p[1] for p in pts], dtype=float))
    if model == "power_over_log":
        if min(ns) < 2:
            raise ValueError("power_over_log needs n >= 2")
        y = y + np.log(x)
    design = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = float(np.max(np.abs(design @ np.array([slope, intercept]) - y)))
    return ExponentFit(model, float(slope), float(slope) - 1.0, float(math.exp(intercept)), resid, tuple(ns))


def normalized_ratio(function: str, n: int, count: int) -> float:
    """count divided by the expected growth rate: n^2/ln n, n^2, n^4/ln n for f, g, h."""
    if function == "f":
        return count * math.log(n) / n**2
    if function == "g":
        return count / n**2
    if function == "h":
        return count * math.log(n) / n**4
    raise ValueError(function)


def floor_check(records) -> dict:
    """Minimum normalized ratio over the scan against half its value at the smallest size."""
    recs = sorted(records, key=lambda r: r.n)
    ratios = [normalized_ratio(r.function, r.n, r.image_count) for r in recs]
    first = ratios[0]
    return {
        "ratios": dict(zip((r.n for r in recs), ratios)),
        "first": first,
        "minimum": min(ratios),
        "holds": min(ratios) >= 0.5 * first,
    }


def records_to_csv(records, timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.to_row(timing))
    return buf.getvalue()


def records_to_json(records, timing: bool = True) -> str:
    return json.dumps([r.to_row(timing) for r in records], indent=2)
