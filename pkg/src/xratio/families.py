"""Test-set families and the set-file format.

Set files hold one value per line (an integer or ``p/q``); ``#`` starts a
comment and blank lines are ignored.  Repeated values are an error, never
silently merged, so |A| is always what the file says.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .exact import parse_value
from .expander import InputSet

KINDS = ("ap", "gp", "random_int", "squares", "custom_file")
KIND_ALIASES = {"random": "random_int", "file": "custom_file"}


class SetFileError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    start: Fraction = Fraction(1)
    step: Fraction = Fraction(1)
    ratio: Fraction = Fraction(2)
    bound: int = 10**6
    seed: int = 0
    path: str | None = None

    def __post_init__(self):
        kind = KIND_ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        for name in ("start", "step", "ratio"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def with_size(self, n: int) -> "FamilySpec":
        return replace(self, n=n)

    @property
    def label(self) -> str:
        if self.kind == "ap":
            return f"ap(start={self.start},step={self.step})"
        if self.kind == "gp":
            return f"gp(start={self.start},ratio={self.ratio})"
        if self.kind == "random_int":
            return f"random_int(bound={self.bound},seed={self.seed})"
        if self.kind == "squares":
            return f"squares(start={self.start})"
        return f"file({self.path})"


def generate(spec: FamilySpec) -> InputSet:
    """The deterministic n-element set described by ``spec``."""
    n = spec.n
    if n < 1:
        raise ValueError("family size must be at least 1")
    if spec.kind == "ap":
        if spec.step == 0:
            raise ValueError("ap step must be nonzero")
        return InputSet(spec.start + i * spec.step for i in range(n))
    if spec.kind == "gp":
        if spec.start == 0 or spec.ratio in (0, 1, -1):
            raise ValueError("gp needs a nonzero start and a ratio other than 0, 1, -1")
        return InputSet(spec.start * spec.ratio**i for i in range(n))
    if spec.kind == "random_int":
        if spec.bound < n:
            raise ValueError("random_int bound must be at least n")
        rng = random.Random(spec.seed)
        seen: set[int] = set()
        out: list[int] = []
        while len(out) < n:
            v = rng.randint(1, spec.bound)
            if v not in seen:
                seen.add(v)
                out.append(v)
        return InputSet(out)
    if spec.kind == "squares":
        if spec.start < 0 or spec.start.denominator != 1:
            raise ValueError("squares start must be a nonnegative integer")
        s = int(spec.start)
        return InputSet((s + i) ** 2 for i in range(n))
    if spec.path is None:
        raise ValueError("custom_file family needs a path")
    A = read_set_file(spec.path)
    if len(A) < n:
        raise ValueError(f"{spec.path} holds {len(A)} values, fewer than n = {n}")
    return InputSet(A.elements[:n])


def parse_set_text(text: str, source: str = "<text>") -> InputSet:
    values: list[Fraction] = []
    seen: dict[Fraction, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = parse_value(line)
        except (ValueError, ZeroDivisionError) as exc:
            raise SetFileError(f"{source}:{lineno}: cannot parse {line!r}: {exc}") from None
        if v in seen:
            raise SetFileError(f"{source}:{lineno}: duplicate value {v} (first on line {seen[v]})")
        seen[v] = lineno
        values.append(v)
    return InputSet(values)


def read_set_file(path) -> InputSet:
    path = Path(path)
    return parse_set_text(path.read_text(), str(path))


def format_set(A: InputSet) -> str:
    return "".join(f"{v}\n" for v in A)
