"""The extended affine symmetric group Z^m x| S_m acting on charges and abaci.

An element is a pair (shifts v, permutation sigma) with sigma in one-line
notation, ``perm[i] == sigma(i)``.  It acts by

    (w . s)_i = s_{sigma(i)} + v_i

and on an abacus by moving runner sigma(i) to slot i and sliding all its beads
v_i places right.

>>> w3 = parse_affine("(2,0,-1)∘[201]")
>>> act_on_charges(w3, (0, 0, 1))
(3, 0, -1)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from . import config
from .abacus import Abacus, ChargedMultipartition
from .errors import DimensionError, EnumerationLimitError, ParseError


@dataclass(frozen=True)
class AffinePermutation:
    shifts: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(int(x) for x in self.shifts))
        object.__setattr__(self, "perm", tuple(int(x) for x in self.perm))
        if len(self.shifts) != len(self.perm):
            raise DimensionError("shifts and perm must have the same length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{list(self.perm)} is not a permutation of 0..{len(self.perm) - 1}")

    @property
    def m(self) -> int:
        return len(self.perm)

    @property
    def norm(self) -> int:
        return max((abs(v) for v in self.shifts), default=0)

    @classmethod
    def identity(cls, m: int) -> "AffinePermutation":
        return cls((0,) * m, tuple(range(m)))

    def __str__(self):
        perm = "".join(map(str, self.perm)) if self.m <= 10 else ",".join(map(str, self.perm))
        return f"({','.join(map(str, self.shifts))})∘[{perm}]"

    def to_json(self) -> dict:
        return {"shifts": list(self.shifts), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, obj) -> "AffinePermutation":
        return cls(tuple(obj["shifts"]), tuple(obj["perm"]))


_AFFINE = re.compile(r"^\s*\(([^)]*)\)\s*(?:∘|o|\*)\s*\[([^\]]*)\]\s*$")


def parse_affine(text: str) -> AffinePermutation:
    """Parse ``"(1,0,0,-1)∘[1032]"``; ``o`` may replace ``∘``."""
    match = _AFFINE.match(text)
    if not match:
        raise ParseError(f"expected '(v_0,...,v_m-1)∘[perm]', got {text!r}", text, 0)
    try:
        shifts = tuple(int(x) for x in match.group(1).split(","))
        body = match.group(2).replace(" ", "")
        perm = tuple(int(x) for x in (body.split(",") if "," in body else body))
        return AffinePermutation(shifts, perm)
    except ValueError as exc:
        raise ParseError(str(exc), text, match.start(1)) from None


def _check(w: AffinePermutation, m: int):
    if w.m != m:
        raise DimensionError(f"affine permutation of rank {w.m} applied to {m} entries")


def act_on_charges(w: AffinePermutation, s) -> tuple[int, ...]:
    s = tuple(s)
    _check(w, len(s))
    return tuple(s[w.perm[i]] + w.shifts[i] for i in range(w.m))


def act_on_abacus(w: AffinePermutation, a: Abacus) -> Abacus:
    _check(w, a.m)
    return Abacus(tuple(a.runners[w.perm[i]].shifted(w.shifts[i]) for i in range(w.m)))


def act_on_charged(w: AffinePermutation, cm: ChargedMultipartition) -> ChargedMultipartition:
    _check(w, cm.level)
    return ChargedMultipartition(
        tuple(cm.components[w.perm[i]] for i in range(w.m)), act_on_charges(w, cm.charges))


def compose(w1: AffinePermutation, w2: AffinePermutation) -> AffinePermutation:
    """The element acting as w1 after w2."""
    _check(w1, w2.m)
    return AffinePermutation(
        tuple(w1.shifts[i] + w2.shifts[w1.perm[i]] for i in range(w1.m)),
        tuple(w2.perm[w1.perm[i]] for i in range(w1.m)),
    )


def invert(w: AffinePermutation) -> AffinePermutation:
    inv = [0] * w.m
    for i, j in enumerate(w.perm):
        inv[j] = i
    return AffinePermutation(tuple(-w.shifts[inv[j]] for j in range(w.m)), tuple(inv))


def count_bounded(m: int, bound: int) -> int:
    return factorial(m) * (2 * bound + 1) ** m


def enumerate_bounded(m: int, bound: int, limit: int | None = None) -> list[AffinePermutation]:
    """Every (v, sigma) with max|v_i| <= bound; sigma in lexicographic order,
    then v in lexicographic order."""
    if m < 1 or bound < 0:
        raise ValueError("need m >= 1 and bound >= 0")
    limit = config.limits().max_affine if limit is None else limit
    total = count_bounded(m, bound)
    if total > limit:
        raise EnumerationLimitError(f"{total} affine permutations exceed the limit {limit}")
    rng = range(-bound, bound + 1)
    return [AffinePermutation(v, p)
            for p in permutations(range(m)) for v in product(rng, repeat=m)]
