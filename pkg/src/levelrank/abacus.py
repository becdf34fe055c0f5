"""Beta-sets, runner abaci, and the maps between them.

A beta-set is held canonically as ``(partition, charge)``; its beads are the
integers ``p_i - i + s`` for ``i >= 1`` (with ``p_i = 0`` past the length), so
every integer ``<= s - len(p) - 1`` is a bead and only finitely many beads lie
above that.  Finite windows are materialized only for rendering and checks.

>>> b = beta_set(Partition((8, 6, 1)), 2)
>>> b.finite_beads(), b.tail
((9, 6, 0), -2)
>>> big_upsilon(3, Partition((8, 6, 1)), 2)
ChargedMultipartition(components=Multipartition([(1, 1), (), ()]), charges=(3, 0, -1))
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionError
from .partition import EMPTY, Multipartition, Partition

__all__ = [
    "BetaSet", "Abacus", "ChargedMultipartition", "beta_set", "from_beta",
    "upsilon", "upsilon_inv", "upsilon_ml", "big_upsilon", "big_upsilon_ml",
    "m_core", "m_quotient", "render_abacus", "render_beta", "block_arrays",
    "transpose_block",
]


@dataclass(frozen=True)
class BetaSet:
    partition: Partition
    charge: int

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(self.partition))

    @property
    def tail(self) -> int:
        """Largest n such that every integer <= n is a bead (and n+1 is not)."""
        return self.charge - self.partition.length - 1

    def finite_beads(self) -> tuple[int, ...]:
        """Beads above the tail, descending."""
        return self._finite

    @cached_property
    def _finite(self) -> tuple[int, ...]:
        s, p = self.charge, self.partition
        return tuple(p[i] - (i + 1) + s for i in range(len(p)))

    @cached_property
    def _finite_set(self) -> frozenset:
        return frozenset(self._finite)

    def max_bead(self) -> int:
        beads = self.finite_beads()
        return beads[0] if beads else self.tail

    def __contains__(self, n: int) -> bool:
        return n <= self.tail or n in self._finite_set

    def beads(self, lo: int, hi: int) -> list[int]:
        """Beads in the closed window [lo, hi], ascending."""
        return [n for n in range(lo, hi + 1) if n in self]

    def count_charge(self) -> int:
        """Charge recomputed from the bead set: #{beads >= 0} - #{gaps < 0}."""
        lo, hi = min(self.tail, -1), max(self.max_bead(), 0)
        pos = sum(1 for n in range(0, hi + 1) if n in self)
        neg_gaps = sum(1 for n in range(lo, 0) if n not in self)
        return pos - neg_gaps

    def shifted(self, k: int) -> "BetaSet":
        """Every bead moved k places right; the partition is unchanged."""
        return BetaSet(self.partition, self.charge + k)

    @classmethod
    def from_beads(cls, finite, tail: int) -> "BetaSet":
        """Build from a tail (all n <= tail are beads) and finitely many beads above it."""
        beads = sorted({n for n in finite if n > tail}, reverse=True)
        s = tail + 1 + len(beads)
        # bead at index i (1-based) among the sorted beads gives p_i = b_i + i - s
        parts = [b + i - s for i, b in enumerate(beads, start=1)]
        return cls(Partition(parts), s)

    @classmethod
    def from_predicate(cls, member, lo: int, hi: int) -> "BetaSet":
        """All n <= lo are beads, no n > hi is; ``member`` decides (lo, hi]."""
        return cls.from_beads((n for n in range(lo + 1, hi + 1) if member(n)), lo)


@dataclass(frozen=True)
class ChargedMultipartition:
    """The ket |components, charges>."""

    components: Multipartition
    charges: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.components, Multipartition):
            object.__setattr__(self, "components", Multipartition(self.components))
        object.__setattr__(self, "charges", tuple(int(c) for c in self.charges))
        if len(self.components) != len(self.charges):
            raise DimensionError(
                f"{len(self.components)} components but {len(self.charges)} charges")

    @property
    def level(self) -> int:
        return len(self.charges)

    @property
    def size(self) -> int:
        return self.components.size

    def abacus(self) -> "Abacus":
        return Abacus(tuple(BetaSet(p, s) for p, s in zip(self.components, self.charges)))

    def to_json(self) -> dict:
        return {"components": self.components.to_json(), "charges": list(self.charges)}

    @classmethod
    def from_json(cls, obj) -> "ChargedMultipartition":
        return cls(Multipartition(obj["components"]), tuple(obj["charges"]))

    def __str__(self):
        return f"|{self.components}, {self.charges}>"


@dataclass(frozen=True)
class Abacus:
    runners: tuple[BetaSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "runners", tuple(self.runners))
        if not self.runners:
            raise DimensionError("an abacus needs at least one runner")

    @property
    def m(self) -> int:
        return len(self.runners)

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(r.charge for r in self.runners)

    def charged(self) -> ChargedMultipartition:
        return ChargedMultipartition(
            Multipartition(r.partition for r in self.runners), self.charges)

    def slid(self) -> "Abacus":
        """All beads pushed as far left as possible on each runner."""
        return Abacus(tuple(BetaSet(EMPTY, r.charge) for r in self.runners))

    @classmethod
    def from_runner_beads(cls, runner_beads, tails) -> "Abacus":
        return cls(tuple(BetaSet.from_beads(b, t) for b, t in zip(runner_beads, tails)))


def beta_set(p, s: int) -> BetaSet:
    return BetaSet(Partition(p), int(s))


def from_beta(b: BetaSet) -> tuple[Partition, int]:
    return b.partition, b.charge


def upsilon(m: int, b: BetaSet) -> Abacus:
    """Split a beta-set into m runners: runner r holds q iff m*q + r is a bead."""
    if m < 1:
        raise ValueError("m must be positive")
    runners = []
    for r in range(m):
        lo = (b.tail - r) // m
        hi = (b.max_bead() - r) // m
        runners.append(BetaSet.from_predicate(lambda q, r=r: m * q + r in b, lo, hi))
    return Abacus(tuple(runners))


def upsilon_inv(a: Abacus) -> BetaSet:
    m = a.m
    lo = min(m * r.tail + i for i, r in enumerate(a.runners))
    hi = max(m * r.max_bead() + i for i, r in enumerate(a.runners))
    return BetaSet.from_predicate(lambda n: n // m in a.runners[n % m], lo, hi)


def upsilon_ml(l: int, m: int, a: Abacus) -> Abacus:
    """Exchange runners: output runner r_m has a bead at l*q + r_l iff input
    runner r_l has a bead at m*q + r_m."""
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    if a.m != l:
        raise DimensionError(f"expected an abacus with {l} runners, got {a.m}")
    runners = []
    for r_m in range(m):
        lo = min(l * ((b.tail - r_m) // m) + r_l for r_l, b in enumerate(a.runners))
        hi = max(l * ((b.max_bead() - r_m) // m) + r_l for r_l, b in enumerate(a.runners))

        def member(x, r_m=r_m):
            q, r_l = divmod(x, l)
            return m * q + r_m in a.runners[r_l]

        runners.append(BetaSet.from_predicate(member, lo, hi))
    return Abacus(tuple(runners))


def big_upsilon(m: int, p, s: int) -> ChargedMultipartition:
    return upsilon(m, beta_set(p, s)).charged()


def big_upsilon_ml(l: int, m: int, cm: ChargedMultipartition) -> ChargedMultipartition:
    if cm.level != l:
        raise DimensionError(f"expected a charged {l}-partition, got level {cm.level}")
    return upsilon_ml(l, m, cm.abacus()).charged()


def m_core(p, m: int) -> Partition:
    """The m-core, by sliding every runner of the m-abacus left.

    Works on the finite beads {p_i - i + len(p)} >= 0; sliding keeps the
    bead count of each runner, so that count is all that is needed.
    """
    if m < 1:
        raise ValueError("m must be positive")
    p = Partition(p)
    n = len(p)
    counts = [0] * m
    for i, part in enumerate(p):
        counts[(part - i - 1 + n) % m] += 1
    beads = sorted((r + m * k for r in range(m) for k in range(counts[r])), reverse=True)
    return Partition([b - (n - 1 - i) for i, b in enumerate(beads)])


def m_quotient(p, m: int, s: int = 0) -> Multipartition:
    return big_upsilon(m, p, s).components


# --- rendering -------------------------------------------------------------


def _default_window(a: Abacus) -> tuple[int, int]:
    lo = min(r.tail for r in a.runners)
    hi = max(r.max_bead() for r in a.runners)
    return lo, max(hi, lo)


def render_abacus(a: Abacus, window: tuple[int, int] | None = None, glyph: bool = False) -> str:
    """Text picture of an abacus, one row per runner, runner index increasing downward.

    Beads print their position value ``m*q + r`` (or ``●`` in glyph mode), gaps
    print ``-``, and a leading ``…`` stands for the infinite run of beads on the
    left.  ``window`` is a closed range of runner-local positions q; it is
    widened if it would hide a gap or a bead.
    """
    m = a.m
    lo_auto, hi_auto = _default_window(a)
    lo, hi = window if window is not None else (lo_auto, hi_auto)
    lo, hi = min(lo, lo_auto), max(hi, hi_auto)
    if glyph:
        cells = [["●" if q in r else "-" for q in range(lo, hi + 1)] for r in a.runners]
    else:
        cells = [[str(m * q + i) if q in r else "-" for q in range(lo, hi + 1)]
                 for i, r in enumerate(a.runners)]
    width = max(len(c) for row in cells for c in row)
    lines = ["… " + " ".join(c.rjust(width) for c in row) for row in cells]
    return "\n".join(lines) + "\n"


def render_beta(b: BetaSet, window: tuple[int, int] | None = None) -> str:
    """The one-runner picture of a beta-set."""
    return render_abacus(Abacus((b,)), window)


def block_arrays(a: Abacus, other: int, block: int) -> list[list[bool]]:
    """The ``a.m x other`` array of bead flags for block ``block``.

    Rows are runners r; column c is runner-local position ``other*block + c``.
    Grouping an l-abacus this way with ``other = m`` and an m-abacus with
    ``other = l`` pairs the blocks exchanged by ``upsilon_ml``.
    """
    return [[other * block + c in r for c in range(other)] for r in a.runners]


def transpose_block(arr: list[list[bool]]) -> list[list[bool]]:
    return [list(col) for col in zip(*arr)]


def render_blocks(a: Abacus, other: int, blocks) -> str:
    """Glyph rows of consecutive blocks side by side, separated by ``|``."""
    arrays = [block_arrays(a, other, k) for k in blocks]
    rows = []
    for i in range(a.m):
        rows.append(" | ".join(" ".join("●" if x else "-" for x in arr[i]) for arr in arrays))
    return "\n".join(rows) + "\n"
