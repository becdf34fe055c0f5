"""Integer partitions and multipartitions.

Partitions are stored normalized: a weakly decreasing tuple of positive
integers, never with trailing zeros.

>>> p = parse_partition("3^2,1")
>>> p, p.size, p.length
(Partition(3, 3, 1), 7, 3)
>>> str(p)
'(3^2,1)'
"""
from __future__ import annotations

import re
from itertools import product

from . import config
from .errors import EnumerationLimitError, ParseError

__all__ = [
    "Partition", "Multipartition", "parse_partition", "parse_multipartition",
    "hook_lengths", "is_core", "enum_partitions", "enum_multipartitions",
    "conjugate", "EMPTY",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        # trailing zeros are a view concern only
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition entries must be positive, got {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self):
        """Cells (row, column), 1-based, in reading order."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __repr__(self):
        return f"Partition{tuple.__repr__(tuple(self))}" if len(self) != 1 else f"Partition({self[0]})"

    def __str__(self):
        return format_partition(self)

    def to_json(self) -> list:
        return list(self)


EMPTY = Partition()


def format_partition(p) -> str:
    """Exponent shorthand, e.g. (2^2,1^4); the empty partition prints as ∅."""
    if not p:
        return "∅"
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        out.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return "(" + ",".join(out) + ")"


_TOKEN = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"3^2,1"``-style shorthand. Parentheses and ``∅`` are accepted."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    if stripped in ("", "∅", "-", "0"):
        return EMPTY
    parts = []
    offset = 0
    for n, token in enumerate(stripped.split(",")):
        pos = text.find(token, offset) if token else offset
        offset = pos + len(token) + 1
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"malformed partition entry {token.strip()!r}", text, pos)
        k, e = int(match.group(1)), int(match.group(2) or 1)
        if k < 1 or e < 1:
            raise ParseError(f"partition entry {token.strip()!r} must have k >= 1 and e >= 1", text, pos)
        if parts and parts[-1] < k:
            raise ParseError(f"entry {token.strip()!r} increases the sequence", text, pos)
        parts.extend([k] * e)
    return Partition(parts)


class Multipartition(tuple):
    """An m-tuple of partitions, components indexed 0..m-1."""

    __slots__ = ()

    def __new__(cls, components):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @classmethod
    def empty(cls, m: int) -> "Multipartition":
        return cls((EMPTY,) * m)

    @property
    def level(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def is_empty(self) -> bool:
        return all(not c for c in self)

    def __repr__(self):
        return "Multipartition(" + repr([tuple(c) for c in self]) + ")"

    def __str__(self):
        return "(" + ", ".join(format_partition(c) for c in self) + ")"

    def to_json(self) -> list:
        return [list(c) for c in self]


def parse_multipartition(text: str) -> Multipartition:
    """Components separated by ``;`` or ``|``, e.g. ``"1,1;;"`` is ((1,1),∅,∅)."""
    sep = ";" if ";" in text else "|"
    return Multipartition(parse_partition(chunk) for chunk in text.split(sep))


def conjugate(p) -> Partition:
    p = Partition(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def hook_lengths(p) -> list[int]:
    """All hook lengths arm+leg+1, sorted descending; one entry per cell."""
    p = Partition(p)
    pc = conjugate(p)
    return sorted((p[i - 1] - j + pc[j - 1] - i + 1 for i, j in p.cells()), reverse=True)


def is_core(p, m: int) -> bool:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return all(h % m for h in hook_lengths(p))


def _check_bound(n, limit):
    limit = config.limits().max_partition_n if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(f"partition size {n} exceeds enumeration bound {limit}")


def _partitions_max(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_max(n - first, first):
            yield (first,) + rest


def enum_partitions(n: int, limit: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_bound(n, limit)
    return [Partition(t) for t in _partitions_max(n, n)]


def _compositions(n, k):
    """Weak compositions of n into k parts, reverse lexicographic."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def count_multipartitions(n: int, k: int) -> int:
    """Number of k-multipartitions of n (coefficient of prod (1-x^i)^-k)."""
    p = [0] * (n + 1)
    p[0] = 1
    for _ in range(k):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                p[j] += p[j - i]
    return p[n]


def enum_multipartitions(n: int, k: int, limit: int | None = None) -> list[Multipartition]:
    """All k-multipartitions of size n.

    Ordered by component sizes (reverse lexicographic composition), then by the
    product of reverse-lex partition lists.
    """
    if k < 1:
        raise ValueError("k must be positive")
    limit = config.limits().max_multipartitions if limit is None else limit
    total = count_multipartitions(n, k)
    if total > limit:
        raise EnumerationLimitError(
            f"{total} {k}-multipartitions of {n} exceed the limit {limit}")
    cache = {}
    out = []
    for sizes in _compositions(n, k):
        lists = [cache.setdefault(s, enum_partitions(s, limit=max(s, 0))) for s in sizes]
        out.extend(Multipartition(c) for c in product(*lists))
    return out
