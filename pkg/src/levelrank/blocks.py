"""Residue blocks of Ariki-Koike algebras at parameters (zeta, zeta^s).

Only the quantum characteristic ``e`` (the order of zeta) and integer charge
vectors are ever stored; roots of unity are never represented numerically.
The cell in row i, column j of component c has residue ``s_c + j - i mod e``,
and two multipartitions of the same size share a block exactly when their
residue multisets agree.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from itertools import product

from .abacus import ChargedMultipartition, big_upsilon_ml
from .errors import TheoremViolation
from .partition import Multipartition, enum_multipartitions


@dataclass(frozen=True)
class ResidueMultiset:
    e: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"e": self.e, "counts": list(self.counts)}


@dataclass(frozen=True)
class BlockKey:
    size: int
    level: int
    e: int
    charge: tuple[int, ...]  # reduced mod e
    residues: ResidueMultiset

    def to_json(self) -> dict:
        return {"size": self.size, "level": self.level, "e": self.e,
                "charge": list(self.charge), "residues": list(self.residues.counts)}

    @classmethod
    def from_json(cls, obj) -> "BlockKey":
        return cls(obj["size"], obj["level"], obj["e"], tuple(obj["charge"]),
                   ResidueMultiset(obj["e"], tuple(obj["residues"])))


@dataclass(frozen=True)
class UglovDatum:
    """(size, charge, block): ``block`` is a block of level-l multipartitions
    of that size at modulus m, for charge ``charge``."""

    size: int
    charge: tuple[int, ...]
    block: BlockKey

    def __post_init__(self):
        object.__setattr__(self, "charge", tuple(self.charge))
        if self.block.size != self.size or self.block.level != len(self.charge):
            raise ValueError("block key does not match the datum's size / level")
        if self.block.charge != tuple(c % self.block.e for c in self.charge):
            raise ValueError("block key charge does not match the datum's charge")

    def to_json(self) -> dict:
        return {"size": self.size, "charge": list(self.charge), "block": self.block.to_json()}


def _check_e(e):
    if e < 1:
        raise ValueError("the modulus e must be positive")


def residues(cm: ChargedMultipartition, e: int) -> ResidueMultiset:
    _check_e(e)
    counts = [0] * e
    for p, s in zip(cm.components, cm.charges):
        for i, j in p.cells():
            counts[(s + j - i) % e] += 1
    return ResidueMultiset(e, tuple(counts))


def block_key(cm: ChargedMultipartition, e: int) -> BlockKey:
    return BlockKey(cm.size, cm.level, e, tuple(s % e for s in cm.charges), residues(cm, e))


class _BlockMemo:
    """Per-(N, l, e, charge mod e) memo of block partitions.

    Entries are computed outside the lock and published with ``setdefault``,
    so concurrent readers always see either nothing or a complete entry.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._table: dict = {}

    def get(self, key, compute):
        hit = self._table.get(key)
        if hit is not None:
            return hit
        value = compute()
        with self._lock:
            return self._table.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._table.clear()


_memo = _BlockMemo()


@dataclass(frozen=True)
class Block:
    key: BlockKey
    members: tuple[Multipartition, ...] = field(compare=False)

    def __len__(self):
        return len(self.members)


def blocks_of(N: int, l: int, e: int, charge, limit: int | None = None) -> tuple[Block, ...]:
    """The blocks of all l-multipartitions of size N at modulus e and the given charge.

    Blocks are listed in order of their first member in ``enum_multipartitions``
    order, and members keep that order.
    """
    _check_e(e)
    charge = tuple(int(c) % e for c in charge)
    if len(charge) != l:
        raise ValueError(f"charge {charge} is not an {l}-charge")

    def compute():
        groups: dict[BlockKey, list] = {}
        for mp in enum_multipartitions(N, l, limit=limit):
            key = block_key(ChargedMultipartition(mp, charge), e)
            groups.setdefault(key, []).append(mp)
        out = tuple(Block(k, tuple(v)) for k, v in groups.items())
        for b in out:
            if any(mp.size != N for mp in b.members):  # blocks refine size
                raise TheoremViolation("block mixes sizes", {"key": b.key.to_json()})
        return out

    return _memo.get((N, l, e, charge), compute)


def block_containing(mp: Multipartition, charge, e: int, limit: int | None = None) -> Block:
    key = block_key(ChargedMultipartition(mp, charge), e)
    for b in blocks_of(mp.size, mp.level, e, charge, limit=limit):
        if b.key == key:
            return b
    raise TheoremViolation("multipartition missing from its own block enumeration",
                           {"multipartition": mp.to_json()})


def find_block(datum: UglovDatum, limit: int | None = None) -> Block:
    for b in blocks_of(datum.size, datum.block.level, datum.block.e, datum.charge, limit=limit):
        if b.key == datum.block:
            return b
    raise ValueError(f"no block with key {datum.block}")


def uglov_image(l: int, m: int, datum: UglovDatum, limit: int | None = None) -> UglovDatum:
    """Push a rank-m, level-l datum through the runner exchange.

    Every member |pi, r> of the block is mapped to a charged m-partition; all
    images must share one charge, one size and one block at modulus l.
    """
    if datum.block.level != l or datum.block.e != m:
        raise ValueError(f"datum is not a rank-{m}, level-{l} datum")
    block = find_block(datum, limit=limit)
    image = None
    for mp in block.members:
        src = ChargedMultipartition(mp, datum.charge)
        img = big_upsilon_ml(l, m, src)
        got = UglovDatum(img.size, img.charges, block_key(img, l))
        if image is None:
            image = got
        elif got != image:
            raise TheoremViolation(
                "block image is not a single Uglov datum",
                {"l": l, "m": m, "source": src.to_json(), "image": img.to_json(),
                 "expected": image.to_json(), "got": got.to_json()})
    return image


def verify_block(l: int, m: int, K: int, charge, block: Block, limit: int | None = None) -> dict:
    """Check one block of one (K, charge) instance; returns a report record."""
    datum = UglovDatum(K, tuple(charge), block.key)
    record = {"l": l, "m": m, "K": K, "charge": list(charge),
              "block": block.key.to_json(), "block_size": len(block)}
    try:
        image = uglov_image(l, m, datum, limit=limit)
    except TheoremViolation as exc:
        record.update(status="FAIL", reason=str(exc), payload=exc.payload)
        return record
    target = find_block(image, limit=limit)
    images = {big_upsilon_ml(l, m, ChargedMultipartition(mp, charge)).components
              for mp in block.members}
    onto = images == set(target.members)
    back = uglov_image(m, l, image, limit=limit)
    record.update(
        image=image.to_json(), image_block_size=len(target),
        onto=onto, round_trip=back == datum,
        status="PASS" if onto and back == datum and len(images) == len(block) else "FAIL",
    )
    return record


def verify_uglov(l: int, m: int, K_max: int, charge_window: int, limit: int | None = None) -> list[dict]:
    """Brute-force the descent of the runner exchange to Uglov data.

    Runs over every K <= K_max and every l-charge with entries in
    [0, charge_window); one record per (K, charge, block).  Records also flag
    when two blocks of one instance land on the same datum.
    """
    records = []
    for K in range(K_max + 1):
        for charge in product(range(charge_window), repeat=l):
            seen = set()
            for block in blocks_of(K, l, m, charge, limit=limit):
                rec = verify_block(l, m, K, charge, block, limit=limit)
                img = json.dumps(rec.get("image"), sort_keys=True)
                if rec["status"] == "PASS" and img in seen:
                    rec.update(status="FAIL", reason="two blocks share an image datum")
                seen.add(img)
                records.append(rec)
    return records
