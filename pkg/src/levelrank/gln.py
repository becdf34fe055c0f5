"""Harish-Chandra series of GL_n as m-core fibers, and level-rank duality checks.

A unipotent character of GL_n(F_q) is a partition rho of n.  Its Phi_m
Harish-Chandra series is labelled by the m-core of rho, and within a series
rho maps to the charged m-partition ``big_upsilon(m, rho, len(core))``, whose
charge vector depends only on the core.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd

from .abacus import ChargedMultipartition, big_upsilon, big_upsilon_ml, m_core
from .affine import AffinePermutation, act_on_charged, act_on_charges, count_bounded
from . import config
from .blocks import BlockKey, block_containing, block_key
from .errors import (CoprimalityError, EnumerationLimitError, InvalidCuspidalError,
                     NotACoreError)
from .partition import Partition, enum_partitions, format_partition, is_core


def _require_core(mu, m):
    if not is_core(mu, m):
        raise NotACoreError(f"{format_partition(mu)} is not a {m}-core")


def _require_coprime(l, m):
    if gcd(l, m) != 1:
        raise CoprimalityError(f"l={l} and m={m} are not coprime")


@dataclass(frozen=True)
class CuspidalDatum:
    n: int
    m: int
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        if self.n < 1 or self.m < 1:
            raise InvalidCuspidalError("n and m must be positive")
        if not is_core(self.mu, self.m):
            raise InvalidCuspidalError(f"{format_partition(self.mu)} is not a {self.m}-core")
        if self.mu.size > self.n or (self.n - self.mu.size) % self.m:
            raise InvalidCuspidalError(
                f"|{format_partition(self.mu)}| = {self.mu.size} is not <= {self.n} "
                f"and congruent to {self.n} mod {self.m}")

    @property
    def rank(self) -> int:
        """N with W = S_{N,m}."""
        return (self.n - self.mu.size) // self.m


@dataclass(frozen=True)
class HeckeSpec:
    """Exponents of the cyclotomic parameters: x_tau_j -> x^(m b_j + j), x_sigma -> x^m."""

    m: int
    b: tuple[int, ...]
    exponents: tuple[int, ...]
    sigma_exponent: int

    def to_json(self) -> dict:
        return {"m": self.m, "b": list(self.b), "exponents": list(self.exponents),
                "sigma_exponent": self.sigma_exponent}


def cores(n: int, m: int) -> list[Partition]:
    """m-cores mu with |mu| <= n and |mu| = n mod m, smallest first."""
    out = []
    for k in range(n % m, n + 1, m):
        out.extend(p for p in enum_partitions(k) if is_core(p, m))
    return out


def hc_series(n: int, m: int, mu) -> tuple[Partition, ...]:
    """Partitions of n whose m-core is mu, in reverse lexicographic order."""
    datum = CuspidalDatum(n, m, mu)
    return tuple(rho for rho in enum_partitions(n) if m_core(rho, m) == datum.mu)


def chi(rho, m: int, mu) -> ChargedMultipartition:
    rho, mu = Partition(rho), Partition(mu)
    if m_core(rho, m) != mu:
        raise InvalidCuspidalError(
            f"{m}-core of {format_partition(rho)} is not {format_partition(mu)}")
    return big_upsilon(m, rho, mu.length)


def b_vector(m: int, mu) -> tuple[int, ...]:
    mu = Partition(mu)
    _require_core(mu, m)
    return big_upsilon(m, mu, mu.length).charges


def hecke_spec(m: int, mu) -> HeckeSpec:
    b = b_vector(m, mu)
    return HeckeSpec(m, b, tuple(m * bj + j for j, bj in enumerate(b)), m)


def effective_charge(l: int, m: int, mu) -> tuple[int, ...]:
    """The m-charge s (entries in [0, l)) with m*s = m*b_m(mu) + (0, 1, ..., m-1) mod l."""
    _require_coprime(l, m)
    inv = pow(m, -1, l)
    return tuple((bj + inv * j) % l for j, bj in enumerate(b_vector(m, mu)))


def series_intersection(n: int, l: int, lam, m: int, mu) -> tuple[Partition, ...]:
    right = set(hc_series(n, m, mu))
    return tuple(rho for rho in hc_series(n, l, lam) if rho in right)


def congruence(m: int, l: int, w: AffinePermutation, b) -> tuple[bool, bool]:
    """Check m(w.b) = m b + (0..m-1) mod l, componentwise and as multisets."""
    lhs = [m * x % l for x in act_on_charges(w, b)]
    rhs = [(m * bj + j) % l for j, bj in enumerate(b)]
    return lhs == rhs, sorted(lhs) == sorted(rhs)


@dataclass
class DualityReport:
    n: int
    l: int
    lam: Partition
    m: int
    mu: Partition
    shift_bound: int
    intersection: tuple[Partition, ...] = ()
    left_charge: tuple[int, ...] = ()
    right_charge: tuple[int, ...] = ()
    left_block: BlockKey | None = None
    right_block: BlockKey | None = None
    left_block_size: int = 0
    right_block_size: int = 0
    single_block_left: bool = True
    single_block_right: bool = True
    bijection_ok: bool = True
    w_l: AffinePermutation | None = None
    w_m: AffinePermutation | None = None
    witness_source: str = "none"  # supplied | search | none
    search_exhausted: bool = False
    diagram_ok: bool = True
    congruence_componentwise_m: bool | None = None
    congruence_multiset_m: bool | None = None
    congruence_componentwise_l: bool | None = None
    congruence_multiset_l: bool | None = None
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def single_block_ok(self) -> bool:
        return self.single_block_left and self.single_block_right

    @property
    def congruence_componentwise(self) -> bool | None:
        return _both(self.congruence_componentwise_m, self.congruence_componentwise_l)

    @property
    def congruence_multiset(self) -> bool | None:
        return _both(self.congruence_multiset_m, self.congruence_multiset_l)

    @property
    def status(self) -> str:
        if self.search_exhausted:
            return "EXHAUSTED"
        ok = (self.diagram_ok and self.single_block_ok and self.bijection_ok
              and self.congruence_multiset is not False)
        return "PASS" if ok else "FAIL"

    @property
    def instance(self) -> tuple:
        return (self.n, self.l, tuple(self.lam), self.m, tuple(self.mu))

    def to_json(self) -> dict:
        def opt(x):
            return None if x is None else x.to_json()

        return {
            "n": self.n, "l": self.l, "lambda": list(self.lam), "m": self.m,
            "mu": list(self.mu), "shift_bound": self.shift_bound,
            "intersection": [list(p) for p in self.intersection],
            "left_charge": list(self.left_charge), "right_charge": list(self.right_charge),
            "left_block": opt(self.left_block), "right_block": opt(self.right_block),
            "left_block_size": self.left_block_size, "right_block_size": self.right_block_size,
            "single_block_left": self.single_block_left,
            "single_block_right": self.single_block_right,
            "single_block_ok": self.single_block_ok,
            "bijection_ok": self.bijection_ok,
            "w_l": opt(self.w_l), "w_m": opt(self.w_m),
            "witness_source": self.witness_source,
            "search_exhausted": self.search_exhausted,
            "diagram_ok": self.diagram_ok,
            "congruence_componentwise_m": self.congruence_componentwise_m,
            "congruence_multiset_m": self.congruence_multiset_m,
            "congruence_componentwise_l": self.congruence_componentwise_l,
            "congruence_multiset_l": self.congruence_multiset_l,
            "congruence_componentwise": self.congruence_componentwise,
            "congruence_multiset": self.congruence_multiset,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, obj) -> "DualityReport":
        def opt(x, kind):
            return None if x is None else kind.from_json(x)

        return cls(
            n=obj["n"], l=obj["l"], lam=Partition(obj["lambda"]), m=obj["m"],
            mu=Partition(obj["mu"]), shift_bound=obj["shift_bound"],
            intersection=tuple(Partition(p) for p in obj["intersection"]),
            left_charge=tuple(obj["left_charge"]), right_charge=tuple(obj["right_charge"]),
            left_block=opt(obj["left_block"], BlockKey),
            right_block=opt(obj["right_block"], BlockKey),
            left_block_size=obj["left_block_size"], right_block_size=obj["right_block_size"],
            single_block_left=obj["single_block_left"],
            single_block_right=obj["single_block_right"],
            bijection_ok=obj["bijection_ok"],
            w_l=opt(obj["w_l"], AffinePermutation), w_m=opt(obj["w_m"], AffinePermutation),
            witness_source=obj["witness_source"], search_exhausted=obj["search_exhausted"],
            diagram_ok=obj["diagram_ok"],
            congruence_componentwise_m=obj["congruence_componentwise_m"],
            congruence_multiset_m=obj["congruence_multiset_m"],
            congruence_componentwise_l=obj["congruence_componentwise_l"],
            congruence_multiset_l=obj["congruence_multiset_l"],
            elapsed_ms=obj["elapsed_ms"],
        )


def _both(a, b):
    if a is None or b is None:
        return None
    return a and b


def _single_block(images, charge, e):
    """Do the images make up exactly one whole block?  Returns (ok, key, block size)."""
    keys = {block_key(ChargedMultipartition(x.components, charge), e) for x in images}
    if len(keys) != 1:
        return False, None, 0
    block = block_containing(images[0].components, charge, e)
    return set(block.members) == {x.components for x in images}, block.key, len(block)


def _ordered(m, bound):
    """Affine permutations by (shift norm, permutation index, shifts)."""
    perms = list(permutations(range(m)))
    for norm in range(bound + 1):
        for p in perms:
            for v in product(range(-norm, norm + 1), repeat=m):
                if max((abs(x) for x in v), default=0) == norm:
                    yield AffinePermutation(v, p)


def _solve(sources, targets, bound):
    """Smallest w (by norm, then permutation index) with w.source == target for all pairs."""
    k = sources[0].level
    best = None
    for idx, p in enumerate(permutations(range(k))):
        shifts = None
        for src, tgt in zip(sources, targets):
            if any(tgt.components[i] != src.components[p[i]] for i in range(k)):
                break
            v = tuple(tgt.charges[i] - src.charges[p[i]] for i in range(k))
            if shifts is None:
                shifts = v
            elif v != shifts:
                break
        else:
            w = AffinePermutation(shifts, p)
            if w.norm <= bound and (best is None or (w.norm, idx) < best[0]):
                best = ((w.norm, idx), w)
    return None if best is None else best[1]


def diagram_commutes(l, m, w_l, w_m, left, right) -> bool:
    return all(big_upsilon_ml(l, m, act_on_charged(w_l, a)) == act_on_charged(w_m, b)
               for a, b in zip(left, right))


def find_witnesses(l, m, left, right, b_l, b_m, shift_bound, limit=None):
    """Search the smaller-rank side in (norm, permutation) order and solve the other.

    Prefers a pair that also satisfies both multiset congruences; falls back to
    the first pair that only makes the diagram commute.
    """
    small = min(l, m)
    limit = config.limits().max_affine if limit is None else limit
    if count_bounded(small, shift_bound) > limit:
        raise EnumerationLimitError(
            f"witness search over {count_bounded(small, shift_bound)} elements exceeds {limit}")
    fallback = None
    for w in _ordered(small, shift_bound):
        if l <= m:
            w_l = w
            targets = [big_upsilon_ml(l, m, act_on_charged(w_l, a)) for a in left]
            w_m = _solve(right, targets, shift_bound)
        else:
            w_m = w
            targets = [big_upsilon_ml(m, l, act_on_charged(w_m, b)) for b in right]
            w_l = _solve(left, targets, shift_bound)
        if w_l is None or w_m is None:
            continue
        if congruence(m, l, w_m, b_m)[1] and congruence(l, m, w_l, b_l)[1]:
            return w_l, w_m
        if fallback is None:
            fallback = (w_l, w_m)
    return fallback


def verify_duality(n, l, lam, m, mu, shift_bound=None, witnesses=None) -> DualityReport:
    """Check the GL_n level-rank statements for one pair of cuspidal data.

    ``witnesses`` is an optional ``(w_l, w_m)`` to verify instead of searching.
    """
    start = time.perf_counter()
    _require_coprime(l, m)
    shift_bound = config.limits().shift_bound if shift_bound is None else shift_bound
    lam, mu = Partition(lam), Partition(mu)
    CuspidalDatum(n, l, lam)
    CuspidalDatum(n, m, mu)
    report = DualityReport(n, l, lam, m, mu, shift_bound)
    report.intersection = inter = series_intersection(n, l, lam, m, mu)
    report.left_charge = effective_charge(m, l, lam)
    report.right_charge = effective_charge(l, m, mu)
    if not inter:
        report.elapsed_ms = (time.perf_counter() - start) * 1e3
        return report

    left = [chi(rho, l, lam) for rho in inter]
    right = [chi(rho, m, mu) for rho in inter]
    report.single_block_left, report.left_block, report.left_block_size = \
        _single_block(left, report.left_charge, m)
    report.single_block_right, report.right_block, report.right_block_size = \
        _single_block(right, report.right_charge, l)
    report.bijection_ok = (len({x.components for x in left}) == len(inter)
                           == len({x.components for x in right}))

    b_l, b_m = b_vector(l, lam), b_vector(m, mu)
    if witnesses is not None:
        report.w_l, report.w_m = witnesses
        report.witness_source = "supplied"
    else:
        found = find_witnesses(l, m, left, right, b_l, b_m, shift_bound)
        if found is None:
            report.search_exhausted = True
            report.diagram_ok = False
        else:
            report.w_l, report.w_m = found
            report.witness_source = "search"
    if report.w_l is not None:
        report.diagram_ok = diagram_commutes(l, m, report.w_l, report.w_m, left, right)
        report.congruence_componentwise_m, report.congruence_multiset_m = \
            congruence(m, l, report.w_m, b_m)
        report.congruence_componentwise_l, report.congruence_multiset_l = \
            congruence(l, m, report.w_l, b_l)
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def sweep_instances(n_max: int, pairs, n_min: int = 1):
    """Every (n, l, lambda, m, mu) with n in [n_min, n_max] and valid cores."""
    for n in range(n_min, n_max + 1):
        for l, m in pairs:
            for lam in cores(n, l):
                for mu in cores(n, m):
                    yield n, l, lam, m, mu


def _run(args):
    n, l, lam, m, mu, bound = args
    return verify_duality(n, l, lam, m, mu, shift_bound=bound)


def sweep(n_max: int, pairs, shift_bound=None, jobs: int = 1, n_min: int = 1) -> list[DualityReport]:
    """Run ``verify_duality`` on every instance; reports come back in instance order."""
    shift_bound = config.limits().shift_bound if shift_bound is None else shift_bound
    tasks = [(*inst, shift_bound) for inst in sweep_instances(n_max, pairs, n_min)]
    if jobs <= 1:
        return [_run(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, tasks, chunksize=4))
