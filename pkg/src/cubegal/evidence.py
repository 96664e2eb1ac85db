"""Frobenius-based evidence for Galois-group claims.

A scan reduces a rational polynomial modulo a deterministic stream of
primes and records the cycle type of each good (squarefree) reduction.
The checks built on top:

* containment of every observed type in the predicted type set of a
  restricted wreath product acting imprimitively;
* parity linkage between polynomials whose discriminants share a square
  class (the Frobenius sign is determined by the quadratic subfield);
* a sound full-symmetric-group certifier.

The certifier's soundness chain, each step classical (see Wielandt,
"Finite Permutation Groups", Th. 13.9, or Dixon & Mortimer, "Permutation
Groups", Th. 3.3E; Dedekind's reduction theorem links factor degrees to
Frobenius cycle types at primes with squarefree reduction):

1. an irreducible reduction mod p shows the group contains an n-cycle,
   hence is transitive;
2. a reduction of type {n-1, 1} shows the point stabilizer acts
   transitively on the remaining points, so the group is 2-transitive,
   hence primitive;
3. a type with exactly one part equal to a prime q <= n-3 and q dividing
   no other part powers (by the lcm of the other parts) to a q-cycle;
   a primitive group containing a q-cycle with q <= n-3 contains the
   alternating group (Jordan);
4. a nonsquare discriminant puts the group outside the alternating
   group; with 3 it must be the full symmetric group.

A returned certificate is therefore a proof; "inconclusive" (None) is
the only other outcome.
"""

from __future__ import annotations

import functools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .perm import CycleType
from .polymod import frobenius_type, primes
from .polyq import PolyQ, discriminant
from .sqclass import is_square

DEFAULT_SCAN_BUDGET = 500
DEFAULT_LINKAGE_BUDGET = 300
DEFAULT_TRIPLE_BUDGET = 200
DEFAULT_CERTIFY_BUDGET = 2000
# scans give up after examining this multiple of the requested budget
_SEARCH_FACTOR = 10
# statistical sanity thresholds used by the distribution checks
MIN_DISTINCT_TYPES_S24 = 50
EVEN_FRACTION_WINDOW = (0.45, 0.55)


@functools.lru_cache(maxsize=1 << 20)
def _type_at(f: PolyQ, p: int):
    return frobenius_type(f, p)


# results computed by worker processes; consulted before the local cache
_PREFETCHED: dict = {}


def _type_worker(item):
    f, p = item
    t = frobenius_type(f, p)
    return None if t is None else t.parts


def _parallel_prefetch(polys, prime_list, jobs: int):
    todo = [(f, p) for f in polys for p in prime_list if (f, p) not in _PREFETCHED]
    if not todo:
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_type_worker, todo, chunksize=8))
    for (f, p), parts in zip(todo, results):
        _PREFETCHED[(f, p)] = None if parts is None else CycleType(parts)


def _lookup(f: PolyQ, p: int):
    key = (f, p)
    if key in _PREFETCHED:
        return _PREFETCHED[key]
    return _type_at(f, p)


@dataclass
class EvidenceProfile:
    """Observed Frobenius data for one polynomial."""

    poly_id: str
    primes_scanned: int
    bad_primes: list[int]
    observed_types: Counter
    parity_history: list[int]
    types_by_prime: dict[int, CycleType] = field(default_factory=dict)

    def distinct_types(self) -> int:
        return len(self.observed_types)

    def even_fraction(self) -> float:
        if not self.parity_history:
            return 0.0
        return sum(1 for s in self.parity_history if s == 1) / len(self.parity_history)

    def summary(self) -> dict:
        return {
            "poly_id": self.poly_id,
            "good_primes": self.primes_scanned,
            "bad_primes": [str(p) for p in self.bad_primes],
            "distinct_types": self.distinct_types(),
            "even_fraction": round(self.even_fraction(), 4),
            "types": {str(t): c for t, c in sorted(self.observed_types.items(),
                                                   key=lambda kv: (-kv[1], kv[0].parts))},
        }


def scan(f: PolyQ, prime_budget: int = DEFAULT_SCAN_BUDGET, *,
         jobs: int = 1, poly_id: str | None = None) -> EvidenceProfile:
    """Profile f over the first `prime_budget` good primes.

    Raises when fewer than min(5, budget) good primes exist within
    10x the budget.
    """
    if poly_id is None:
        poly_id = f"deg{f.degree}-{abs(hash(f)) % 10**8:08d}"
    good: list[tuple[int, CycleType]] = []
    bad: list[int] = []
    stream = primes()
    examined = 0
    chunk = 64 if jobs > 1 else 1
    pending: list[int] = []
    while len(good) < prime_budget and examined < _SEARCH_FACTOR * prime_budget:
        if not pending:
            pending = [next(stream) for _ in range(chunk)]
            if jobs > 1:
                _parallel_prefetch([f], pending, jobs)
        p = pending.pop(0)
        examined += 1
        t = _lookup(f, p)
        if t is None:
            bad.append(p)
        else:
            good.append((p, t))
    if len(good) < min(5, prime_budget):
        raise ValueError(f"only {len(good)} good primes within {_SEARCH_FACTOR}x budget")
    return EvidenceProfile(
        poly_id=poly_id,
        primes_scanned=len(good),
        bad_primes=bad,
        observed_types=Counter(t for _, t in good),
        parity_history=[t.parity for _, t in good],
        types_by_prime=dict(good),
    )


# -- predicted cycle types of restricted wreath products ---------------------


def _partitions(m: int, cap: int | None = None):
    if m == 0:
        yield ()
        return
    if cap is None or cap > m:
        cap = m
    for first in range(cap, 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def predict_wreath_types(n: int, m: int) -> frozenset[CycleType]:
    """Exact cycle-type set of (C_n wr S_m)^0 acting on n*m points.

    An element projects to a permutation of the m blocks; a block cycle
    of length L whose accumulated twist is t contributes one part n*L
    when t != 0 and n parts L when t == 0.  The zero-sum twist constraint
    limits how many cycles can carry nonzero twist: for n = 2 an even
    count k; for n = 3 any count except exactly one (values 1 and 2 mix
    to reach 0 mod 3 for every k >= 2).
    """
    if n not in (2, 3):
        raise ValueError("only twist moduli 2 and 3 are modeled")
    out: set[CycleType] = set()
    for partition in _partitions(m):
        lengths = sorted(set(partition))
        counts = [partition.count(length) for length in lengths]
        for choice in product(*(range(c + 1) for c in counts)):
            k = sum(choice)
            if n == 2 and k % 2:
                continue
            if n == 3 and k == 1:
                continue
            parts: list[int] = []
            for length, total, twisted in zip(lengths, counts, choice):
                parts.extend([n * length] * twisted)
                parts.extend([length] * (n * (total - twisted)))
            out.add(CycleType(tuple(parts)))
    return frozenset(out)


def types_within(profile: EvidenceProfile, predicted: frozenset[CycleType]) -> list[CycleType]:
    """Observed types outside the predicted set (empty = containment holds)."""
    return sorted((t for t in profile.observed_types if t not in predicted),
                  key=lambda t: t.parts)


# -- full-symmetric-group certification --------------------------------------


@dataclass(frozen=True)
class SymmetricCertificate:
    """Witness primes proving the Galois group is the full symmetric group."""

    degree: int
    transitive_prime: int
    primitive_prime: int
    jordan_prime: int
    jordan_cycle: int
    disc_nonsquare: bool

    @property
    def valid(self) -> bool:
        return self.disc_nonsquare

    def revalidate(self, f: PolyQ) -> bool:
        """Recompute every witness from scratch."""
        n = f.degree
        if n != self.degree:
            return False
        t1 = frobenius_type(f, self.transitive_prime)
        if t1 is None or t1.parts != (n,):
            return False
        t2 = frobenius_type(f, self.primitive_prime)
        if t2 is None or t2.parts != (n - 1, 1):
            return False
        t3 = frobenius_type(f, self.jordan_prime)
        if t3 is None or not _jordan_witness(t3, n, self.jordan_cycle):
            return False
        return not is_square(discriminant(f))


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _jordan_witness(t: CycleType, n: int, q: int | None = None) -> int | None:
    """A prime q <= n-3 occurring exactly once in t and dividing no other
    part; powering the Frobenius by the lcm of the other parts then
    isolates a q-cycle.  Returns the witness q (or None)."""
    candidates = [q] if q else [c for c in _SMALL_PRIMES if c <= n - 3]
    for cand in candidates:
        occurrences = t.parts.count(cand)
        if occurrences != 1:
            continue
        if all(part == cand or part % cand for part in t.parts):
            return cand
    return None


def certify_symmetric(f: PolyQ, prime_budget: int = DEFAULT_CERTIFY_BUDGET, *,
                      jobs: int = 1) -> SymmetricCertificate | None:
    """Search good primes for the three witnesses; None means inconclusive.

    A square discriminant makes the symmetric group impossible, so the
    search is skipped and None returned immediately.
    """
    n = f.degree
    if n < 8:
        raise ValueError("certifier is tuned for degree >= 8")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("polynomial is not separable")
    if is_square(disc):
        return None
    transitive = primitive = jordan = None
    jordan_q = None
    stream = primes()
    good = 0
    pending: list[int] = []
    chunk = 64 if jobs > 1 else 1
    while good < prime_budget:
        if not pending:
            pending = [next(stream) for _ in range(chunk)]
            if jobs > 1:
                _parallel_prefetch([f], pending, jobs)
        p = pending.pop(0)
        t = _lookup(f, p)
        if t is None:
            continue
        good += 1
        if transitive is None and t.parts == (n,):
            transitive = p
        if primitive is None and t.parts == (n - 1, 1):
            primitive = p
        if jordan is None:
            q = _jordan_witness(t, n)
            if q is not None:
                jordan, jordan_q = p, q
        if transitive and primitive and jordan:
            return SymmetricCertificate(
                degree=n,
                transitive_prime=transitive,
                primitive_prime=primitive,
                jordan_prime=jordan,
                jordan_cycle=jordan_q,
                disc_nonsquare=True,
            )
    return None


# -- parity linkage -----------------------------------------------------------


@dataclass
class LinkageReport:
    """Per-prime parity comparison over primes good for every polynomial."""

    primes_checked: int
    violations: list[tuple]

    @property
    def ok(self) -> bool:
        return not self.violations


def parity_linkage(f: PolyQ, g: PolyQ,
                   prime_budget: int = DEFAULT_LINKAGE_BUDGET, *,
                   jobs: int = 1) -> LinkageReport:
    """Check parity(type of f) == parity(type of g) at every prime good
    for both.  Discriminants in one square class force linkage; a
    violating prime is a constructive witness of distinct classes."""
    if discriminant(f) == 0 or discriminant(g) == 0:
        raise ValueError("inputs must be separable")
    checked = 0
    violations: list[tuple] = []
    stream = primes()
    pending: list[int] = []
    chunk = 64 if jobs > 1 else 1
    examined = 0
    while checked < prime_budget and examined < _SEARCH_FACTOR * prime_budget:
        if not pending:
            pending = [next(stream) for _ in range(chunk)]
            if jobs > 1:
                _parallel_prefetch([f, g], pending, jobs)
        p = pending.pop(0)
        examined += 1
        tf = _lookup(f, p)
        tg = _lookup(g, p)
        if tf is None or tg is None:
            continue
        checked += 1
        if tf.parity != tg.parity:
            violations.append((p, tf, tg))
    return LinkageReport(primes_checked=checked, violations=violations)


def triple_parity_linkage(f: PolyQ, g2: PolyQ, g3: PolyQ,
                          prime_budget: int = DEFAULT_TRIPLE_BUDGET, *,
                          jobs: int = 1) -> LinkageReport:
    """Check parity(f) == parity(g2) * parity(g3) at every common good prime."""
    for poly in (f, g2, g3):
        if discriminant(poly) == 0:
            raise ValueError("inputs must be separable")
    checked = 0
    violations: list[tuple] = []
    stream = primes()
    pending: list[int] = []
    chunk = 64 if jobs > 1 else 1
    examined = 0
    while checked < prime_budget and examined < _SEARCH_FACTOR * prime_budget:
        if not pending:
            pending = [next(stream) for _ in range(chunk)]
            if jobs > 1:
                _parallel_prefetch([f, g2, g3], pending, jobs)
        p = pending.pop(0)
        examined += 1
        tf = _lookup(f, p)
        t2 = _lookup(g2, p)
        t3 = _lookup(g3, p)
        if tf is None or t2 is None or t3 is None:
            continue
        checked += 1
        if tf.parity != t2.parity * t3.parity:
            violations.append((p, tf, t2, t3))
    return LinkageReport(primes_checked=checked, violations=violations)
