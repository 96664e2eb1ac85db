"""Base and strong generating sets for permutation groups.

Construction is randomized Schreier-Sims (product-replacement sampling)
followed by a deterministic verification pass that sifts every Schreier
generator at every level of the stabilizer chain, repairing any gap it
finds.  A finished chain therefore satisfies Schreier's lemma at every
level by direct computation, so the published order and the membership
test are certificates, not Monte Carlo claims.

All orders are exact arbitrary-precision integers.
"""

from __future__ import annotations

import random

from .perm import Permutation

DEFAULT_SEED = 1
_PR_SLOTS = 10
_PR_BURNIN = 60
_CLEAN_SIFTS = 20


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p o q)(i) = p(q(i))
    return tuple(map(p.__getitem__, q))


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class _Level:
    __slots__ = ("point", "gens", "trans", "invtrans")

    def __init__(self, point: int, ident: tuple[int, ...]):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        self.trans: dict[int, tuple[int, ...]] = {point: ident}
        self.invtrans: dict[int, tuple[int, ...]] = {point: ident}


class ProductReplacementSampler:
    """Seedable random-element stream over a fixed generating set.

    Ten accumulator slots and sixty burn-in steps; the parameters favor
    reproducibility over theoretical mixing guarantees.
    """

    def __init__(self, generators, seed: int,
                 slots: int = _PR_SLOTS, burnin: int = _PR_BURNIN):
        gens = [g.raw if isinstance(g, Permutation) else tuple(g) for g in generators]
        if not gens:
            raise ValueError("empty generator list")
        self._slots = [gens[i % len(gens)] for i in range(slots)]
        self._rng = random.Random(seed)
        for _ in range(burnin):
            self._step()

    def _step(self) -> tuple[int, ...]:
        rng = self._rng
        k = len(self._slots)
        i = rng.randrange(k)
        j = rng.randrange(k - 1)
        if j >= i:
            j += 1
        a, b = self._slots[i], self._slots[j]
        if rng.random() < 0.5:
            b = _inverse(b)
        self._slots[i] = _compose(a, b) if rng.random() < 0.5 else _compose(b, a)
        return self._slots[i]

    def next(self) -> Permutation:
        return Permutation._wrap(self._step())


class PermutationGroup:
    """A generated permutation group with a verified base and strong
    generating set: exact order, membership test, reproducible random
    elements."""

    def __init__(self, generators, seed: int = DEFAULT_SEED):
        gens = list(generators)
        if not gens:
            raise ValueError("empty generator list")
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("degree mismatch among generators")
        self.degree = degree
        self.generators: list[Permutation] = gens
        self._ident = tuple(range(degree))
        self._levels: list[_Level] = []
        self._build(seed)
        self._order = 1
        for lvl in self._levels:
            self._order *= len(lvl.trans)
        for g in self.generators:
            if not self.contains(g):
                raise AssertionError("strong generating set rejects an input generator")

    # -- public surface ---------------------------------------------------

    def order(self) -> int:
        return self._order

    @property
    def base(self) -> list[int]:
        return [lvl.point + 1 for lvl in self._levels]

    @property
    def basic_orbit_sizes(self) -> list[int]:
        return [len(lvl.trans) for lvl in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: dict[tuple[int, ...], None] = {}
        for lvl in self._levels:
            for g in lvl.gens:
                seen.setdefault(g)
        return [Permutation._wrap(g) for g in seen]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, _ = self._sift(p.raw)
        return residue == self._ident

    def random_element(self, seed: int) -> Permutation:
        """One group element; equal seeds return equal elements."""
        return self.sampler(seed).next()

    def sampler(self, seed: int) -> ProductReplacementSampler:
        return ProductReplacementSampler(self.generators, seed)

    # -- chain internals ----------------------------------------------------

    def _sift(self, p: tuple[int, ...]):
        """Reduce p through the chain; returns (residue, level it stuck at).

        A residue equal to the identity means membership; a permutation
        moving a point outside some basic orbit sticks at that level.
        """
        for idx, lvl in enumerate(self._levels):
            beta = p[lvl.point]
            if beta == lvl.point:
                continue
            inv = lvl.invtrans.get(beta)
            if inv is None:
                return p, idx
            p = _compose(inv, p)
        return p, len(self._levels)

    def _extend_orbit(self, lvl: _Level):
        trans = lvl.trans
        invtrans = lvl.invtrans
        frontier = list(trans)
        gens = lvl.gens
        while frontier:
            fresh = []
            for beta in frontier:
                u = trans[beta]
                for s in gens:
                    gamma = s[beta]
                    if gamma not in trans:
                        w = _compose(s, u)
                        trans[gamma] = w
                        invtrans[gamma] = _inverse(w)
                        fresh.append(gamma)
            frontier = fresh

    def _add_strong(self, g: tuple[int, ...], stick: int):
        """Adjoin the sift residue g to levels 0..stick.

        g fixes every base point before `stick`, so it belongs to each of
        those stabilizers; keeping the level sets nested this way is what
        makes the verification induction sound.  When g moves no existing
        base point a new level is opened at its first moved point
        (first-moved-point base heuristic).
        """
        if stick == len(self._levels):
            point = next(i for i, x in enumerate(g) if x != i)
            self._levels.append(_Level(point, self._ident))
        for i in range(stick + 1):
            lvl = self._levels[i]
            lvl.gens.append(g)
            self._extend_orbit(lvl)

    def _build(self, seed: int):
        raw_gens = []
        for g in self.generators:
            raw = g.raw
            if any(i != x for i, x in enumerate(raw)) and raw not in raw_gens:
                raw_gens.append(raw)
        if not raw_gens:
            return  # trivial group: empty chain, order 1
        changed = True
        while changed:
            changed = False
            for g in raw_gens:
                residue, stick = self._sift(g)
                if residue != self._ident:
                    self._add_strong(residue, stick)
                    changed = True
        sampler = ProductReplacementSampler(raw_gens, seed)
        clean = 0
        while clean < _CLEAN_SIFTS:
            residue, stick = self._sift(sampler._step())
            if residue == self._ident:
                clean += 1
            else:
                clean = 0
                self._add_strong(residue, stick)
        self._prune(set(raw_gens))
        # verify, then make sure the certified group is still the group the
        # inputs generate (pruning could in principle drop span-essential
        # generators); every re-insertion grows a basic orbit, so this loop
        # terminates
        while True:
            self._verify()
            complete = True
            for g in raw_gens:
                residue, stick = self._sift(g)
                if residue != self._ident:
                    self._add_strong(residue, stick)
                    complete = False
            if complete:
                return

    def _prune(self, protected: set[tuple[int, ...]]):
        """Drop strong generators that never extend their level's orbit.

        One BFS per level records which generators first reached each
        orbit point; the rest are redundant for the orbit (though not
        necessarily for the stabilizer below - the verification pass
        restores anything still needed).  Transversals are rebuilt from
        the kept generators so every transversal word stays inside the
        kept span.  The original input generators are never dropped from
        the top level: the certified group must remain the group they
        generate.
        """
        for depth, lvl in enumerate(self._levels):
            orbit = set(lvl.trans)
            kept: list[tuple[int, ...]] = []
            kept_set: set[tuple[int, ...]] = set()
            reached = {lvl.point}
            frontier = [lvl.point]
            while frontier:
                fresh = []
                for beta in frontier:
                    for s in lvl.gens:
                        gamma = s[beta]
                        if gamma not in reached:
                            reached.add(gamma)
                            fresh.append(gamma)
                            if s not in kept_set:
                                kept_set.add(s)
                                kept.append(s)
                frontier = fresh
            if depth == 0:
                for g in lvl.gens:
                    if g in protected and g not in kept_set:
                        kept.append(g)
                        kept_set.add(g)
            lvl.gens = kept
            lvl.trans = {lvl.point: self._ident}
            lvl.invtrans = {lvl.point: self._ident}
            self._extend_orbit(lvl)
            assert set(lvl.trans) == orbit  # reduced set spans the same orbit

    def _check_level(self, i: int):
        """Sift every Schreier generator of level i through the chain below.

        Returns None when all reduce to the identity, else the first
        failing residue and the level index where it stuck.
        """
        ident = self._ident
        levels = self._levels
        lvl = levels[i]
        for beta, u in lvl.trans.items():
            for s in lvl.gens:
                gamma = s[beta]
                w = _compose(s, u)
                t = lvl.trans[gamma]
                if w == t:
                    continue
                residue = _compose(lvl.invtrans[gamma], w)
                stick = None
                for j in range(i + 1, len(levels)):
                    l2 = levels[j]
                    b2 = residue[l2.point]
                    if b2 == l2.point:
                        continue
                    inv = l2.invtrans.get(b2)
                    if inv is None:
                        stick = j
                        break
                    residue = _compose(inv, residue)
                if stick is None:
                    if residue == ident:
                        continue
                    stick = len(levels)
                return residue, stick
        return None

    def _verify(self):
        """Deterministic Schreier-Sims verification with repair.

        Levels are certified deepest-first.  A repair adjoins the residue
        (levels 0..stick) and strictly enlarges the product of the basic
        orbit sizes, which is bounded by |G|, so the loop terminates.
        Levels deeper than the repair point are untouched by it and stay
        certified; re-checking resumes at the repair level.
        """
        i = len(self._levels) - 1
        while i >= 0:
            failure = self._check_level(i)
            if failure is None:
                i -= 1
                continue
            residue, stick = failure
            self._add_strong(residue, stick)
            i = stick


def normal_closure(group: PermutationGroup, seeds, max_generators: int = 256,
                   seed: int = DEFAULT_SEED) -> PermutationGroup | None:
    """Smallest subgroup of `group` containing `seeds` and normal in it.

    Returns None ("inconclusive") when the generator count exceeds
    `max_generators`; never returns a wrong group.
    """
    closure_gens: list[Permutation] = []
    seen: set[Permutation] = set()
    for s in seeds:
        if s.degree != group.degree:
            raise ValueError("degree mismatch")
        if not s.is_identity() and s not in seen:
            closure_gens.append(s)
            seen.add(s)
    if not closure_gens:
        return PermutationGroup([Permutation.identity(group.degree)], seed=seed)
    handle = PermutationGroup(closure_gens, seed=seed)
    while True:
        new: list[Permutation] = []
        for g in group.generators:
            ginv = g.inverse()
            for s in closure_gens:
                conj = ginv * s * g
                if conj not in seen and not handle.contains(conj):
                    new.append(conj)
                    seen.add(conj)
        if not new:
            return handle
        closure_gens.extend(new)
        if len(closure_gens) > max_generators:
            return None
        handle = PermutationGroup(closure_gens, seed=seed)
