"""Exact permutations on the finite point set {1..n}.

Composition convention, used everywhere in this package:

    (p * q)(i) == p(q(i))

that is, ``q`` acts first.  This is fixed here once and covered by a
dedicated test; all other modules import it implicitly by using ``*``.

Points are 1-based in every public interface (matching the sticker
labels 1..144 of the cube models).  The internal image table is
0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included as 1s.

    This is the shared observable for group elements and for Frobenius
    classes read off from factor degrees mod p.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(part < 1 for part in self.parts):
            raise ValueError("cycle type parts must be positive")
        ordered = tuple(sorted(self.parts, reverse=True))
        object.__setattr__(self, "parts", ordered)

    @classmethod
    def from_parts(cls, parts) -> "CycleType":
        return cls(tuple(parts))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def parity(self) -> int:
        """+1 for even permutations of this type, -1 for odd."""
        return -1 if (self.degree - len(self.parts)) % 2 else 1

    def __str__(self) -> str:
        seen: dict[int, int] = {}
        for part in self.parts:
            seen[part] = seen.get(part, 0) + 1
        return " ".join(
            f"{k}^{v}" if v > 1 else str(k) for k, v in sorted(seen.items(), reverse=True)
        )


class Permutation:
    """An immutable bijection of {1..n}."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images):
        """Build from the image table: images[i] is the image of point i+1 (1-based values)."""
        img = tuple(x - 1 for x in images)
        n = len(img)
        seen = [False] * n
        for x in img:
            if not 0 <= x < n or seen[x]:
                raise ValueError("image table is not a bijection of {1..%d}" % n)
            seen[x] = True
        object.__setattr__(self, "_img", img)
        object.__setattr__(self, "_hash", hash(img))

    # -- internal fast path: trusted 0-based tuples ----------------------

    @classmethod
    def _wrap(cls, img: tuple[int, ...]) -> "Permutation":
        self = object.__new__(cls)
        object.__setattr__(self, "_img", img)
        object.__setattr__(self, "_hash", hash(img))
        return self

    @property
    def raw(self) -> tuple[int, ...]:
        """0-based image tuple; used by the group engine."""
        return self._img

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._wrap(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Product of the given disjoint cycles (1-based points)."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} out of range 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated")
                seen.add(a)
            for i, a in enumerate(cyc):
                img[a - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._wrap(tuple(img))

    # -- basic protocol -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._img):
            raise ValueError(f"point {point} out of range")
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(i) = p(q(i))
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._img) != len(other._img):
            raise ValueError("degree mismatch")
        return Permutation._wrap(tuple(map(self._img.__getitem__, other._img)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._wrap(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        n = len(self._img)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.degree}: {print_cycles(self) or 'id'})"

    # -- structure ----------------------------------------------------------

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def moved_points(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self._img) if x != i]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each rotated to start at its least
        point, sorted by that least point."""
        img = self._img
        seen = [False] * len(img)
        out = []
        for start in range(len(img)):
            if seen[start] or img[start] == start:
                seen[start] = True
                continue
            cyc = []
            a = start
            while not seen[a]:
                seen[a] = True
                cyc.append(a + 1)
                a = img[a]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        img = self._img
        seen = [False] * len(img)
        parts = []
        for start in range(len(img)):
            if seen[start]:
                continue
            length = 0
            a = start
            while not seen[a]:
                seen[a] = True
                length += 1
                a = img[a]
            parts.append(length)
        return CycleType(tuple(parts))

    def sign(self) -> int:
        """(-1)^(number of transpositions); equals the parity of the cycle type."""
        return self.cycle_type().parity

    def order(self) -> int:
        return lcm(*self.cycle_type().parts)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-tolerant cycle notation like "(40 88 9 96)(28 76 21 84)".

    Points not mentioned are fixed; the empty string is the identity.
    Raises ValueError for points out of range, repeated points, or
    malformed parentheses.
    """
    cycles = []
    current = None
    for token in text.replace("(", " ( ").replace(")", " ) ").split():
        if token == "(":
            if current is not None:
                raise ValueError("nested '(' in cycle notation")
            current = []
        elif token == ")":
            if current is None:
                raise ValueError("unmatched ')' in cycle notation")
            if current:
                cycles.append(tuple(current))
            current = None
        else:
            if current is None:
                raise ValueError(f"point {token!r} outside any cycle")
            try:
                current.append(int(token))
            except ValueError:
                raise ValueError(f"malformed point {token!r}") from None
    if current is not None:
        raise ValueError("unterminated '(' in cycle notation")
    return Permutation.from_cycles(cycles, degree)


def print_cycles(p: Permutation) -> str:
    """Canonical cycle string: cycles sorted by least element, each cycle
    starting at its least element, fixed points omitted.  Identity prints
    as the empty string."""
    out = []
    for cyc in p.cycles():
        least = cyc.index(min(cyc))
        rotated = cyc[least:] + cyc[:least]
        out.append("(" + " ".join(str(a) for a in rotated) + ")")
    return "".join(out)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i)); same as ``p * q``."""
    return p * q


def sign(p: Permutation) -> int:
    return p.sign()


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type()


def orbits(gens, degree: int | None = None) -> list[frozenset[int]]:
    """Finest partition of {1..N} closed under all generators,
    as frozensets sorted by least element."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required when the generator list is empty")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("degree mismatch")
    parent = list(range(degree))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i, x in enumerate(g.raw):
            ra, rb = find(i), find(x)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for i in range(degree):
        groups.setdefault(find(i), []).append(i + 1)
    return sorted((frozenset(v) for v in groups.values()), key=min)


def block_system(gens, points, seed_pair) -> list[frozenset[int]] | None:
    """Smallest invariant partition of `points` with `seed_pair` in one block.

    `points` must be closed under every generator (usually an orbit).
    Returns None when the closure collapses to a single block covering
    all of `points` (for a transitive action this means primitivity was
    not broken by the seed).
    """
    pts = frozenset(points)
    a0, b0 = seed_pair
    if a0 not in pts or b0 not in pts:
        raise ValueError("seed points outside the given point set")
    gens = list(gens)
    for g in gens:
        if any(g(a) not in pts for a in pts):
            raise ValueError("generators do not preserve the point set")
    parent = {a: a for a in pts}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    stack = [(a0, b0)]
    while stack:
        a, b = stack.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[ra] = rb
        for g in gens:
            stack.append((g(a), g(b)))
    blocks: dict[int, list[int]] = {}
    for a in pts:
        blocks.setdefault(find(a), []).append(a)
    if len(blocks) == 1:
        return None
    return sorted((frozenset(v) for v in blocks.values()), key=min)
