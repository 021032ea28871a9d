"""Permutations of {1..n}, the S_n stabilizer chain, and canonic factorization.

Points are 1-based throughout.  Composition acts left-to-right: the image of
i under p*q is q(p(i)).  Every permutation factors uniquely as
psi_n * psi_(n-1) * ... * psi_1 with psi_i drawn from the level-i coset
transversal {I, (i,i+1), ..., (i,n)}; `sift` computes that factorization and
`unsift` multiplies it back out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class Permutation:
    """A bijection of {1..n} stored as an image table."""

    __slots__ = ("n", "_images")

    def __init__(self, images):
        imgs = tuple(images)
        n = len(imgs)
        if n < 1:
            raise ValueError("permutation needs at least one point")
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"image table is not a bijection of 1..{n}: {imgs}")
        self.n = n
        self._images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def images(self) -> tuple:
        """Image table: images[i-1] is the image of point i."""
        return self._images

    def image(self, i: int) -> int:
        return self._images[i - 1]

    def preimage(self, k: int) -> int:
        return self._images.index(k) + 1

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self._images, start=1))

    def fixes(self, upto: int) -> bool:
        """True iff every point in 1..upto is fixed."""
        return all(self._images[i] == i + 1 for i in range(upto))

    def cycles(self) -> list:
        """Disjoint cycles, each starting at its minimum, ordered by minimum.

        Fixed points are omitted; the identity yields [].
        """
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start] or self.image(start) == start:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.image(j)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, n={self.n})"


@dataclass(frozen=True)
class Transposition:
    """The swap (i,k) with i < k, or the distinguished identity (i = k = 0)."""

    i: int
    k: int

    def __post_init__(self):
        if (self.i, self.k) == (0, 0):
            return
        if not (1 <= self.i < self.k):
            raise ValueError(f"transposition needs 1 <= i < k, got ({self.i},{self.k})")

    @classmethod
    def identity(cls) -> "Transposition":
        return cls(0, 0)

    @property
    def is_identity(self) -> bool:
        return self.i == 0

    def to_perm(self, n: int) -> Permutation:
        if self.is_identity:
            return Permutation.identity(n)
        if self.k > n:
            raise ValueError(f"transposition ({self.i},{self.k}) does not fit in S_{n}")
        images = list(range(1, n + 1))
        images[self.i - 1], images[self.k - 1] = self.k, self.i
        return Permutation(images)

    def __str__(self):
        return "I" if self.is_identity else f"({self.i},{self.k})"


@dataclass(frozen=True)
class CosetChain:
    """Transversals U_1..U_n of the point-stabilizer chain of S_n.

    Level i holds {I, (i,i+1), ..., (i,n)}, identity first, so
    |U_i| = n - i + 1 and the level sizes multiply to n!.
    """

    n: int
    levels: tuple  # tuple of tuples of Transposition

    def level(self, i: int) -> tuple:
        return self.levels[i - 1]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to q(p(i))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    qi = q._images
    return Permutation(qi[x - 1] for x in p._images)


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i, im in enumerate(p._images, start=1):
        images[im - 1] = i
    return Permutation(images)


def coset_transversals(n: int) -> CosetChain:
    if n < 1:
        raise ValueError("n must be >= 1")
    levels = []
    for i in range(1, n + 1):
        lev = [Transposition.identity()]
        lev.extend(Transposition(i, k) for k in range(i + 1, n + 1))
        levels.append(tuple(lev))
    return CosetChain(n, tuple(levels))


def order_from_chain(chain: CosetChain) -> int:
    # Python ints are arbitrary precision, so the product is always exact.
    return math.prod(len(lev) for lev in chain.levels)


def sift(p: Permutation) -> list:
    """Factor p into per-level transpositions [psi_1 .. psi_n], psi_i in U_i.

    At level i the residue (which already fixes 1..i-1) either fixes i, giving
    psi_i = I, or moves i to some m > i, giving psi_i = (i,m); multiplying the
    residue by psi_i then fixes i as well.
    """
    factors = []
    residue = p
    for i in range(1, p.n + 1):
        m = residue.image(i)
        if m == i:
            factors.append(Transposition.identity())
        else:
            psi = Transposition(i, m)
            factors.append(psi)
            residue = compose(residue, psi.to_perm(p.n))
    return factors


def unsift(factors) -> Permutation:
    """Multiply factors back out as psi_n * psi_(n-1) * ... * psi_1.

    factors[i-1] must lie in U_i; the result inverts `sift`.
    """
    factors = list(factors)
    n = len(factors)
    if n < 1:
        raise ValueError("need at least one factor")
    for i, psi in enumerate(factors, start=1):
        if psi.is_identity:
            continue
        if psi.i != i or psi.k > n:
            raise ValueError(f"factor {psi} at level {i} is not in U_{i}")
    result = Permutation.identity(n)
    for i in range(n, 0, -1):
        result = compose(result, factors[i - 1].to_perm(n))
    return result


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation like "(1,3,5)(2,4)" into a permutation.

    The empty string and "()" both denote the identity.  Repeated points,
    points outside 1..n, and malformed syntax are rejected with the offending
    position in the message.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    images = list(range(n + 1))  # 1-based; slot 0 unused
    seen = set()
    pos = 0
    length = len(text)

    def skip_ws(j):
        while j < length and text[j].isspace():
            j += 1
        return j

    pos = skip_ws(pos)
    while pos < length:
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos}")
        pos = skip_ws(pos + 1)
        cycle = []
        if pos < length and text[pos] == ")":
            pos = skip_ws(pos + 1)  # "()" is an empty cycle
            continue
        while True:
            start = pos
            while pos < length and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ValueError(f"expected a point at position {start}")
            point = int(text[start:pos])
            if not (1 <= point <= n):
                raise ValueError(f"point {point} out of range 1..{n} at position {start}")
            if point in seen:
                raise ValueError(f"repeated point {point} at position {start}")
            seen.add(point)
            cycle.append(point)
            pos = skip_ws(pos)
            if pos < length and text[pos] == ",":
                pos = skip_ws(pos + 1)
                continue
            if pos < length and text[pos] == ")":
                pos = skip_ws(pos + 1)
                break
            raise ValueError(f"expected ',' or ')' at position {pos}")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Permutation(images[1:])


def format_cycles(p: Permutation) -> str:
    """Canonic cycle text: minimum element first per cycle, cycles ordered by
    minimum, fixed points omitted; the identity prints as "()"."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)


def all_permutations(n: int):
    """All of S_n in lexicographic image-table order."""
    import itertools

    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
