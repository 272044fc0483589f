"""Permutations of {0..n-1} stored as image tuples.

Composition is left-to-right: (a * b) applies a first, then b.  This
matches the right-coset conventions used everywhere else in the library
(right transversals, the dot action, pretransfer products).
"""

from __future__ import annotations

import itertools
from math import lcm
from typing import Iterable, Iterator


class Perm:
    """A bijection of {0..degree-1}, immutable and hashable."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        object.__setattr__(self, "images", imgs)

    # construction helpers -------------------------------------------------

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Iterable[int]]) -> "Perm":
        imgs = list(range(degree))
        for cycle in cycles:
            pts = list(cycle)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                imgs[a] = b
        return Perm(imgs)

    @staticmethod
    def transposition(degree: int, a: int, b: int) -> "Perm":
        return Perm.from_cycles(degree, [(a, b)])

    # core operations ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise ValueError("degree mismatch in composition")
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", tuple(b[x] for x in a))
        return p

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", tuple(inv))
        return p

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Perm") -> "Perm":
        """self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def order(self) -> int:
        cyc = self.cycles()
        return lcm(*(len(c) for c in cyc)) if cyc else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def smallest_moved_point(self) -> int | None:
        for i, x in enumerate(self.images):
            if x != i:
                return i
        return None

    # dunder plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def commutator(a: Perm, b: Perm) -> Perm:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like "(0 1 2)(3 4)" into a Perm.

    Accepts comma or whitespace separated points; "()" and "e" mean the
    identity.
    """
    s = text.strip()
    if s in ("()", "e", ""):
        return Perm.identity(degree)
    if s.count("(") != s.count(")") or not s.startswith("("):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in s.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        body = chunk.strip("()").replace(",", " ")
        pts = [int(tok) for tok in body.split()]
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: {chunk!r}")
        if pts:
            cycles.append(pts)
    return Perm.from_cycles(degree, cycles)


def all_perms(degree: int) -> Iterator[Perm]:
    """Every permutation of the given degree (use only for tiny degrees)."""
    for imgs in itertools.permutations(range(degree)):
        yield Perm(imgs)
