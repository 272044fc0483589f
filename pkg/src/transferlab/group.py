"""Permutation groups with deterministic stabilizer chains.

Everything here is immutable after construction; derived objects
(transversals, quotients) hold references to their parents and never
mutate them.  Identical generator lists always produce identical chains,
orderings and transversals, which keeps every downstream computation
(including transfer values) reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .caps import DEFAULT_CAPS, Caps, CapExceeded, check_cap
from .perm import Perm, commutator


@dataclass
class _Level:
    base: int
    gens: list[Perm]
    transversal: dict[int, Perm]  # point -> u with u(base) = point


def _orbit_transversal(base: int, gens: Sequence[Perm], degree: int) -> dict[int, Perm]:
    trans = {base: Perm.identity(degree)}
    queue = [base]
    while queue:
        x = queue.pop(0)
        ux = trans[x]
        for g in gens:
            y = g.images[x]
            if y not in trans:
                trans[y] = ux * g
                queue.append(y)
    return trans


def _build_chain(degree: int, gens: Sequence[Perm]) -> list[_Level]:
    """Deterministic Schreier-Sims; base points are smallest moved points.

    levels[i].gens holds the strong generators first discovered at level
    i; the generating set of the i-th stabilizer group is the union of
    the gens of levels i..end (all of them fix base points 0..i-1).
    """
    levels: list[_Level] = []

    def eff_gens(i: int) -> list[Perm]:
        return [s for lvl in levels[i:] for s in lvl.gens]

    def refresh(i: int) -> None:
        for lvl_i in range(i + 1):
            lvl = levels[lvl_i]
            lvl.transversal = _orbit_transversal(lvl.base, eff_gens(lvl_i), degree)

    def sift(g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(levels)):
            lvl = levels[i]
            x = g.images[lvl.base]
            if x not in lvl.transversal:
                return g, i
            g = g * lvl.transversal[x].inverse()
        return g, len(levels)

    def insert(g: Perm) -> bool:
        h, i = sift(g)
        if h.is_identity():
            return False
        if i == len(levels):
            levels.append(_Level(h.smallest_moved_point(), [], {}))
        levels[i].gens.append(h)
        refresh(len(levels) - 1)
        return True

    for g in gens:
        insert(g)

    # Close under Schreier generators until every one sifts to the identity.
    changed = True
    while changed:
        changed = False
        for i in range(len(levels)):
            lvl = levels[i]
            level_gens = eff_gens(i)
            for x in sorted(lvl.transversal):
                ux = lvl.transversal[x]
                for s in level_gens:
                    y = s.images[x]
                    schreier = ux * s * lvl.transversal[y].inverse()
                    if insert(schreier):
                        changed = True
    return levels


class PermGroup:
    """A finitely generated permutation group on {0..degree-1}."""

    def __init__(self, degree: int, generators: Iterable[Perm], name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.gens: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self._chain: list[_Level] | None = None
        self._order: int | None = None
        self._elements: list[Perm] | None = None
        self._element_set: frozenset[tuple[int, ...]] | None = None

    # chain / order / membership ------------------------------------------

    @property
    def chain(self) -> list[_Level]:
        if self._chain is None:
            self._chain = _build_chain(self.degree, self.gens)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            n = 1
            for lvl in self.chain:
                n *= len(lvl.transversal)
            self._order = n
        return self._order

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        if self._element_set is not None:
            return g.images in self._element_set
        for lvl in self.chain:
            x = g.images[lvl.base]
            if x not in lvl.transversal:
                return False
            g = g * lvl.transversal[x].inverse()
        return g.is_identity()

    def __contains__(self, g: Perm) -> bool:
        return self.contains(g)

    def elements(self, caps: Caps = DEFAULT_CAPS) -> list[Perm]:
        """All elements, in chain order, each exactly once."""
        if self._elements is None:
            check_cap("element enumeration", self.order(), caps.element_cap)
            result = [Perm.identity(self.degree)]
            for lvl in reversed(self.chain):
                reps = [lvl.transversal[x] for x in sorted(lvl.transversal)]
                result = [h * u for u in reps for h in result]
            self._elements = result
            self._element_set = frozenset(p.images for p in result)
        return self._elements

    def element_set(self, caps: Caps = DEFAULT_CAPS) -> frozenset[tuple[int, ...]]:
        if self._element_set is None:
            self.elements(caps)
        return self._element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements())

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def random_element(self, rng) -> Perm:
        """Random product of generators (not uniform; fine for sampling)."""
        if not self.gens:
            return self.identity()
        g = self.identity()
        for _ in range(rng.randrange(1, 20)):
            g = g * rng.choice(self.gens)
        return g

    # relations ------------------------------------------------------------

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return all(other.contains(g) for g in self.gens)

    def same_group_as(self, other: "PermGroup") -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True iff self is normalized by every generator of other."""
        return all(
            self.contains(h.conjugate(g)) for g in other.gens for h in self.gens
        )

    def subgroup_key(self, caps: Caps = DEFAULT_CAPS) -> frozenset[tuple[int, ...]]:
        """Canonical identity of this group as a subgroup (its element set)."""
        return self.element_set(caps)

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} deg={self.degree} |G|={self.order()}>"


# constructors -------------------------------------------------------------

def group_from_generators(
    degree: int, gens: Iterable[Perm], name: str | None = None
) -> PermGroup:
    return PermGroup(degree, gens, name)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [], "1")


def span(degree: int, elems: Iterable[Perm]) -> PermGroup:
    """<elems>, built incrementally so the generator list stays short."""
    gens: list[Perm] = []
    current = PermGroup(degree, [])
    for x in elems:
        if not current.contains(x):
            gens.append(x)
            current = PermGroup(degree, gens)
    return current


# subgroup operations ------------------------------------------------------

def conjugate_subgroup(h: PermGroup, g: Perm) -> PermGroup:
    if g.degree != h.degree:
        raise ValueError("degree mismatch")
    return PermGroup(h.degree, [x.conjugate(g) for x in h.gens])


def _scan_subgroup(g: PermGroup, keep, caps: Caps) -> PermGroup:
    return PermGroup(g.degree, [x for x in g.elements(caps) if keep(x)])


def normalizer(g: PermGroup, h: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """N_G(H) by full element scan (exact at desk scale)."""
    if g.degree != h.degree:
        raise ValueError("degree mismatch")
    hset = h.element_set(caps)

    def keep(x: Perm) -> bool:
        return all(t.conjugate(x).images in hset for t in h.gens)

    return _scan_subgroup(g, keep, caps)


def centralizer(g: PermGroup, h: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    if g.degree != h.degree:
        raise ValueError("degree mismatch")

    def keep(x: Perm) -> bool:
        return all(t * x == x * t for t in h.gens)

    return _scan_subgroup(g, keep, caps)


def intersection(a: PermGroup, b: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """A ∩ B by enumerating the smaller group."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    small, large = (a, b) if a.order() <= b.order() else (b, a)
    return PermGroup(a.degree, [x for x in small.elements(caps) if large.contains(x)])


def join(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    return PermGroup(a.degree, list(a.gens) + list(b.gens))


def generated_order_reaches(
    degree: int, gens: list[Perm], extra: Perm, target: int
) -> bool:
    """True iff <gens, extra> has order >= target (early-exit helper)."""
    return PermGroup(degree, gens + [extra]).order() >= target


def normal_closure(
    g: PermGroup, seeds: Sequence[Perm], caps: Caps = DEFAULT_CAPS
) -> PermGroup:
    """Smallest normal subgroup of G containing the seeds, by saturation."""
    for s in seeds:
        if not g.contains(s):
            raise ValueError("seed not in ambient group")
    current = PermGroup(g.degree, seeds)
    while True:
        new = []
        for s in current.gens:
            for x in g.gens:
                c = s.conjugate(x)
                if not current.contains(c):
                    new.append(c)
        if not new:
            return current
        current = PermGroup(g.degree, list(current.gens) + new)
        check_cap("normal closure", current.order(), caps.element_cap)


def commutator_subgroup(
    a: PermGroup, b: PermGroup, ambient: PermGroup, caps: Caps = DEFAULT_CAPS
) -> PermGroup:
    """[A, B]: normal closure in <A,B> of generator commutators."""
    comms = [commutator(x, y) for x in a.gens for y in b.gens]
    comms = [c for c in comms if not c.is_identity()]
    if not comms:
        return trivial_group(a.degree)
    return normal_closure(join(a, b), comms, caps)


def derived_subgroup(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    return commutator_subgroup(g, g, g, caps)


# transversals and coset machinery ----------------------------------------

class Transversal:
    """Ordered right-coset representatives for H in G.

    The identity comes first; the rest are sorted by image tuple, so a
    given (G, H) pair always yields the same transversal and therefore
    the same raw pretransfer values.
    """

    def __init__(self, parent: PermGroup, subgroup: PermGroup, reps: list[Perm]):
        self.parent = parent
        self.subgroup = subgroup
        self.reps = reps
        self._rep_set = {r.images for r in reps}
        self._cache: dict[tuple[int, ...], Perm] = {r.images: r for r in reps}

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.reps)

    def rep_of(self, g: Perm) -> Perm:
        """The unique rep r with g * r^-1 in H."""
        cached = self._cache.get(g.images)
        if cached is not None:
            return cached
        h = self.subgroup
        for r in self.reps:
            if h.contains(g * r.inverse()):
                self._cache[g.images] = r
                return r
        raise ValueError("element is not in the parent group")

    def dot(self, t: Perm, g: Perm) -> Perm:
        """The coset rep of H t g (the 'dot action' t.g)."""
        if t.images not in self._rep_set:
            raise ValueError("t is not a listed representative")
        return self.rep_of(t * g)


def right_transversal(
    g: PermGroup, h: PermGroup, caps: Caps = DEFAULT_CAPS
) -> Transversal:
    if not h.is_subgroup_of(g):
        raise ValueError("H is not a subgroup of G")
    index = g.order() // h.order()
    check_cap("transversal", index, caps.element_cap)
    reps = [Perm.identity(g.degree)]
    frontier = [reps[0]]
    # BFS over cosets; coset identity is tested against all found reps.
    while frontier:
        nxt = []
        for r in frontier:
            for s in g.gens:
                c = r * s
                if not any(h.contains(c * r2.inverse()) for r2 in reps):
                    reps.append(c)
                    nxt.append(c)
        frontier = nxt
    assert len(reps) == index, "coset BFS miscounted"
    ordered = [reps[0]] + sorted(reps[1:])
    return Transversal(g, h, ordered)


def dot_action(t: Transversal, rep: Perm, g: Perm) -> Perm:
    return t.dot(rep, g)


def double_coset_reps(
    g: PermGroup, h: PermGroup, k: PermGroup, caps: Caps = DEFAULT_CAPS
) -> list[Perm]:
    """Representatives of the (H, K) double cosets, identity first.

    Computed as orbits of K on the right cosets of H; each orbit rep is
    the transversal element of smallest index, so the output is
    deterministic.
    """
    trans = right_transversal(g, h, caps)
    n = len(trans.reps)
    index_of = {r.images: i for i, r in enumerate(trans.reps)}
    unseen = set(range(n))
    out = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        queue = [start]
        while queue:
            i = queue.pop(0)
            for s in k.gens:
                j = index_of[trans.rep_of(trans.reps[i] * s).images]
                if j not in orbit:
                    orbit.add(j)
                    queue.append(j)
        unseen -= orbit
        out.append(trans.reps[start])
    return out


# quotients ----------------------------------------------------------------

class QuotientGroup:
    """G/N acting on the right cosets of N; N must be normal in G."""

    def __init__(self, source: PermGroup, kernel: PermGroup, caps: Caps = DEFAULT_CAPS):
        if not kernel.is_subgroup_of(source):
            raise ValueError("kernel is not a subgroup of the source")
        if not kernel.is_normal_in(source):
            raise ValueError("kernel is not normal in the source")
        self.source = source
        self.kernel = kernel
        self.transversal = right_transversal(source, kernel, caps)
        self._index = {r.images: i for i, r in enumerate(self.transversal.reps)}
        self.image = PermGroup(
            max(len(self.transversal.reps), 1),
            [self._coset_perm(g) for g in source.gens],
        )

    def _coset_perm(self, g: Perm) -> Perm:
        reps = self.transversal.reps
        return Perm(
            self._index[self.transversal.rep_of(r * g).images] for r in reps
        )

    def project(self, g: Perm) -> Perm:
        if not self.source.contains(g):
            raise ValueError("element not in the source group")
        return self._coset_perm(g)

    def project_subgroup(self, h: PermGroup) -> PermGroup:
        return PermGroup(self.image.degree, [self.project(x) for x in h.gens])

    def preimage_subgroup(self, q: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
        """Full inverse image of a subgroup of the image."""
        lifts = []
        needed = {p.images for p in q.gens}
        for r in self.transversal.reps:
            if not needed:
                break
            img = self._coset_perm(r).images
            if img in needed:
                lifts.append(r)
                needed.discard(img)
        if needed:
            raise ValueError("subgroup generators not found in the image")
        return PermGroup(self.source.degree, list(self.kernel.gens) + lifts)


def quotient_group(
    g: PermGroup, n: PermGroup, caps: Caps = DEFAULT_CAPS
) -> QuotientGroup:
    return QuotientGroup(g, n, caps)


def core(g: PermGroup, h: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Core_G(H): intersection of the conjugates of H over a transversal."""
    trans = right_transversal(g, h, caps)
    result = h
    for t in trans.reps[1:]:
        result = intersection(result, conjugate_subgroup(h, t), caps)
        if result.is_trivial():
            break
    return result


def is_maximal(g: PermGroup, h: PermGroup, caps: Caps = DEFAULT_CAPS) -> bool:
    if h.same_group_as(g):
        raise ValueError("H must be a proper subgroup of G")
    if not h.is_subgroup_of(g):
        raise ValueError("H is not a subgroup of G")
    order_g = g.order()
    trans = right_transversal(g, h, caps)
    for t in trans.reps[1:]:
        if PermGroup(g.degree, list(h.gens) + [t]).order() != order_g:
            return False
    return True
