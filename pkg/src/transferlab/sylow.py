"""Sylow subgroups, Sylow intersections, tame-intersection and
weak-closure predicates, characteristic subgroup enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps, check_cap
from .group import (
    PermGroup,
    conjugate_subgroup,
    intersection,
    join,
    normalizer,
    quotient_group,
    right_transversal,
    span,
)
from .iso import (
    GeneratorMap,
    all_subgroups,
    automorphism_representatives,
    is_characteristic,
)
from .perm import Perm
from .series import (
    element_p_part,
    is_p_group,
    is_p_nilpotent,
    p_part,
)


def sylow_subgroup(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """A Sylow p-subgroup, by normalizer ascent.

    Start from the p-part of the first p-singular element in enumeration
    order; while not full, adjoin an element of the normalizer whose
    image in N/current has order p.  Deterministic.
    """
    target = p_part(g.order(), p)
    if target == 1:
        raise ValueError(f"{p} does not divide the group order")
    current: PermGroup | None = None
    for x in g.elements(caps):
        xp = element_p_part(x, p)
        if not xp.is_identity():
            current = PermGroup(g.degree, [xp])
            break
    assert current is not None
    while current.order() < target:
        n = normalizer(g, current, caps)
        grown = False
        for y in n.elements(caps):
            if current.contains(y):
                continue
            if current.contains(y**p):
                current = PermGroup(g.degree, list(current.gens) + [y])
                grown = True
                break
        assert grown, "normalizer ascent stalled (should be impossible)"
    return current


@dataclass
class SylowFamily:
    prime: int
    members: list[PermGroup]
    base: int  # index of the distinguished Sylow subgroup

    @property
    def base_member(self) -> PermGroup:
        return self.members[self.base]

    def __len__(self) -> int:
        return len(self.members)


def all_sylow_subgroups(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> SylowFamily:
    """All Sylow p-subgroups: conjugates of one by a transversal of its
    normalizer."""
    syl = sylow_subgroup(g, p, caps)
    n = normalizer(g, syl, caps)
    count = g.order() // n.order()
    check_cap("Sylow family", count, caps.sylow_family_cap)
    trans = right_transversal(g, n, caps)
    members = [conjugate_subgroup(syl, t) for t in trans.reps]
    return SylowFamily(p, members, 0)


def sylow_intersections(
    g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS, family: SylowFamily | None = None
) -> list[tuple[tuple[int, int], PermGroup]]:
    """All pairwise intersections of distinct Sylow p-subgroups."""
    fam = family if family is not None else all_sylow_subgroups(g, p, caps)
    out = []
    for i in range(len(fam.members)):
        for j in range(i + 1, len(fam.members)):
            out.append(((i, j), intersection(fam.members[i], fam.members[j], caps)))
    return out


def max_intersection_order(
    g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS, family: SylowFamily | None = None
) -> int:
    pairs = sylow_intersections(g, p, caps, family)
    if not pairs:
        return 1
    return max(d.order() for _, d in pairs)


@dataclass
class TameIntersectionRecord:
    p_subgroup: PermGroup  # P
    q_subgroup: PermGroup  # Q
    d: PermGroup  # P cap Q
    tame: bool
    normalizer: PermGroup  # N_G(D)
    normalizer_p_nilpotent: bool
    n_over_c_is_p_group: bool


def is_tame_intersection(
    g: PermGroup,
    p_syl: PermGroup,
    q_syl: PermGroup,
    prime: int,
    caps: Caps = DEFAULT_CAPS,
) -> TameIntersectionRecord:
    """Classify P cap Q, and record the predicates the theorems need."""
    target = p_part(g.order(), prime)
    if p_syl.order() != target or q_syl.order() != target:
        raise ValueError("both subgroups must be Sylow p-subgroups")
    d = intersection(p_syl, q_syl, caps)
    n_g_d = normalizer(g, d, caps)
    n_p_d = intersection(n_g_d, p_syl, caps)
    n_q_d = intersection(n_g_d, q_syl, caps)
    sylow_order_in_n = p_part(n_g_d.order(), prime)
    tame = n_p_d.order() == sylow_order_in_n and n_q_d.order() == sylow_order_in_n
    from .group import centralizer

    c_g_d = centralizer(g, d, caps)
    n_over_c = n_g_d.order() // intersection(n_g_d, c_g_d, caps).order()
    return TameIntersectionRecord(
        p_subgroup=p_syl,
        q_subgroup=q_syl,
        d=d,
        tame=tame,
        normalizer=n_g_d,
        normalizer_p_nilpotent=is_p_nilpotent(n_g_d, prime, caps),
        n_over_c_is_p_group=p_part(n_over_c, prime) == n_over_c,
    )


def tame_intersections_between(
    g: PermGroup,
    p: int,
    lower: PermGroup,
    strict_upper: bool,
    caps: Caps = DEFAULT_CAPS,
    family: SylowFamily | None = None,
    strict_lower: bool = True,
) -> list[TameIntersectionRecord]:
    """Tame intersections D = P cap Q with `lower` below D (strictly by
    default), and D < P when strict_upper, deduplicated by D.

    The base Sylow subgroup P is the family's distinguished member; Q
    ranges over the whole family (including Q = P when strict_upper is
    off, which yields D = P).
    """
    fam = family if family is not None else all_sylow_subgroups(g, p, caps)
    p_syl = fam.base_member
    lower_order = lower.order()
    seen: set[frozenset] = set()
    out = []
    for i, q_syl in enumerate(fam.members):
        if i == fam.base and strict_upper:
            continue
        d = intersection(p_syl, q_syl, caps)
        if strict_upper and d.order() == p_syl.order():
            continue
        if d.order() < lower_order or not lower.is_subgroup_of(d):
            continue
        if strict_lower and d.order() == lower_order:
            continue
        key = d.element_set(caps)
        if key in seen:
            continue
        seen.add(key)
        rec = is_tame_intersection(g, p_syl, q_syl, p, caps)
        if rec.tame:
            out.append(rec)
    return out


def is_weakly_closed(
    g: PermGroup, p_syl: PermGroup, k: PermGroup, caps: Caps = DEFAULT_CAPS
) -> tuple[bool, Perm | None]:
    """Is K weakly closed in P (wrt G)?  On failure, return a conjugating
    element g with K^g <= P but K^g != K."""
    n = normalizer(g, k, caps)
    kset = k.element_set(caps)
    trans = right_transversal(g, n, caps)
    for t in trans.reps[1:]:
        conj = conjugate_subgroup(k, t)
        if conj.is_subgroup_of(p_syl) and conj.element_set(caps) != kset:
            return False, t
    return True, None


def characteristic_subgroups_above(
    p_grp: PermGroup,
    lower: PermGroup,
    caps: Caps = DEFAULT_CAPS,
    auts: list[GeneratorMap] | None = None,
) -> list[PermGroup]:
    """All characteristic subgroups C with lower <= C <= P.

    A characteristic subgroup is normal, and normal subgroups are fixed
    by inner automorphisms, so testing automorphism representatives
    modulo the inner ones suffices.
    """
    if auts is None:
        auts = automorphism_representatives(p_grp, caps)
    out = []
    for c in all_subgroups(p_grp, caps):
        if (
            lower.is_subgroup_of(c)
            and c.is_normal_in(p_grp)
            and is_characteristic(p_grp, c, auts)
        ):
            out.append(c)
    return out
