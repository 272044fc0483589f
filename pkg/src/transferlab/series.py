"""Structural subgroup functors: derived/central/norm series, Frattini,
omega, p-cores, p-residuals, p-nilpotency, the upper p-series, and the
centrality-height predicates.

Everything is computed by exact enumeration under the global caps; the
corpus tops out at order 2448 so nothing here needs to be clever.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .caps import DEFAULT_CAPS, Caps
from .group import (
    PermGroup,
    QuotientGroup,
    commutator_subgroup,
    derived_subgroup,
    intersection,
    join,
    normal_closure,
    quotient_group,
    span,
    trivial_group,
)
from .iso import all_subgroups
from .perm import Perm, commutator


@dataclass
class SeriesResult:
    kind: str  # derived | lower_central | upper_central | norm | p_series
    terms: list[PermGroup]
    length: int


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def p_prime_part(n: int, p: int) -> int:
    return n // p_part(n, p)


def is_p_group(g: PermGroup, p: int) -> bool:
    return p_part(g.order(), p) == g.order()


def element_p_part(x: Perm, p: int) -> Perm:
    """The p-part of x: a power of x of p-power order."""
    n = x.order()
    pp = p_part(n, p)
    m = n // pp
    # x = x_p * x_{p'}; x_p = x^(m * inv(m) mod pp)
    if pp == 1:
        return Perm.identity(x.degree)
    return x ** (m * pow(m, -1, pp))


# derived series -----------------------------------------------------------

def derived_series(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> SeriesResult:
    terms = [g]
    while True:
        nxt = derived_subgroup(terms[-1], caps)
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
        if nxt.is_trivial():
            break
    return SeriesResult("derived", terms, len(terms) - 1)


def is_solvable(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> bool:
    return derived_series(g, caps).terms[-1].is_trivial()


# lower central series -----------------------------------------------------

def lower_central_series(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> SeriesResult:
    terms = [g]
    while True:
        nxt = commutator_subgroup(terms[-1], g, g, caps)
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
        if nxt.is_trivial():
            break
    return SeriesResult("lower_central", terms, len(terms) - 1)


def is_nilpotent(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> bool:
    return lower_central_series(g, caps).terms[-1].is_trivial()


def nilpotency_class(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> int | None:
    """Number of steps of the lower central series; None if not nilpotent."""
    s = lower_central_series(g, caps)
    return s.length if s.terms[-1].is_trivial() else None


# upper central series -----------------------------------------------------

def center(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    return span(
        g.degree,
        (x for x in g.elements(caps) if all(x * s == s * x for s in g.gens)),
    )


def upper_central_series(g: PermGroup, caps: Caps = DEFAULT_CAPS) -> SeriesResult:
    terms = [trivial_group(g.degree)]
    elems = g.elements(caps)
    while True:
        prev = terms[-1]
        nxt = span(
            g.degree,
            (
                x
                for x in elems
                if all(prev.contains(commutator(x, s)) for s in g.gens)
            ),
        )
        if nxt.order() == prev.order():
            break
        terms.append(nxt)
        if nxt.order() == g.order():
            break
    return SeriesResult("upper_central", terms, len(terms) - 1)


def z_k(g: PermGroup, k: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """The k-th term of the upper central series (stabilized if k is large)."""
    terms = upper_central_series(g, caps).terms
    return terms[min(k, len(terms) - 1)]


# norm and norm series -----------------------------------------------------

def norm(p: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """The norm: intersection of the normalizers of all subgroups.

    Computed over cyclic subgroups only; normalizing every cyclic
    subgroup normalizes every subgroup.
    """
    elems = p.elements(caps)
    power_sets = []
    for y in elems:
        powers = {y.images}
        z = y
        while not z.is_identity():
            z = z * y
            powers.add(z.images)
        power_sets.append((y, powers))
    members = []
    for x in elems:
        if all(y.conjugate(x).images in powers for y, powers in power_sets):
            members.append(x)
    return span(p.degree, members)


def is_dedekind(p: PermGroup, caps: Caps = DEFAULT_CAPS) -> bool:
    return norm(p, caps).order() == p.order()


def norm_series(p: PermGroup, caps: Caps = DEFAULT_CAPS) -> SeriesResult:
    """Ascending series of iterated norms, lifted through quotients."""
    terms = [trivial_group(p.degree)]
    while True:
        prev = terms[-1]
        if prev.order() == p.order():
            break
        q = quotient_group(p, prev, caps)
        zq = norm(q.image, caps)
        nxt = PermGroup(
            p.degree, q.preimage_subgroup(zq, caps).gens, None
        )
        if nxt.order() == prev.order():
            break  # norm of the quotient is trivial; series has stalled
        terms.append(nxt)
    return SeriesResult("norm", terms, len(terms) - 1)


def norm_length(p: PermGroup, caps: Caps = DEFAULT_CAPS) -> int | None:
    s = norm_series(p, caps)
    if s.terms[-1].order() != p.order():
        return None
    return s.length


# p-group functors ---------------------------------------------------------

def frattini_p(p_grp: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Phi(P) = P' * <x^p> for a p-group P."""
    if not is_p_group(p_grp, p):
        raise ValueError("not a p-group for the given prime")
    dp = derived_subgroup(p_grp, caps)
    powers = (x**p for x in p_grp.elements(caps))
    return span(p_grp.degree, list(dp.gens) + list(powers))


def frattini_by_maximals(p_grp: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Phi(P) as the intersection of the maximal subgroups (oracle route)."""
    if not is_p_group(p_grp, p):
        raise ValueError("not a p-group for the given prime")
    if p_grp.is_trivial():
        return p_grp
    maximals = [
        h for h in all_subgroups(p_grp, caps) if h.order() == p_grp.order() // p
    ]
    result = p_grp
    for m in maximals:
        result = intersection(result, m, caps)
    return result


def omega(p_grp: PermGroup, p: int, i: int = 1, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Omega_i(P): generated by the elements of order dividing p^i."""
    if not is_p_group(p_grp, p):
        raise ValueError("not a p-group for the given prime")
    q = p**i
    return span(
        p_grp.degree, (x for x in p_grp.elements(caps) if (x**q).is_identity())
    )


# p-cores and p-residuals --------------------------------------------------

def _conjugacy_class_reps(g: PermGroup, caps: Caps) -> list[tuple[Perm, list[Perm]]]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for x in g.elements(caps):
        if x.images in seen:
            continue
        orbit = [x]
        seen.add(x.images)
        queue = [x]
        while queue:
            y = queue.pop(0)
            for s in g.gens:
                c = y.conjugate(s)
                if c.images not in seen:
                    seen.add(c.images)
                    orbit.append(c)
                    queue.append(c)
        out.append((x, orbit))
    return out


def o_p(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """O_p(G): the p-core, as the intersection of all Sylow p-subgroups."""
    from .sylow import all_sylow_subgroups, sylow_subgroup

    syl = sylow_subgroup(g, p, caps) if g.order() % p == 0 else None
    if syl is None:
        return trivial_group(g.degree)
    result = syl
    for q in all_sylow_subgroups(g, p, caps).members:
        result = intersection(result, q, caps)
        if result.is_trivial():
            break
    return result


def o_p_by_closure(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """O_p(G) as <x : the normal closure of x is a p-group> (oracle route)."""
    target = p_part(g.order(), p)
    good: list[Perm] = []
    for rep, orbit in _conjugacy_class_reps(g, caps):
        if rep.is_identity() or p_part(rep.order(), p) != rep.order():
            continue
        if _closure_is_pi_group(g, rep, lambda n: p_part(n, p) == n, target, caps):
            good.extend(orbit)
    return span(g.degree, good)


def _closure_is_pi_group(g, x, pred, max_order, caps) -> bool:
    current = PermGroup(g.degree, [x])
    while True:
        if not pred(current.order()) or current.order() > max_order:
            return False
        new = []
        for s in current.gens:
            for t in g.gens:
                c = s.conjugate(t)
                if not current.contains(c):
                    new.append(c)
        if not new:
            return True
        current = PermGroup(g.degree, list(current.gens) + new)


def o_p_prime(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """O_{p'}(G): generated by the x whose normal closure is a p'-group."""
    max_order = p_prime_part(g.order(), p)
    good: list[Perm] = []
    for rep, orbit in _conjugacy_class_reps(g, caps):
        if rep.is_identity() or rep.order() % p == 0:
            continue
        if _closure_is_pi_group(g, rep, lambda n: n % p != 0, max_order, caps):
            good.extend(orbit)
    return span(g.degree, good)


def o_upper_p(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """O^p(G): generated by all p'-elements (smallest normal subgroup with
    p-group quotient)."""
    return span(g.degree, (x for x in g.elements(caps) if x.order() % p != 0))


def a_p(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """A^p(G) = G' * O^p(G): smallest normal subgroup with abelian p-group
    quotient."""
    return join(derived_subgroup(g, caps), o_upper_p(g, p, caps))


def is_p_nilpotent(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """True iff the p'-elements form a (normal Hall p') subgroup."""
    k = o_upper_p(g, p, caps)
    return k.order() == p_prime_part(g.order(), p)


# upper p-series -----------------------------------------------------------

def p_series(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> SeriesResult:
    """1 <= O_{p'} <= O_{p',p} <= ... ; factors alternate p' and p.

    Terms are subgroups of g (preimages under the successive quotients).
    The series stops when it reaches g or stalls.
    """
    terms = [trivial_group(g.degree)]
    factors: list[str] = []
    current = terms[0]
    want_p = False
    stalled_once = False
    while current.order() < g.order():
        q = quotient_group(g, current, caps)
        nxt_img = (
            o_p(q.image, p, caps) if want_p else o_p_prime(q.image, p, caps)
        )
        if nxt_img.is_trivial():
            if stalled_once:
                break
            stalled_once = True
            want_p = not want_p
            continue
        stalled_once = False
        current = PermGroup(g.degree, q.preimage_subgroup(nxt_img, caps).gens)
        terms.append(current)
        factors.append("p" if want_p else "p'")
        want_p = not want_p
    result = SeriesResult("p_series", terms, len(terms) - 1)
    result.factors = factors  # type: ignore[attr-defined]
    return result


def is_p_solvable(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> bool:
    return p_series(g, p, caps).terms[-1].order() == g.order()


def p_length(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> int | None:
    s = p_series(g, p, caps)
    if s.terms[-1].order() != g.order():
        return None
    return s.factors.count("p")


def p_prime_length(g: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> int | None:
    """Count of p'-factors strictly between the first and last p-factors."""
    s = p_series(g, p, caps)
    if s.terms[-1].order() != g.order():
        return None
    factors = s.factors
    if "p" not in factors:
        return 0
    first = factors.index("p")
    last = len(factors) - 1 - factors[::-1].index("p")
    return factors[first:last].count("p'")


# commutator predicates ----------------------------------------------------

def iterated_commutator(u: Perm, g: Perm, k: int) -> Perm:
    """[u, g, ..., g]_k: c_1 = [u,g]; c_{i+1} = [c_i, g]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = commutator(u, g)
    for _ in range(k - 1):
        c = commutator(c, g)
    return c


def lemma_condition_iterated_commutator(
    p_grp: PermGroup, z: PermGroup, p: int, caps: Caps = DEFAULT_CAPS
) -> bool:
    """[Z, g, ..., g]_{p-1} <= Phi(Z) for all g in P, all starting z in Z."""
    phi_z = frattini_p(z, p, caps) if not z.is_trivial() else z
    for zz in z.elements(caps):
        for g in p_grp.elements(caps):
            if not phi_z.contains(iterated_commutator(zz, g, p - 1)):
                return False
    return True


def is_pi_central_of_height(
    p_grp: PermGroup,
    p: int,
    i: int,
    k: int,
    order_divides: bool = False,
    caps: Caps = DEFAULT_CAPS,
) -> bool:
    """Every element of order p^i (or dividing p^i, with the flag) lies in
    the k-th center."""
    if not is_p_group(p_grp, p):
        raise ValueError("not a p-group for the given prime")
    zk = z_k(p_grp, k, caps)
    target = p**i
    for x in p_grp.elements(caps):
        n = x.order()
        hit = (n != 1 and target % n == 0) if order_divides else n == target
        if hit and not zk.contains(x):
            return False
    return True
