"""Pretransfer and transfer maps, their congruences, focal subgroups,
and the control-of-p-transfer machinery.

Conventions match the rest of the library: right cosets Ht, the dot
action t.g = representative of Htg, and left-to-right composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .group import (
    PermGroup,
    Transversal,
    conjugate_subgroup,
    derived_subgroup,
    double_coset_reps,
    intersection,
    quotient_group,
    right_transversal,
)
from .iso import abelian_invariants, all_subgroups
from .perm import Perm
from .series import a_p, o_upper_p, p_part
from .sylow import sylow_subgroup


def pretransfer(g: PermGroup, h: PermGroup, trans: Transversal, x: Perm) -> Perm:
    """V(x) = product over t in the transversal of t * x * (t.x)^-1.

    Each factor lies in H, so the product does; the factor order is the
    transversal's list order.
    """
    result = Perm.identity(g.degree)
    for t in trans.reps:
        result = result * (t * x * trans.dot(t, x).inverse())
    assert h.contains(result)
    return result


@dataclass
class TransferResult:
    """A transfer value: an element of H read modulo H'."""

    target: PermGroup  # H
    modulus: PermGroup  # H'
    value: Perm

    def same_as(self, other: "TransferResult") -> bool:
        return self.modulus.contains(self.value * other.value.inverse())

    def is_trivial(self) -> bool:
        return self.modulus.contains(self.value)


def transfer(g: PermGroup, h: PermGroup, x: Perm, caps: Caps = DEFAULT_CAPS) -> TransferResult:
    """The transfer value of x, using the canonical transversal."""
    trans = right_transversal(g, h, caps)
    value = pretransfer(g, h, trans, x)
    return TransferResult(h, derived_subgroup(h, caps), value)


def shuffled_transversal(g: PermGroup, h: PermGroup, rng, caps: Caps = DEFAULT_CAPS) -> Transversal:
    """A transversal with randomized representatives in randomized order.

    Each canonical rep is replaced by a random element of its coset.
    Used to exercise transversal independence of the transfer.
    """
    trans = right_transversal(g, h, caps)
    reps = [h.random_element(rng) * t for t in trans.reps]
    rng.shuffle(reps)
    return Transversal(g, h, reps)


def check_transitivity(
    g: PermGroup, k: PermGroup, h: PermGroup, x: Perm, caps: Caps = DEFAULT_CAPS
) -> bool:
    """For H <= K <= G: V(x) == W(U(x)) mod H', with V: G -> H,
    U: G -> K, W: K -> H."""
    if not (h.is_subgroup_of(k) and k.is_subgroup_of(g)):
        raise ValueError("need H <= K <= G")
    t_gh = right_transversal(g, h, caps)
    t_gk = right_transversal(g, k, caps)
    t_kh = right_transversal(k, h, caps)
    v = pretransfer(g, h, t_gh, x)
    u = pretransfer(g, k, t_gk, x)
    w = pretransfer(k, h, t_kh, u)
    return derived_subgroup(h, caps).contains(v * w.inverse())


def check_mackey(
    g: PermGroup, h: PermGroup, k: PermGroup, elem: Perm, caps: Caps = DEFAULT_CAPS
) -> bool:
    """For k in K: V(k) == prod over (H, K) double-coset reps x of
    x * W_x(k) * x^-1 mod H', with W_x: K -> K cap H^x."""
    if not k.contains(elem):
        raise ValueError("element must lie in K")
    t_gh = right_transversal(g, h, caps)
    v = pretransfer(g, h, t_gh, elem)
    product = Perm.identity(g.degree)
    for x in double_coset_reps(g, h, k, caps):
        target = intersection(k, conjugate_subgroup(h, x), caps)
        t_x = right_transversal(k, target, caps)
        w = pretransfer(k, target, t_x, elem)
        product = product * (x * w * x.inverse())
    return derived_subgroup(h, caps).contains(v * product.inverse())


def transfer_evaluation(
    p_grp: PermGroup, r: PermGroup, u: Perm, caps: Caps = DEFAULT_CAPS
) -> list[tuple[Perm, int]]:
    """Evaluate the pretransfer P -> R at u by <u>-orbits on cosets.

    Returns orbit representatives s with orbit lengths n_s; the factor
    of each orbit collapses to s * u^n_s * s^-1, which lies in R, and
    the full product agrees with the pretransfer mod R'.
    """
    trans = right_transversal(p_grp, r, caps)
    index_of = {t.images: i for i, t in enumerate(trans.reps)}
    unseen = set(range(len(trans.reps)))
    out: list[tuple[Perm, int]] = []
    while unseen:
        start = min(unseen)
        s = trans.reps[start]
        length = 0
        t = s
        while True:
            unseen.discard(index_of[t.images])
            length += 1
            t = trans.dot(t, u)
            if t == s:
                break
        out.append((s, length))
    assert sum(n for _, n in out) == len(trans.reps)
    product = Perm.identity(p_grp.degree)
    for s, n in out:
        factor = s * u**n * s.inverse()
        assert r.contains(factor)
        product = product * factor
    direct = pretransfer(p_grp, r, trans, u)
    assert derived_subgroup(r, caps).contains(product * direct.inverse())
    return out


def focal_subgroup(g: PermGroup, p_syl: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """P cap G', the focal subgroup of P in G."""
    return intersection(p_syl, derived_subgroup(g, caps), caps)


@dataclass
class ControlReport:
    g: PermGroup
    n: PermGroup
    prime: int
    focal_g: PermGroup  # P cap G'
    focal_n: PermGroup  # P cap N'
    controls: bool
    quotient_invariants_g: tuple[int, ...]  # of G / A^p(G)
    quotient_invariants_n: tuple[int, ...]  # of N / A^p(N)


def _ap_quotient_invariants(g: PermGroup, p: int, caps: Caps) -> tuple[int, ...]:
    return abelian_invariants(quotient_group(g, a_p(g, p, caps), caps).image, caps)


def controls_p_transfer(
    g: PermGroup,
    n: PermGroup,
    p: int,
    caps: Caps = DEFAULT_CAPS,
    g_cache: dict | None = None,
) -> ControlReport:
    """Does N control p-transfer in G?

    Primary test: focal equality P cap G' = P cap N' for a Sylow
    p-subgroup P of N (which must be Sylow in G).  Cross-checked
    against the abelian invariants of G/A^p(G) and N/A^p(N).

    g_cache, when given, memoizes the N-independent data (G' and the
    invariants of G/A^p(G)) across calls with the same G.
    """
    if (g.order() // n.order()) % p == 0:
        raise ValueError("index of N in G must be prime to p")
    p_syl = sylow_subgroup(n, p, caps)
    if p_syl.order() != p_part(g.order(), p):
        raise ValueError("Sylow subgroup of N is not Sylow in G")
    cache = g_cache if g_cache is not None else {}
    if "derived" not in cache:
        cache["derived"] = derived_subgroup(g, caps)
    if "ap_invariants" not in cache:
        cache["ap_invariants"] = _ap_quotient_invariants(g, p, caps)
    focal_g = intersection(p_syl, cache["derived"], caps)
    if n.order() == g.order():
        focal_n, inv_n = focal_g, cache["ap_invariants"]
    else:
        focal_n = intersection(p_syl, derived_subgroup(n, caps), caps)
        inv_n = _ap_quotient_invariants(n, p, caps)
    controls = focal_g.same_group_as(focal_n)
    inv_g = cache["ap_invariants"]
    assert controls == (inv_g == inv_n), "focal test and quotient test disagree"
    return ControlReport(g, n, p, focal_g, focal_n, controls, inv_g, inv_n)


@dataclass
class NonControlWitness:
    """The data promised when N fails to control p-transfer.

    M is normal of index p in N with all transfer values inside it;
    for each u in (a Sylow P) outside M there is a nonidentity
    double-coset rep x where the pretransfer P -> P cap N^x sends u
    outside P cap M^x, with |P cap N^x : P cap M^x| = p.
    """

    m: PermGroup
    double_coset_reps: list[Perm]
    per_u: list[tuple[Perm, Perm, PermGroup, PermGroup]]  # (u, x, R, Q)


def lemma23_witness(
    g: PermGroup, n: PermGroup, p: int, caps: Caps = DEFAULT_CAPS
) -> NonControlWitness | str:
    """Extract the full non-control witness structure, or "controls"."""
    report = controls_p_transfer(g, n, p, caps)
    if report.controls:
        return "controls"
    p_syl = sylow_subgroup(n, p, caps)
    # Candidate M: preimages of the index-p subgroups of the abelian
    # p-group N / A^p(N).
    apn = a_p(n, p, caps)
    quot = quotient_group(n, apn, caps)
    n_trans = right_transversal(g, n, caps)
    gen_values = [pretransfer(g, n, n_trans, x) for x in g.gens]
    m: PermGroup | None = None
    for sub in all_subgroups(quot.image, caps):
        if sub.order() * p != quot.image.order():
            continue
        candidate = quot.preimage_subgroup(sub, caps)
        if all(candidate.contains(v) for v in gen_values):
            m = candidate
            break
    if m is None:
        raise AssertionError("no index-p subgroup of N captures the transfer image")
    assert m.is_normal_in(n)
    reps = double_coset_reps(g, n, p_syl, caps)
    per_u = []
    for u in p_syl.elements(caps):
        if m.contains(u):
            continue
        hit = None
        for x in reps[1:]:
            r = intersection(p_syl, conjugate_subgroup(n, x), caps)
            q = intersection(p_syl, conjugate_subgroup(m, x), caps)
            t_r = right_transversal(p_syl, r, caps)
            w = pretransfer(p_syl, r, t_r, u)
            if not q.contains(w):
                assert r.order() < p_syl.order()
                assert r.order() == q.order() * p
                hit = (u, x, r, q)
                break
        assert hit is not None, "no double-coset rep witnesses the failure"
        per_u.append(hit)
    return NonControlWitness(m, reps, per_u)


def tate_agreement(g: PermGroup, n: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Do the A^p-quotient and O^p-quotient formulations of control agree?"""
    from .iso import is_isomorphic

    report = controls_p_transfer(g, n, p, caps)
    abelian_side = report.quotient_invariants_g == report.quotient_invariants_n
    qg = quotient_group(g, o_upper_p(g, p, caps), caps).image
    qn = quotient_group(n, o_upper_p(n, p, caps), caps).image
    full_side = is_isomorphic(qg, qn, caps)[0]
    return abelian_side == full_side
