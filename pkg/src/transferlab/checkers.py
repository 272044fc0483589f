"""The theorem harness: one checker per stated result.

Each checker evaluates its hypothesis and, only when the hypothesis
holds, its conclusion; verdicts are implication_ok, vacuous, VIOLATION,
or skipped:cap when a resource cap interrupts the evaluation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .caps import DEFAULT_CAPS, CapExceeded, Caps
from .group import (
    PermGroup,
    intersection,
    is_maximal,
    normalizer,
    quotient_group,
)
from .iso import all_subgroups, is_isomorphic
from .perm import Perm
from .series import (
    center,
    frattini_p,
    is_p_group,
    is_p_nilpotent,
    is_p_solvable,
    is_pi_central_of_height,
    is_solvable,
    lemma_condition_iterated_commutator,
    nilpotency_class,
    norm,
    norm_length,
    o_p,
    omega,
    p_length,
    p_prime_length,
    z_k,
)
from .sylow import (
    all_sylow_subgroups,
    max_intersection_order,
    is_weakly_closed,
    characteristic_subgroups_above,
    sylow_subgroup,
    tame_intersections_between,
)
from .transfer import controls_p_transfer, lemma23_witness


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Context:
    """Per-(group, prime) cache shared by the checkers."""

    def __init__(self, group: PermGroup, prime: int, caps: Caps = DEFAULT_CAPS):
        self.group = group
        self.prime = prime
        self.caps = caps
        self._cache: dict = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def family(self):
        return self._get(
            "family", lambda: all_sylow_subgroups(self.group, self.prime, self.caps)
        )

    @property
    def p_syl(self) -> PermGroup:
        return self.family.base_member

    @property
    def ngp(self) -> PermGroup:
        return self._get("ngp", lambda: normalizer(self.group, self.p_syl, self.caps))

    @property
    def z_lower(self) -> PermGroup:
        """Z_{p-1}(P)."""
        return self._get("z_lower", lambda: z_k(self.p_syl, self.prime - 1, self.caps))

    @property
    def norm_p(self) -> PermGroup:
        """Z*(P), the norm of P."""
        return self._get("norm_p", lambda: norm(self.p_syl, self.caps))

    @property
    def max_intersection(self) -> int:
        return self._get(
            "max_int",
            lambda: max_intersection_order(self.group, self.prime, self.caps, self.family),
        )

    def control(self, n: PermGroup):
        key = ("control", n.subgroup_key(self.caps))
        g_cache = self._get("g_cache", dict)
        return self._get(
            key,
            lambda: controls_p_transfer(self.group, n, self.prime, self.caps, g_cache),
        )

    def controls_ngp(self) -> bool:
        return self.control(self.ngp).controls

    def tame(self, lower: PermGroup, strict_upper: bool, strict_lower: bool):
        key = ("tame", lower.subgroup_key(self.caps), strict_upper, strict_lower)

        def build():
            records = tame_intersections_between(
                self.group,
                self.prime,
                lower,
                strict_upper,
                self.caps,
                self.family,
                strict_lower=strict_lower,
            )
            for rec in records:
                # A p-nilpotent normalizer always forces N/C to be a
                # p-group (the normal p'-part centralizes D).
                if rec.normalizer_p_nilpotent:
                    assert rec.n_over_c_is_p_group
            return records

        return self._get(key, build)


@dataclass
class CheckerVerdict:
    checker_id: str
    group_label: str
    prime: int
    hypothesis_holds: bool | None
    conclusion_holds: bool | None
    verdict: str  # implication_ok | vacuous | VIOLATION | skipped:cap
    witnesses: dict = field(default_factory=dict)
    interpretation_notes: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "checker_id": self.checker_id,
                "group_label": self.group_label,
                "prime": self.prime,
                "hypothesis_holds": self.hypothesis_holds,
                "conclusion_holds": self.conclusion_holds,
                "verdict": self.verdict,
                "witnesses": {k: str(v) for k, v in sorted(self.witnesses.items())},
                "interpretation_notes": self.interpretation_notes,
            },
            sort_keys=True,
        )


def _sub_label(h: PermGroup) -> str:
    return f"order {h.order()}"


# individual checkers --------------------------------------------------------
# Each returns (hypothesis, conclusion-or-None, witnesses, notes); the
# conclusion is evaluated only when the hypothesis holds.


def _is_abelian(g: PermGroup) -> bool:
    return all(a * b == b * a for a in g.gens for b in g.gens)


def _chk_burnside(ctx: Context, params: dict):
    hyp = _is_abelian(ctx.p_syl)
    wit = {"sylow": _sub_label(ctx.p_syl)}
    if not hyp:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_hall_wielandt(ctx: Context, params: dict):
    cls = nilpotency_class(ctx.p_syl, ctx.caps)
    wit = {"class": cls}
    if not cls < ctx.prime:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _has_wreath_quotient(p_syl: PermGroup, p: int, caps: Caps) -> bool:
    from .catalog import wreath_cyclic

    target = p ** (p + 1)
    if p_syl.order() % target:
        return False
    wreath = wreath_cyclic(p)
    for n in all_subgroups(p_syl, caps):
        if n.order() * target != p_syl.order():
            continue
        if not n.is_normal_in(p_syl):
            continue
        quot = quotient_group(p_syl, n, caps).image
        if is_isomorphic(quot, wreath, caps)[0]:
            return True
    return False


def _chk_yoshida(ctx: Context, params: dict):
    has_quot = _has_wreath_quotient(ctx.p_syl, ctx.prime, ctx.caps)
    wit = {"has_wreath_quotient": has_quot}
    if has_quot:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _tame_hypothesis(ctx: Context, lower, strict_upper, strict_lower, weak: bool):
    records = ctx.tame(lower, strict_upper, strict_lower)
    failing = None
    for rec in records:
        ok = rec.n_over_c_is_p_group if weak else rec.normalizer_p_nilpotent
        if not ok:
            failing = rec
            break
    wit = {"tame_count": len(records), "lower": _sub_label(lower)}
    if failing is not None:
        wit["failing_intersection"] = _sub_label(failing.d)
        wit["failing_normalizer"] = _sub_label(failing.normalizer)
    return failing is None, wit


def _chk_main_1_3(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.z_lower, True, True, weak=False)
    if not hyp:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_main_1_3_weak(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.z_lower, True, True, weak=True)
    notes = "weakened hypothesis: N/C a p-group instead of p-nilpotent N"
    if not hyp:
        return False, None, wit, notes
    return True, ctx.controls_ngp(), wit, notes


def _chk_cor_1_5(ctx: Context, params: dict):
    bound = ctx.z_lower.order()
    wit = {"max_intersection": ctx.max_intersection, "bound": bound}
    if ctx.max_intersection > bound:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_cor_1_6(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.z_lower, False, False, weak=False)
    notes = (
        "lower bound read inclusively (Z_{p-1}(P) <= D, including D = P); "
        "the strict reading admits abelian-Sylow counterexamples"
    )
    if not hyp:
        return False, None, wit, notes
    return True, is_p_nilpotent(ctx.group, ctx.prime, ctx.caps), wit, notes


def _chk_thm_1_8(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.norm_p, True, True, weak=False)
    if not hyp:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_thm_1_8_weak(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.norm_p, True, True, weak=True)
    notes = "weakened hypothesis: N/C a p-group instead of p-nilpotent N"
    if not hyp:
        return False, None, wit, notes
    return True, ctx.controls_ngp(), wit, notes


def _chk_cor_1_9(ctx: Context, params: dict):
    hyp, wit = _tame_hypothesis(ctx, ctx.norm_p, False, False, weak=False)
    notes = "lower bound read inclusively, as for the Z_{p-1} variant"
    if not hyp:
        return False, None, wit, notes
    return True, is_p_nilpotent(ctx.group, ctx.prime, ctx.caps), wit, notes


def _chk_thm_1_10(ctx: Context, params: dict):
    admissible = []
    for k_sub in all_subgroups(ctx.norm_p, ctx.caps):
        closed, _ = is_weakly_closed(ctx.group, ctx.p_syl, k_sub, ctx.caps)
        if closed:
            admissible.append(k_sub)
    wit = {"weakly_closed_count": len(admissible), "norm_order": ctx.norm_p.order()}
    if not admissible:
        return False, None, wit, ""
    failing = None
    for k_sub in admissible:
        n_k = normalizer(ctx.group, k_sub, ctx.caps)
        if not ctx.control(n_k).controls:
            failing = k_sub
            break
    if failing is not None:
        wit["failing_K"] = _sub_label(failing)
    return True, failing is None, wit, ""


def _chk_cor_1_11(ctx: Context, params: dict):
    bound = ctx.norm_p.order()
    wit = {"max_intersection": ctx.max_intersection, "bound": bound}
    if ctx.max_intersection > bound:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_prop_3_4(ctx: Context, params: dict):
    chars = characteristic_subgroups_above(ctx.p_syl, ctx.z_lower, ctx.caps)
    not_closed = None
    for c in chars:
        closed, conj = is_weakly_closed(ctx.group, ctx.p_syl, c, ctx.caps)
        if not closed:
            not_closed = (c, conj)
            break
    wit = {"characteristic_count": len(chars)}
    if not_closed is not None:
        wit["not_weakly_closed"] = _sub_label(not_closed[0])
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_aux_gruen_instance(ctx: Context, params: dict):
    z = ctx.z_lower
    closed, conj = is_weakly_closed(ctx.group, ctx.p_syl, z, ctx.caps)
    wit = {"Z": _sub_label(z), "weakly_closed": closed}
    if not closed:
        wit["conjugator"] = conj
        return False, None, wit, ""
    n_z = normalizer(ctx.group, z, ctx.caps)
    return True, ctx.control(n_z).controls, wit, ""


def _normal_p_subgroup_candidates(ctx: Context, params: dict) -> list[PermGroup]:
    op = o_p(ctx.group, ctx.prime, ctx.caps)
    candidates = [op]
    if not op.is_trivial():
        candidates.append(omega(op, ctx.prime, 1, ctx.caps))
        candidates.append(intersection(center(ctx.p_syl, ctx.caps), op, ctx.caps))
    if "z_subgroup" in params:
        candidates.append(params["z_subgroup"])
    out = []
    seen = set()
    for z in candidates:
        key = z.subgroup_key(ctx.caps)
        if key in seen:
            continue
        seen.add(key)
        if z.is_subgroup_of(ctx.p_syl) and z.is_normal_in(ctx.group):
            out.append(z)
    return out


def _quotient_controls(ctx: Context, n: PermGroup, z: PermGroup) -> bool:
    """Does N/Z control p-transfer in G/Z?"""
    if z.is_trivial():
        # Avoid the regular-representation quotient.
        return ctx.control(n).controls
    quot = quotient_group(ctx.group, z, ctx.caps)
    if quot.image.order() % ctx.prime:
        return True
    n_bar = quot.project_subgroup(n)
    return controls_p_transfer(quot.image, n_bar, ctx.prime, ctx.caps).controls


def _chk_lemma_3_1(ctx: Context, params: dict):
    n = ctx.ngp
    qualifying = []
    for z in _normal_p_subgroup_candidates(ctx, params):
        if not _quotient_controls(ctx, n, z):
            continue
        cond_a = lemma_condition_iterated_commutator(ctx.p_syl, z, ctx.prime, ctx.caps)
        cond_b = z.is_subgroup_of(frattini_p(ctx.p_syl, ctx.prime, ctx.caps))
        if cond_a or cond_b:
            qualifying.append((z, "a" if cond_a else "b"))
    wit = {"qualifying_Z": [f"{_sub_label(z)} via ({c})" for z, c in qualifying]}
    if not qualifying:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_lemma_3_2(ctx: Context, params: dict):
    n = ctx.ngp
    if ctx.controls_ngp():
        return False, None, {"controls": True}, ""
    qualifying = [
        z
        for z in _normal_p_subgroup_candidates(ctx, params)
        if _quotient_controls(ctx, n, z)
    ]
    wit = {"qualifying_Z": [_sub_label(z) for z in qualifying]}
    if not qualifying:
        return False, None, wit, ""
    witness = lemma23_witness(ctx.group, n, ctx.prime, ctx.caps)
    assert witness != "controls"
    covered = {u.images for u, _, _, _ in witness.per_u}
    ok = True
    for z in qualifying:
        outside = [u for u in z.elements(ctx.caps) if not witness.m.contains(u)]
        if not outside or any(u.images not in covered for u in outside):
            ok = False
            wit["failing_Z"] = _sub_label(z)
            break
    wit["M"] = _sub_label(witness.m)
    return True, ok, wit, ""


def _chk_thm_4_1(ctx: Context, params: dict):
    bound = ctx.prime ** (ctx.prime - 1)
    wit = {"max_intersection": ctx.max_intersection, "bound": bound}
    if ctx.max_intersection > bound:
        return False, None, wit, ""
    return True, ctx.controls_ngp(), wit, ""


def _chk_thm_4_2(ctx: Context, params: dict):
    cls = nilpotency_class(ctx.p_syl, ctx.caps)
    ngp = ctx.ngp
    hyp = (
        cls == ctx.prime
        and ngp.order() < ctx.group.order()
        and is_p_nilpotent(ngp, ctx.prime, ctx.caps)
        and is_maximal(ctx.group, ngp, ctx.caps)
    )
    wit = {"class": cls, "normalizer": _sub_label(ngp)}
    notes = "conclusion 'length 1' has p-length and p'-length readings; both recorded"
    if not hyp:
        return False, None, wit, notes
    solvable = is_p_solvable(ctx.group, ctx.prime, ctx.caps)
    plen = p_length(ctx.group, ctx.prime, ctx.caps)
    pplen = p_prime_length(ctx.group, ctx.prime, ctx.caps)
    wit.update({"p_solvable": solvable, "p_length": plen, "p_prime_length": pplen})
    strict_ok = solvable and plen == 1
    default_ok = solvable and pplen is not None and pplen <= 1
    wit["strict_reading_ok"] = strict_ok
    wit["p_prime_reading_ok"] = default_ok
    if params.get("reading") == "strict":
        return True, strict_ok, wit, notes + "; strict reading selected"
    return True, default_ok, wit, notes


def _chk_thm_4_3(ctx: Context, params: dict):
    cls = nilpotency_class(ctx.p_syl, ctx.caps)
    count = len(ctx.family)
    wit = {"class": cls, "sylow_count": count}
    if not (cls == ctx.prime and count == ctx.prime + 1):
        return False, None, wit, ""
    if ctx.controls_ngp():
        wit["branch"] = "controls"
        return True, True, wit, ""
    op = o_p(ctx.group, ctx.prime, ctx.caps)
    wit["branch"] = f"O_p of order {op.order()}"
    return True, not op.is_trivial(), wit, ""


def _nilpotent_maximal_candidates(ctx: Context, params: dict) -> list[PermGroup]:
    g = ctx.group
    out = []
    seen = set()
    for q in _prime_divisors(g.order()):
        m = normalizer(g, sylow_subgroup(g, q, ctx.caps), ctx.caps)
        key = m.subgroup_key(ctx.caps)
        if key in seen:
            continue
        seen.add(key)
        if m.order() == g.order():
            continue
        from .series import is_nilpotent

        if is_nilpotent(m, ctx.caps) and is_maximal(g, m, ctx.caps):
            out.append(m)
    return out


def _sylow2_of(m: PermGroup, ctx: Context) -> PermGroup | None:
    if m.order() % 2:
        return None
    return sylow_subgroup(m, 2, ctx.caps)


def _chk_thm_4_4_janko(ctx: Context, params: dict):
    candidates = _nilpotent_maximal_candidates(ctx, params)
    hit = None
    for m in candidates:
        s2 = _sylow2_of(m, ctx)
        cls = 0 if s2 is None else nilpotency_class(s2, ctx.caps)
        if cls <= 2:
            hit = (m, cls)
            break
    wit = {"nilpotent_maximal_count": len(candidates)}
    if hit is None:
        return False, None, wit, ""
    wit["M"] = _sub_label(hit[0])
    wit["sylow2_class"] = hit[1]
    return True, is_solvable(ctx.group, ctx.caps), wit, ""


def _chk_thm_4_5(ctx: Context, params: dict):
    candidates = _nilpotent_maximal_candidates(ctx, params)
    hit = None
    for m in candidates:
        s2 = _sylow2_of(m, ctx)
        length = 0 if s2 is None else norm_length(s2, ctx.caps)
        if length is not None and length <= 2:
            hit = (m, length)
            break
    wit = {"nilpotent_maximal_count": len(candidates)}
    if hit is None:
        return False, None, wit, ""
    wit["M"] = _sub_label(hit[0])
    wit["sylow2_norm_length"] = hit[1]
    return True, is_solvable(ctx.group, ctx.caps), wit, ""


def _chk_thm_4_8(ctx: Context, params: dict):
    p = ctx.prime
    v1 = is_pi_central_of_height(ctx.p_syl, p, 1, p - 2, caps=ctx.caps)
    v2 = is_pi_central_of_height(ctx.p_syl, p, 2, p - 1, caps=ctx.caps)
    d1 = is_pi_central_of_height(ctx.p_syl, p, 1, p - 2, order_divides=True, caps=ctx.caps)
    d2 = is_pi_central_of_height(ctx.p_syl, p, 2, p - 1, order_divides=True, caps=ctx.caps)
    wit = {
        "p_central_height_p-2": v1,
        "p2_central_height_p-1": v2,
        "order_divides_variants": (d1, d2),
    }
    notes = "strict element-order reading; order-dividing variant recorded in witnesses"
    if not (v1 or v2):
        return False, None, wit, notes
    return True, ctx.controls_ngp(), wit, notes


def _chk_thm_4_10(ctx: Context, params: dict):
    g, p = ctx.group, ctx.prime
    v1 = p >= 3 and is_pi_central_of_height(g, p, 1, p - 2, caps=ctx.caps)
    v2 = is_pi_central_of_height(g, p, 2, p - 1, caps=ctx.caps)
    wit = {"p_central_height_p-2": v1, "p2_central_height_p-1": v2}
    if not (v1 or v2):
        return False, None, wit, ""
    quot = quotient_group(g, omega(g, p, 1, ctx.caps), ctx.caps).image
    ok = True
    if quot.order() > 1:
        if v1 and not is_pi_central_of_height(quot, p, 1, p - 2, caps=ctx.caps):
            ok = False
        if v2 and not is_pi_central_of_height(quot, p, 2, p - 1, caps=ctx.caps):
            ok = False
    wit["quotient_order"] = quot.order()
    return True, ok, wit, ""


@dataclass
class CheckerSpec:
    id: str
    description: str
    run: object  # callable(Context, params) -> (hyp, concl, witnesses, notes)
    applies: object  # callable(PermGroup, prime, caps) -> bool


def _divides(g: PermGroup, p: int, caps: Caps) -> bool:
    return g.order() % p == 0


CHECKERS: dict[str, CheckerSpec] = {}


def _register(id_: str, description: str, run, applies=_divides) -> None:
    CHECKERS[id_] = CheckerSpec(id_, description, run, applies)


_register("burnside", "abelian Sylow implies N_G(P) controls p-transfer", _chk_burnside)
_register("hall_wielandt", "class(P) < p implies control", _chk_hall_wielandt)
_register("yoshida", "no Z_p wr Z_p quotient of P implies control", _chk_yoshida)
_register(
    "main_1_3",
    "p-nilpotent normalizers of tame intersections strictly between "
    "Z_{p-1}(P) and P imply control",
    _chk_main_1_3,
)
_register(
    "main_1_3_weak", "same with N/C a p-group in the hypothesis", _chk_main_1_3_weak
)
_register("cor_1_5", "all |P cap Q| <= |Z_{p-1}(P)| implies control", _chk_cor_1_5)
_register(
    "cor_1_6",
    "p-nilpotent normalizers of tame intersections above Z_{p-1}(P) "
    "imply G is p-nilpotent",
    _chk_cor_1_6,
)
_register("thm_1_8", "the Z*(P) version of the tame-intersection theorem", _chk_thm_1_8)
_register("thm_1_8_weak", "Z*(P) version with the N/C hypothesis", _chk_thm_1_8_weak)
_register("cor_1_9", "Z*(P) version of the p-nilpotency corollary", _chk_cor_1_9)
_register(
    "thm_1_10",
    "weakly closed K <= Z*(P) implies N_G(K) controls p-transfer",
    _chk_thm_1_10,
)
_register("cor_1_11", "all |P cap Q| <= |Z*(P)| implies control", _chk_cor_1_11)
_register(
    "prop_3_4",
    "all characteristic subgroups above Z_{p-1}(P) weakly closed implies control",
    _chk_prop_3_4,
)
_register(
    "aux_gruen_instance",
    "Z_{p-1}(P) weakly closed implies N_G(Z_{p-1}(P)) controls",
    _chk_aux_gruen_instance,
)
_register(
    "lemma_3_1",
    "quotient control plus the iterated-commutator or Frattini condition "
    "lifts control along G/Z",
    _chk_lemma_3_1,
)
_register(
    "lemma_3_2",
    "non-control with controlling quotient forces Z outside the index-p witness M",
    _chk_lemma_3_2,
)
_register("thm_4_1", "max Sylow intersection <= p^{p-1} implies control", _chk_thm_4_1)
_register(
    "thm_4_2",
    "class-p Sylow with p-nilpotent maximal normalizer implies p-solvable of length 1",
    _chk_thm_4_2,
)
_register(
    "thm_4_3",
    "class-p Sylow with p+1 Sylows implies control or nontrivial O_p",
    _chk_thm_4_3,
)
_register(
    "thm_4_4_janko",
    "nilpotent maximal subgroup with class <= 2 Sylow-2 implies solvable",
    _chk_thm_4_4_janko,
    applies=lambda g, p, caps: p == 2,
)
_register(
    "thm_4_5",
    "nilpotent maximal subgroup with norm length <= 2 Sylow-2 implies solvable",
    _chk_thm_4_5,
    applies=lambda g, p, caps: p == 2,
)
_register(
    "thm_4_8",
    "p-central of height p-2 or p^2-central of height p-1 implies control (p odd)",
    _chk_thm_4_8,
    applies=lambda g, p, caps: p > 2 and g.order() % p == 0,
)
_register(
    "thm_4_10_property",
    "the centrality property passes to the quotient by Omega (p-groups)",
    _chk_thm_4_10,
    applies=lambda g, p, caps: g.order() > 1 and is_p_group(g, p),
)


def run_checker(
    checker_id: str,
    group: PermGroup,
    prime: int,
    params: dict | None = None,
    caps: Caps = DEFAULT_CAPS,
    ctx: Context | None = None,
) -> CheckerVerdict:
    if checker_id not in CHECKERS:
        raise ValueError(f"unknown checker: {checker_id}")
    spec = CHECKERS[checker_id]
    label = group.name or f"group(deg {group.degree})"
    if ctx is None:
        ctx = Context(group, prime, caps)
    try:
        hyp, concl, witnesses, notes = spec.run(ctx, params or {})
    except CapExceeded as exc:
        return CheckerVerdict(
            checker_id, label, prime, None, None, "skipped:cap", {"cap": str(exc)}, ""
        )
    if not hyp:
        verdict = "vacuous"
    elif concl:
        verdict = "implication_ok"
    else:
        verdict = "VIOLATION"
    return CheckerVerdict(checker_id, label, prime, hyp, concl, verdict, witnesses, notes)


@dataclass
class TheoremReport:
    corpus_description: str
    verdicts: list[CheckerVerdict]
    summary: dict
    violations: list[CheckerVerdict]
    interpretation_discrepancies: list[CheckerVerdict]

    def record_lines(self) -> list[str]:
        return [v.to_json() for v in self.verdicts]


def scan_corpus(
    entries,
    checker_ids: list[str] | None = None,
    params: dict | None = None,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
) -> TheoremReport:
    """Run every applicable checker over every (group, prime) pair."""
    ids = sorted(checker_ids or CHECKERS.keys())
    for checker_id in ids:
        if checker_id not in CHECKERS:
            raise ValueError(f"unknown checker: {checker_id}")
    params = params or {}
    tasks = []
    for entry in entries:
        group = entry.build()
        for p in _prime_divisors(group.order()):
            tasks.append((group, p))

    def run_pair(group, p):
        ctx = Context(group, p, caps)
        out = []
        for checker_id in ids:
            spec = CHECKERS[checker_id]
            if not spec.applies(group, p, caps):
                continue
            out.append(run_checker(checker_id, group, p, params, caps, ctx))
        return out

    verdicts: list[CheckerVerdict] = []
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(lambda t: run_pair(*t), tasks):
                verdicts.extend(batch)
    else:
        for group, p in tasks:
            verdicts.extend(run_pair(group, p))

    corrupt = params.get("corrupt_checker")
    if corrupt:
        for v in verdicts:
            if v.checker_id == corrupt and v.verdict == "implication_ok":
                v.conclusion_holds = False
                v.verdict = "VIOLATION"
                v.interpretation_notes += " [conclusion corrupted by test mode]"

    verdicts.sort(key=lambda v: (v.group_label, v.prime, v.checker_id))
    summary = {"implication_ok": 0, "vacuous": 0, "VIOLATION": 0, "skipped:cap": 0}
    for v in verdicts:
        summary[v.verdict] += 1
    violations = [v for v in verdicts if v.verdict == "VIOLATION"]
    discrepancies = [
        v
        for v in verdicts
        if v.checker_id == "thm_4_2"
        and v.hypothesis_holds
        and v.witnesses.get("strict_reading_ok") != v.witnesses.get("p_prime_reading_ok")
    ]
    description = f"{len(entries)} groups, {len(tasks)} (group, prime) pairs"
    return TheoremReport(description, verdicts, summary, violations, discrepancies)


# paper witness facts --------------------------------------------------------


def verify_paper_witnesses(caps: Caps = DEFAULT_CAPS) -> list[tuple[str, bool]]:
    """Evaluate the hard-coded named-group facts the write-up relies on."""
    from .catalog import dihedral, generalized_quaternion, psl2, symmetric, wreath_cyclic
    from .sylow import is_tame_intersection

    results: list[tuple[str, bool]] = []

    s4 = symmetric(4)
    fam = all_sylow_subgroups(s4, 2, caps)
    p_syl = fam.base_member
    results.append(
        ("s4_sylow_wreath", is_isomorphic(p_syl, wreath_cyclic(2), caps)[0])
    )
    distinct = [q for i, q in enumerate(fam.members) if i != fam.base]
    results.append(
        (
            "s4_intersection_index",
            all(
                p_syl.order() // intersection(p_syl, q, caps).order() == 2
                for q in distinct
            ),
        )
    )
    rec = is_tame_intersection(s4, p_syl, distinct[0], 2, caps)
    results.append(
        (
            "s4_tame_v4",
            rec.d.order() == 4
            and rec.tame
            and rec.normalizer.order() == 24
            and not rec.normalizer_p_nilpotent,
        )
    )
    ngp = normalizer(s4, p_syl, caps)
    results.append(
        ("s4_no_control", not controls_p_transfer(s4, ngp, 2, caps).controls)
    )
    o2 = o_p(s4, 2, caps)
    results.append(
        (
            "s4_o2_second_center",
            o2.is_subgroup_of(z_k(p_syl, 2, caps))
            and not o2.is_subgroup_of(center(p_syl, caps)),
        )
    )

    d8 = dihedral(8)
    zn = norm(d8, caps)
    results.append(
        (
            "d8_norm_index_4",
            d8.order() // zn.order() == 4 and zn.same_group_as(center(d8, caps)),
        )
    )

    q16 = generalized_quaternion(16)
    results.append(
        (
            "q16_class_3_norm_length_2",
            nilpotency_class(q16, caps) == 3 and norm_length(q16, caps) == 2,
        )
    )
    results.append(("d16_norm_length_3", norm_length(dihedral(16), caps) == 3))

    psl = psl2(17)
    p17 = sylow_subgroup(psl, 2, caps)
    results.append(
        ("psl217_sylow_d16", is_isomorphic(p17, dihedral(16), caps)[0])
    )
    results.append(("psl217_sylow_maximal", is_maximal(psl, p17, caps)))
    return results
