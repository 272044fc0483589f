"""Tour of tame Sylow intersections in the named 2-groups and PSL(2,17).

Reproduces the structural facts the verification harness checks: the
wreath shape of the Sylow 2-subgroup of S4, the tame V4 intersection,
the norm series lengths of Q16 and D16, and the dihedral maximal Sylow
2-subgroup of PSL(2,17).
"""

from transferlab import (
    all_sylow_subgroups,
    is_isomorphic,
    is_maximal,
    is_tame_intersection,
    max_intersection_order,
    nilpotency_class,
    norm_length,
    normalizer,
    sylow_subgroup,
)
from transferlab.catalog import (
    dihedral,
    generalized_quaternion,
    psl2,
    symmetric,
    wreath_cyclic,
)


def main():
    s4 = symmetric(4)
    fam = all_sylow_subgroups(s4, 2)
    p, q = fam.members[0], fam.members[1]
    print(f"S4 has {len(fam.members)} Sylow 2-subgroups of order {p.order()}")
    ok, _ = is_isomorphic(p, wreath_cyclic(2))
    print(f"P is isomorphic to the wreath product Z2 wr Z2: {ok}")

    rec = is_tame_intersection(s4, p, q, 2)
    print(f"\n|P cap Q| = {rec.d.order()}, index {p.order() // rec.d.order()} in P")
    print(f"the intersection is tame: {rec.tame}")
    print(f"N_G(P cap Q) has order {rec.normalizer.order()}")
    print(f"N_G(P cap Q) is 2-nilpotent: {rec.normalizer_p_nilpotent}")
    print(f"max Sylow intersection order in S4: {max_intersection_order(s4, 2)}")

    q16 = generalized_quaternion(16)
    d16 = dihedral(16)
    print(f"\nclass(Q16) = {nilpotency_class(q16)}, norm length = {norm_length(q16)}")
    print(f"class(D16) = {nilpotency_class(d16)}, norm length = {norm_length(d16)}")

    g = psl2(17)
    s = sylow_subgroup(g, 2)
    print(f"\nPSL(2,17) has order {g.order()}")
    ok, _ = is_isomorphic(s, d16)
    print(f"its Sylow 2-subgroup is isomorphic to D16: {ok}")
    ngp = normalizer(g, s)
    print(f"the Sylow 2-subgroup is self-normalizing: {ngp.order() == s.order()}")
    print(f"and maximal in PSL(2,17): {is_maximal(g, s)}")


if __name__ == "__main__":
    main()
