"""Walk through the transfer map on S4 and its Sylow 2-subgroup.

Shows the pretransfer product, transversal independence, the focal
subgroup, and why the Sylow normalizer fails to control 2-transfer.
"""

import random

from transferlab import (
    controls_p_transfer,
    focal_subgroup,
    lemma23_witness,
    normalizer,
    pretransfer,
    right_transversal,
    sylow_subgroup,
    transfer,
)
from transferlab.catalog import symmetric
from transferlab.transfer import shuffled_transversal


def main():
    g = symmetric(4)
    p_syl = sylow_subgroup(g, 2)
    print(f"G = {g.name}, |G| = {g.order()}")
    print(f"Sylow 2-subgroup P of order {p_syl.order()}")

    trans = right_transversal(g, p_syl)
    print(f"transversal size |G:P| = {len(trans.reps)}")

    rng = random.Random(4)
    x = g.random_element(rng)
    base = transfer(g, p_syl, x)
    print(f"\nx = {x}")
    print(f"transfer value V(x) = {base.value} (read modulo P')")
    for trial in range(3):
        other = pretransfer(g, p_syl, shuffled_transversal(g, p_syl, rng), x)
        same = base.modulus.contains(base.value * other.inverse())
        print(f"  random transversal {trial + 1}: value {other}, same mod P': {same}")

    focal = focal_subgroup(g, p_syl)
    print(f"\nfocal subgroup P cap G' has order {focal.order()}")

    ngp = normalizer(g, p_syl)
    report = controls_p_transfer(g, ngp, 2)
    print(f"N_G(P) has order {ngp.order()}")
    print(f"N_G(P) controls 2-transfer: {report.controls}")
    print(f"  P cap G'      has order {report.focal_g.order()}")
    print(f"  P cap N_G(P)' has order {report.focal_n.order()}")

    wit = lemma23_witness(g, ngp, 2)
    print(f"\nnon-control witness: M of order {wit.m.order()} inside N_G(P)")
    u, x, r, q = wit.per_u[0]
    print(f"  u = {u} escapes M; double-coset rep x = {x}")
    print(f"  P cap N^x has order {r.order()}, P cap M^x has order {q.order()}")


if __name__ == "__main__":
    main()
