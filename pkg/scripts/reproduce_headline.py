#!/usr/bin/env python3
"""End-to-end reproduction of the headline numbers on the embedded set.

Prints the crossing count four independent ways, the k-edge and
transposition profiles, the structural certificates, and the bound ladder,
so a reader can eyeball every number in one screen.
"""

import time

from crosslab import bounds as bnd
from crosslab import halvings as hv
from crosslab import symmetry as sym
from crosslab.crossings import count_crossings_brute, count_k_edges, cr_from_k, cr_from_le_k
from crosslab.geometry import paper_config
from crosslab.sequences import build_circular_sequence, pcr_from_profile, transposition_profile


def main():
    start = time.monotonic()
    ps = paper_config()
    print(f"points: {ps.n}")
    print(f"crossings (brute):        {count_crossings_brute(ps).value}")
    profile = count_k_edges(ps)
    print(f"crossings (<=k identity): {cr_from_le_k(profile).value}")
    print(f"crossings (k identity):   {cr_from_k(profile).value}")
    h = build_circular_sequence(ps)
    tp = transposition_profile(h)
    print(f"crossings (sequence):     {pcr_from_profile(tp)}")
    print(f"E_k:    {profile.e_k}")
    print(f"N_<=k:  {tp.n_le_k}")

    labeling = sym.find_3decomposition(h)
    print(f"3-decomposable: {labeling is not None}")
    canonical = sym.canonical_labels(h, labeling)
    sigma = hv.derive_sigma(canonical)
    print(f"3-symmetric:    {sym.check_3symmetric_sequence(h, sigma).ok}")
    for color in "ABC":
        counts = hv.halving_counts(h, canonical, color)
        print(f"halvings {color}: sum {counts.h}, [j]+ = {dict(sorted(counts.plus.items()))}")

    for sym3 in (False, True):
        vec = bnd.best_lb_vector(33, sym3)
        tag = "sym3" if sym3 else "plain"
        print(f"bound vector ({tag}): {vec.entries} -> {bnd.lb_crossing(33, sym3)}")
    print(f"elapsed: {time.monotonic() - start:.2f}s")


if __name__ == "__main__":
    main()
