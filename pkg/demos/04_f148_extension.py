"""A 148-ray system containing eight copies of the Penrose system.

The eight 40-ray subsystems are related by monomial unitaries (a
coordinate permutation followed by phases), and each is noncolorable, so
the whole family is too.
"""

from __future__ import annotations

import itertools

from wittingrays.ksproofs import incidence_matrix, ks_colorable, parity_analysis
from wittingrays.registry import load
from wittingrays.systems import find_monomial_equivalence

full = load("f148")
print(f"f148: {len(full.system)} rays, signature {full.signature}")
subs = [load(f"f148-sub-{i}") for i in range(1, 9)]
for i, s in enumerate(subs, start=1):
    print(f"  line {i}: {s.signature}")

# %% pairwise equivalences
for a, b in itertools.combinations(range(8), 2):
    m = find_monomial_equivalence(subs[a].system, subs[b].system)
    print(f"  {a + 1} -> {b + 1}: perm {m.perm} phases (twelfths of a turn) {m.phases}")

# %% colorability and parity of the whole family
out = ks_colorable(full.system, full.bases)
print(f"\ncolorable: {out.colorable} after {out.nodes_explored} nodes")
a = parity_analysis(incidence_matrix(full.system, full.bases))
print(f"parity proofs: {a.proof_count} (kernel dimension {a.kernel_dim})")
