"""Realify the Witting vertices into the E8 roots and count parity proofs.

A parity proof is an odd set of bases in which every ray appears an even
number of times. Such sets are the odd-weight vectors in the kernel of
the basis-ray incidence matrix over GF(2), so there are either none or
exactly 2^(k-1) of them, k being the kernel dimension.
"""

from __future__ import annotations

from wittingrays.ksproofs import enumerate_parity_proofs, incidence_matrix, parity_analysis, verify_parity_proof
from wittingrays.registry import load
from wittingrays.witting import generate_witting_vertices, realify, reflection_closure_failures

roots = realify(generate_witting_vertices())
print(f"{len(roots)} roots in R^8, squared lengths {sorted({r.squared_length().as_fraction() for r in roots})}")
print("reflection closure failures:", len(reflection_closure_failures(roots)))

for sid in ("penrose-canonical", "e8"):
    loaded = load(sid)
    a = parity_analysis(incidence_matrix(loaded.system, loaded.bases))
    count = f"2^{a.kernel_dim - 1}" if a.proof_count else "0"
    print(f"\n{sid}: {loaded.signature}, rank {a.rank}, kernel dimension {a.kernel_dim}, parity proofs {count}")
    for cert in enumerate_parity_proofs(a, limit=3):
        ok = verify_parity_proof(loaded.bases, cert.basis_indices).valid
        print(f"  {len(cert)} bases {cert.basis_indices} verified={ok}")
