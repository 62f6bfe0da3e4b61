"""Kochen-Specker colorability search and parity-proof analysis over GF(2)."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .systems import BasisTable, RaySystem


@dataclass(frozen=True)
class IncidenceMatrixGF2:
    """Bases by rays; row ``i`` is an int whose bit ``j`` marks ray ``j``."""

    rows: tuple[int, ...]
    n_rays: int

    @property
    def n_bases(self) -> int:
        return len(self.rows)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def column_weights(self) -> list[int]:
        out = [0] * self.n_rays
        for r in self.rows:
            for j in range(self.n_rays):
                if r >> j & 1:
                    out[j] += 1
        return out

    def combine(self, selection: int) -> int:
        """Sum over GF(2) of the rows whose bits are set in ``selection``."""
        acc = 0
        i = 0
        while selection:
            if selection & 1:
                acc ^= self.rows[i]
            selection >>= 1
            i += 1
        return acc


def incidence_matrix(system: RaySystem | int, bases: BasisTable | Sequence[Sequence[int]]) -> IncidenceMatrixGF2:
    n = system if isinstance(system, int) else len(system)
    rows = []
    for b in bases:
        m = 0
        for j in b:
            m |= 1 << j
        rows.append(m)
    return IncidenceMatrixGF2(tuple(rows), n)


@dataclass(frozen=True)
class ParityAnalysis:
    rank: int
    kernel_dim: int
    odd_weight_exists: bool
    proof_count: int
    kernel_basis: tuple[int, ...]
    matrix: IncidenceMatrixGF2

    @property
    def n_bases(self) -> int:
        return self.matrix.n_bases


def parity_analysis(m: IncidenceMatrixGF2) -> ParityAnalysis:
    """Kernel of ``x -> x^T m`` by elimination with combination tracking.

    A row that reduces to zero records which original rows sum to zero;
    those records form a kernel basis. Weight parity is linear on the
    kernel, so odd vectors are either absent or exactly half of it.
    """
    pivots: dict[int, tuple[int, int]] = {}  # pivot bit -> (row value, combination)
    kernel = []
    for i, row in enumerate(m.rows):
        combo = 1 << i
        while row:
            top = row.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (row, combo)
                break
            row ^= hit[0]
            combo ^= hit[1]
        else:
            kernel.append(combo)
    k = len(kernel)
    odd = any(v.bit_count() % 2 for v in kernel)
    return ParityAnalysis(
        rank=len(pivots),
        kernel_dim=k,
        odd_weight_exists=odd,
        proof_count=2 ** (k - 1) if odd else 0,
        kernel_basis=tuple(kernel),
        matrix=m,
    )


@dataclass(frozen=True)
class ParityProofCertificate:
    basis_indices: tuple[int, ...]

    @classmethod
    def from_bits(cls, v: int) -> ParityProofCertificate:
        return cls(tuple(i for i in range(v.bit_length()) if v >> i & 1))

    def __len__(self) -> int:
        return len(self.basis_indices)


def _lighten(targets: list[int], reducers: list[int]) -> list[int]:
    # v -> v ^ r while that lowers the weight; even reducers keep v's parity
    out = []
    for v in targets:
        improved = True
        while improved:
            improved = False
            for r in reducers:
                t = v ^ r
                if t.bit_count() < v.bit_count():
                    v = t
                    improved = True
        out.append(v)
    return out


EXHAUSTIVE_KERNEL_DIM = 20
COMBINATION_POOL = 64


def enumerate_parity_proofs(
    analysis: ParityAnalysis,
    limit: int = 100,
    max_weight: int | None = None,
    max_combination: int = 3,
) -> list[ParityProofCertificate]:
    """Odd-weight kernel vectors (parity proofs), lightest first, at most ``limit``.

    For kernels of dimension up to 20 every kernel vector is examined, so the
    output is the globally lightest set. Larger kernels are searched over
    single kernel-basis vectors, then sums of up to ``max_combination`` of
    the 64 lightest ones; each odd candidate is greedily lightened by adding
    even basis vectors. That output is sorted by weight but is not
    guaranteed to contain the lightest proofs of the whole kernel.
    """
    if limit <= 0 or not analysis.odd_weight_exists:
        return []
    cap = analysis.n_bases if max_weight is None else max_weight
    basis = list(analysis.kernel_basis)
    found: set[int] = set()
    if analysis.kernel_dim <= EXHAUSTIVE_KERNEL_DIM:
        for bits in range(1, 1 << len(basis)):
            v = 0
            for i, b in enumerate(basis):
                if bits >> i & 1:
                    v ^= b
            w = v.bit_count()
            if w % 2 and w <= cap:
                found.add(v)
    else:
        evens = sorted((b for b in basis if b.bit_count() % 2 == 0), key=lambda v: (v.bit_count(), v))
        lightest = sorted(basis, key=lambda v: (v.bit_count(), v))[:COMBINATION_POOL]
        for size in range(1, max_combination + 1):
            odd = []
            for combo in itertools.combinations(basis if size == 1 else lightest, size):
                v = 0
                for b in combo:
                    v ^= b
                if v.bit_count() % 2:
                    odd.append(v)
            found.update(v for v in _lighten(odd, evens) if v.bit_count() <= cap)
            if len(found) >= limit:
                break
    ordered = sorted(found, key=lambda v: (v.bit_count(), ParityProofCertificate.from_bits(v).basis_indices))
    return [ParityProofCertificate.from_bits(v) for v in ordered[:limit]]


@dataclass(frozen=True)
class ParityVerdict:
    valid: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def verify_parity_proof(bases: BasisTable | Sequence[Sequence[int]], subset: Sequence[int]) -> ParityVerdict:
    """Check a proof by plain counting: odd number of distinct bases, every
    ray seen an even number of times."""
    table = list(bases)
    chosen = list(subset)
    if len(set(chosen)) != len(chosen):
        return ParityVerdict(False, "repeated basis index")
    if any(not 0 <= i < len(table) for i in chosen):
        return ParityVerdict(False, "basis index out of range")
    if len(chosen) % 2 == 0:
        return ParityVerdict(False, f"even number of bases ({len(chosen)})")
    counts = Counter(r for i in chosen for r in table[i])
    odd = sorted(r for r, c in counts.items() if c % 2)
    if odd:
        return ParityVerdict(False, f"ray {odd[0]} occurs {counts[odd[0]]} times")
    return ParityVerdict(True)


@dataclass(frozen=True)
class ColoringOutcome:
    """Either a valid assignment or the statistics of an exhausted search."""

    colorable: bool
    assignment: dict[str, int] | None
    nodes_explored: int
    propagations: int
    complete: bool


class _Conflict(Exception):
    pass


class _Colorer:
    def __init__(self, nbrs: list[int], bases: list[int], rng: random.Random | None) -> None:
        self.nbrs = nbrs
        self.bases = bases
        self.rng = rng
        self.nodes = 0
        self.props = 0

    def set_one(self, ones: int, zeros: int, v: int) -> tuple[int, int]:
        bit = 1 << v
        if zeros & bit:
            raise _Conflict
        if ones & self.nbrs[v]:
            raise _Conflict
        return ones | bit, zeros | self.nbrs[v]

    def propagate(self, ones: int, zeros: int) -> tuple[int, int]:
        changed = True
        while changed:
            changed = False
            for b in self.bases:
                if b & ones:
                    continue
                free = b & ~zeros
                if not free:
                    raise _Conflict
                if free & (free - 1) == 0:
                    ones, zeros = self.set_one(ones, zeros, free.bit_length() - 1)
                    self.props += 1
                    changed = True
        return ones, zeros

    def choose(self, ones: int, zeros: int) -> list[int] | None:
        """Candidates of the open basis with the fewest free rays."""
        best = None
        for b in self.bases:
            if b & ones:
                continue
            free = b & ~zeros
            if best is None or free.bit_count() < best.bit_count():
                best = free
                if free.bit_count() == 2:
                    break
        if best is None:
            return None
        cands = [i for i in range(best.bit_length()) if best >> i & 1]
        if self.rng is not None:
            self.rng.shuffle(cands)
        return cands

    def search(self, ones: int, zeros: int) -> int | None:
        self.nodes += 1
        try:
            ones, zeros = self.propagate(ones, zeros)
        except _Conflict:
            return None
        cands = self.choose(ones, zeros)
        if cands is None:
            return ones
        for c in cands:
            try:
                o, z = self.set_one(ones, zeros, c)
            except _Conflict:
                zeros |= 1 << c
                continue
            res = self.search(o, z)
            if res is not None:
                return res
            zeros |= 1 << c  # c is 0 in the remaining branches
        return None


def _bases_masks(bases) -> list[int]:
    out = []
    for b in bases:
        m = 0
        for j in b:
            m |= 1 << j
        out.append(m)
    return out


def _run_branch(args) -> tuple[int | None, int, int]:
    nbrs, bases, seed, ones, zeros = args
    c = _Colorer(nbrs, bases, random.Random(seed) if seed is not None else None)
    res = c.search(ones, zeros)
    return res, c.nodes, c.props


def ks_colorable(
    system: RaySystem,
    bases: BasisTable | Sequence[Sequence[int]],
    workers: int = 1,
    seed: int | None = None,
) -> ColoringOutcome:
    """Search for a {0,1} marking with exactly one 1 per basis and no two
    orthogonal rays both 1.

    Backtracking branches on which ray of the most constrained open basis is
    marked, with unit propagation. The root branches can be spread over
    ``workers`` processes; the outcome does not depend on the worker count.
    ``seed`` shuffles candidate order (for cross-checking).
    """
    nbrs = system.neighbor_masks()
    masks = _bases_masks(bases)
    root = _Colorer(nbrs, masks, random.Random(seed) if seed is not None else None)
    root.nodes = 1
    try:
        ones, zeros = root.propagate(0, 0)
    except _Conflict:
        return ColoringOutcome(False, None, root.nodes, root.props, True)
    cands = root.choose(ones, zeros)
    if cands is None:
        return _outcome(system, ones, root.nodes, root.props)
    jobs = []
    z = zeros
    for i, c in enumerate(cands):
        try:
            o, zz = root.set_one(ones, z, c)
        except _Conflict:
            z |= 1 << c
            continue
        sub_seed = None if seed is None else seed * 1000003 + i
        jobs.append((nbrs, masks, sub_seed, o, zz))
        z |= 1 << c
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_branch, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_run_branch(job))
            if results[-1][0] is not None:
                break
    nodes, props = root.nodes, root.props
    for res, n, p in results:
        nodes += n
        props += p
        if res is not None:
            return _outcome(system, res, nodes, props)
    return ColoringOutcome(False, None, nodes, props, True)


def _outcome(system: RaySystem, ones: int, nodes: int, props: int) -> ColoringOutcome:
    assignment = {label: ones >> i & 1 for i, label in enumerate(system.labels)}
    return ColoringOutcome(True, assignment, nodes, props, True)


def check_coloring(system: RaySystem, bases, assignment: dict[str, int]) -> bool:
    """Re-check both marking rules directly."""
    values = [assignment[label] for label in system.labels]
    if any(sum(values[i] for i in b) != 1 for b in bases):
        return False
    ones = [i for i, v in enumerate(values) if v]
    return not any(system.adjacency[i, j] for i, j in itertools.combinations(ones, 2))
