"""Compression: regular action in, (quotient, stabilizers, transfers) out.

Orbit classes are processed one dimension at a time; within a dimension the
classes are independent and may be handed to a thread pool.  Results are
merged in canonical class order, so the output is identical for any worker
count.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor

from .actions import quotient
from .cog import CompressedTriple, CompressionCertificate

LIFT_POLICIES = ("lex-min", "lex-max", "equivariant-bfs")


def compress(action, lift_policy="lex-min", threads=1, stats=None):
    """Run the compression algorithm.

    Returns (CompressedTriple, CompressionCertificate).  Raises
    RegularityViolationError (carrying the report) for irregular actions.
    """
    if lift_policy not in LIFT_POLICIES:
        raise ValueError(f"unknown lift policy {lift_policy!r}")
    quotient_complex, orbit_map = quotient(action)  # raises on irregular actions
    fibers = [[] for _ in range(len(quotient_complex))]
    for x, y in enumerate(orbit_map):
        fibers[y].append(x)  # ascending, i.e. lex order within a dimension

    if lift_policy == "lex-min":
        lifts = [fiber[0] for fiber in fibers]
    elif lift_policy == "lex-max":
        lifts = [fiber[-1] for fiber in fibers]
    else:
        lifts = _equivariant_bfs_lifts(action, orbit_map, fibers)

    stabilizers = [None] * len(quotient_complex)
    transfers = {}

    def process_class(y):
        lift = lifts[y]
        stabilizer = action.stab(lift)
        entries = []
        trans_calls = 0
        for z in action.complex.faces_codim1(lift):
            child = orbit_map[z]
            carrier = action.trans(z, lifts[child])
            trans_calls += 1
            if carrier is None:
                raise AssertionError(
                    "no transporter between orbit members of a regular action"
                )
            entries.append((child, carrier))
        return stabilizer, entries, trans_calls

    for d in range(quotient_complex.dim + 1):
        class_ids = quotient_complex.ids_of_dim(d)
        if threads > 1 and len(class_ids) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(process_class, class_ids))
        else:
            results = [process_class(y) for y in class_ids]
        for y, (stabilizer, entries, trans_calls) in zip(class_ids, results):
            stabilizers[y] = stabilizer
            for child, carrier in entries:
                transfers[(y, child)] = carrier
            if stats is not None:
                stats.trans_calls_per_rep[y] = trans_calls

    triple = CompressedTriple(action.group, quotient_complex, stabilizers, transfers)
    certificate = CompressionCertificate(orbit_map, lifts)
    return triple, certificate


def compress_with_policy(action, lift_policy, threads=1, stats=None):
    """Alias of compress with an explicit lift policy."""
    return compress(action, lift_policy=lift_policy, threads=threads, stats=stats)


def _equivariant_bfs_lifts(action, orbit_map, fibers):
    """Seed lifts by breadth-first search, claiming whole orbits at a time.

    Growing the lift set along face/coface adjacency makes more transfers
    equal the identity; correctness does not depend on the choice.
    """
    lifts = [None] * len(fibers)
    claimed = 0
    queue = deque()
    cursor = 0
    complex_ = action.complex
    while claimed < len(fibers):
        if not queue:
            while lifts[orbit_map[cursor]] is not None:
                cursor += 1
            queue.append(cursor)
        x = queue.popleft()
        y = orbit_map[x]
        if lifts[y] is not None:
            continue
        lifts[y] = x
        claimed += 1
        for neighbor in complex_.faces_down[x] + complex_.cofaces_up[x]:
            if lifts[orbit_map[neighbor]] is None:
                queue.append(neighbor)
    return lifts


def compression_ratio(action, triple):
    """Simplex count of the input over simplex count of the quotient."""
    return len(action.complex) / len(triple.quotient)
