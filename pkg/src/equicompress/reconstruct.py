"""Reconstruction: unfold a compressed triple into a labeled complex.

Simplices of the output are labeled (y, g) where y is a quotient simplex and
g is the enumeration-minimal representative of a left coset of the stabilizer
of y.  The pair (y', g') is a face of (y, g) exactly when y' is a face of y
and the cosets agree after pulling g back through the transfer, i.e. when
inv(g') * g * inv(T(y >= y')) lies in the stabilizer of y'.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .actions import GroupAction
from .cog import validate_triple
from .complexes import build_complex
from .errors import BruteForceBoundError, ReconstructionIntegrityError, TripleValidationError


class ReconstructedComplex:
    def __init__(self, complex_, labels, triple):
        self.complex = complex_
        self.labels = labels  # Z simplex id -> (quotient id, coset representative)
        self.label_index = {label: sid for sid, label in enumerate(labels)}
        self.triple = triple

    def __len__(self):
        return len(self.labels)


def reconstruct(triple, threads=1, stats=None):
    """Run the basic construction on a validated triple."""
    report = validate_triple(triple)
    if not report.valid:
        raise TripleValidationError(report)

    group, quotient = triple.group, triple.quotient
    order = group.order
    reps_by_class = {}
    # label -> strictly sorted tuple of vertex ids of the reconstruction
    vertex_sets = {}
    all_labels = []

    def process_class(y):
        stabilizer = triple.stabilizers[y]
        reps = sorted({group.minrep(stabilizer, g) for g in range(order)})
        facets = []
        for g in reps:
            attached = []
            for child in quotient.faces_codim1(y):
                child_stab = triple.stabilizers[child]
                pulled = group.prod(g, group.inv(triple.transfer(y, child)))
                hits = [
                    g2
                    for g2 in reps_by_class[child]
                    if group.prod(group.inv(g2), pulled) in child_stab
                ]
                if len(hits) != 1:
                    raise ReconstructionIntegrityError(
                        f"label ({y}, {g}) matches {len(hits)} representatives "
                        f"over class {child}, expected exactly one"
                    )
                attached.append((child, hits[0]))
            facets.append(attached)
        return reps, facets

    for d in range(quotient.dim + 1):
        class_ids = quotient.ids_of_dim(d)
        if threads > 1 and len(class_ids) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(process_class, class_ids))
        else:
            results = [process_class(y) for y in class_ids]
        if stats is not None:
            stats.minrep_calls_per_dim[d] = order * len(class_ids)
        for y, (reps, facets) in zip(class_ids, results):
            reps_by_class[y] = reps
            for g, attached in zip(reps, facets):
                label = (y, g)
                if d == 0:
                    vertex_sets[label] = (len(vertex_sets),)
                else:
                    if len(attached) != d + 1 or len(set(attached)) != d + 1:
                        raise ReconstructionIntegrityError(
                            f"simplex {label} attached {len(attached)} facets, "
                            f"expected {d + 1} distinct ones"
                        )
                    union = set()
                    for facet in attached:
                        union.update(vertex_sets[facet])
                    if len(union) != d + 1:
                        raise ReconstructionIntegrityError(
                            f"simplex {label} spans {len(union)} vertices, expected {d + 1}"
                        )
                    vertex_sets[label] = tuple(sorted(union))
                all_labels.append(label)

    if len(set(vertex_sets.values())) != len(vertex_sets):
        raise ReconstructionIntegrityError("two labels span the same vertex set")
    n_vertices = sum(1 for vset in vertex_sets.values() if len(vset) == 1)
    complex_ = build_complex(vertex_sets.values(), vertex_count=n_vertices)
    if len(complex_) != len(all_labels):
        raise ReconstructionIntegrityError(
            "downward closure of labeled simplices produced unlabeled faces"
        )
    by_set = {vset: label for label, vset in vertex_sets.items()}
    labels = [by_set[s] for s in complex_.simplices]
    return ReconstructedComplex(complex_, labels, triple)


def recovered_action(rc):
    """The group action on a reconstruction: h * (y, g) = (y, minrep(S(y), h*g))."""
    triple = rc.triple
    group = triple.group
    vertex_ids = {}
    for sid, label in enumerate(rc.labels):
        if len(rc.complex.simplices[sid]) == 1:
            vertex_ids[label] = rc.complex.simplices[sid][0]
    images = []
    for h in range(group.order):
        row = [0] * rc.complex.vertex_count
        for (y, g), v in vertex_ids.items():
            moved = group.minrep(triple.stabilizers[y], group.prod(h, g))
            row[v] = vertex_ids[(y, moved)]
        images.append(row)
    return GroupAction(group, rc.complex, images)


def check_partial_order(rc, max_relations=10**4):
    """Brute-force verification that the face relation is a partial order.

    Recomputes the relation for every comparable label pair (any codimension,
    transfers composed along a canonical descending path), checks reflexivity,
    antisymmetry, transitivity and independence of the coset representative,
    and confirms it coincides with the containment order of the complex.
    """
    triple = rc.triple
    group, quotient = triple.group, triple.quotient

    descendants = [None] * len(quotient)

    def descend(y):
        if descendants[y] is None:
            out = {y}
            for child in quotient.faces_codim1(y):
                out.update(descend(child))
            descendants[y] = out
        return descendants[y]

    path_transfer = {}

    def transfer_along(y, target):
        if y == target:
            return 0
        key = (y, target)
        if key not in path_transfer:
            child = next(c for c in quotient.faces_codim1(y) if target in descend(c))
            path_transfer[key] = group.prod(transfer_along(child, target), triple.transfer(y, child))
        return path_transfer[key]

    comparable = [
        (a, b)
        for a, (ya, _) in enumerate(rc.labels)
        for b, (yb, _) in enumerate(rc.labels)
        if yb in descend(ya)
    ]
    if len(comparable) > max_relations:
        raise BruteForceBoundError(
            f"{len(comparable)} candidate relations exceed the bound {max_relations}"
        )

    def related(a, b):
        ya, ga = rc.labels[a]
        yb, gb = rc.labels[b]
        if yb not in descend(ya):
            return False
        stab_b = triple.stabilizers[yb]
        phi = transfer_along(ya, yb)
        verdicts = set()
        for s in triple.stabilizers[ya].elements:  # representative independence
            shifted = group.prod(ga, s)
            pulled = group.prod(shifted, group.inv(phi))
            verdicts.add(group.minrep(stab_b, pulled) == gb)
        if len(verdicts) != 1:
            raise ReconstructionIntegrityError(
                f"face test for {rc.labels[a]} over {rc.labels[b]} depends on the "
                f"coset representative"
            )
        return verdicts.pop()

    relation = {(a, b) for a, b in comparable if related(a, b)}

    for a in range(len(rc.labels)):
        if (a, a) not in relation:
            return False
    for a, b in relation:
        if a != b and (b, a) in relation:
            return False
    by_upper = {}
    for a, b in relation:
        by_upper.setdefault(a, set()).add(b)
    for a, b in relation:
        for c in by_upper.get(b, ()):
            if (a, c) not in relation:
                return False

    containment = {
        (a, b)
        for a in range(len(rc.labels))
        for b in range(len(rc.labels))
        if set(rc.complex.simplices[b]) <= set(rc.complex.simplices[a])
    }
    return relation == containment
