"""Finite groups with a fixed element enumeration.

Elements are referred to everywhere by their enumeration index: the identity
is index 0 and the remaining indices follow breadth-first discovery order
from the generating set, so the enumeration is deterministic for a fixed
input.
"""

from __future__ import annotations

from .errors import FormatError, GroupTooLargeError

DEFAULT_MAX_ORDER = 10**6

# Above this order we stop materializing the full multiplication table and
# compose permutations on demand instead.
MULT_TABLE_LIMIT = 4096


def uniqsort(elements):
    """Sort element indices ascending and drop duplicates."""
    return sorted(set(elements))


class FiniteGroup:
    """An enumerated finite group.

    Holds the multiplication structure plus, when the group was built from
    permutation generators, one permutation per element (used to construct
    actions and to compose products lazily for very large groups).
    """

    def __init__(self, permutations, generator_indices, element_words):
        self.order = len(permutations)
        self.permutations = permutations
        self.generators = list(generator_indices)
        self.element_words = element_words
        self.identity = 0
        self.op_counts = None
        self._index = {perm: i for i, perm in enumerate(permutations)}
        if len(self._index) != self.order:
            raise ValueError("duplicate permutations in element list")
        self._mult = None
        self._mult_cache = {}
        if self.order <= MULT_TABLE_LIMIT:
            self._mult = [
                [self._compose_index(g, h) for h in range(self.order)]
                for g in range(self.order)
            ]
        self._inverse = [0] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self._raw_prod(g, h) == 0:
                    self._inverse[g] = h
                    break

    def _compose_index(self, g, h):
        pg, ph = self.permutations[g], self.permutations[h]
        return self._index[tuple(pg[v] for v in ph)]

    def _raw_prod(self, g, h):
        if self._mult is not None:
            return self._mult[g][h]
        key = (g, h)
        out = self._mult_cache.get(key)
        if out is None:
            out = self._compose_index(g, h)
            self._mult_cache[key] = out
        return out

    def prod(self, g, h):
        """Index of the product g*h."""
        if self.op_counts is not None:
            self.op_counts.add("prod")
        return self._raw_prod(g, h)

    def inv(self, g):
        """Index of the inverse of g."""
        if self.op_counts is not None:
            self.op_counts.add("inv")
        return self._inverse[g]

    def minrep(self, subgroup, g):
        """Enumeration-minimal element of the left coset g*H."""
        if self.op_counts is not None:
            self.op_counts.add("minrep")
        return min(self._raw_prod(g, h) for h in subgroup.elements)

    def subgroup(self, members):
        return Subgroup(self, members)

    def trivial_subgroup(self):
        return Subgroup(self, [0])

    def full_subgroup(self):
        return Subgroup(self, range(self.order))

    def left_multiplication_table(self, g):
        """Row of the multiplication table for g, i.e. the regular action."""
        return [self._raw_prod(g, h) for h in range(self.order)]

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(
            self._raw_prod(g, h) == other._raw_prod(g, h)
            for g in range(self.order)
            for h in range(self.order)
        )

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, generators={self.generators})"


class Subgroup:
    """A subgroup stored as a sorted member list plus a membership bitmask."""

    def __init__(self, group, members):
        self.group = group
        self.elements = uniqsort(members)
        if not self.elements or self.elements[0] != 0:
            raise ValueError("subgroup must contain the identity")
        mask = 0
        for g in self.elements:
            if not 0 <= g < group.order:
                raise ValueError(f"element index {g} out of range")
            mask |= 1 << g
        self.mask = mask
        for a in self.elements:
            if not (mask >> group._inverse[a]) & 1:
                raise ValueError("subgroup not closed under inversion")
            for b in self.elements:
                if not (mask >> group._raw_prod(a, b)) & 1:
                    raise ValueError("subgroup not closed under multiplication")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return bool((self.mask >> g) & 1)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.mask == other.mask

    def __repr__(self):
        return f"Subgroup({self.elements})"


def is_member(subgroup, g):
    """Whether g lies in the subgroup (bitmask lookup)."""
    return g in subgroup


def enumerate_from_generators(generators, domain_size, max_order=DEFAULT_MAX_ORDER):
    """Close a list of permutations under composition, breadth first.

    Each generator must be a bijection on 0..domain_size-1.  The identity is
    discovered first (index 0) and new elements are found by right-multiplying
    known elements with generators in input order, so the enumeration is
    deterministic.
    """
    gens = []
    for i, perm in enumerate(generators):
        perm = tuple(perm)
        if sorted(perm) != list(range(domain_size)):
            raise ValueError(f"generator {i} is not a bijection on 0..{domain_size - 1}")
        gens.append(perm)

    identity = tuple(range(domain_size))
    perms = [identity]
    words = [()]
    seen = {identity: 0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for g in frontier:
            pg = perms[g]
            for i, ps in enumerate(gens):
                new = tuple(pg[ps[v]] for v in range(domain_size))
                if new not in seen:
                    if len(perms) >= max_order:
                        raise GroupTooLargeError(
                            f"generator closure exceeds maximum order {max_order}"
                        )
                    seen[new] = len(perms)
                    perms.append(new)
                    words.append(words[g] + (i,))
                    next_frontier.append(seen[new])
        frontier = next_frontier

    generator_indices = [seen[p] for p in gens]
    return FiniteGroup(perms, generator_indices, words)


def group_to_doc(group):
    """Portable form: order plus the regular action of each generator.

    Re-enumerating the regular-action generators breadth first reproduces the
    original enumeration exactly, so element indices survive a roundtrip.
    """
    return {
        "order": group.order,
        "generators": [group.left_multiplication_table(g) for g in group.generators],
        "element_words": [list(w) for w in group.element_words],
    }


def group_from_doc(doc, location="$.group"):
    if not isinstance(doc, dict):
        raise FormatError("group must be an object", location)
    order = doc.get("order")
    gens = doc.get("generators")
    if not isinstance(order, int) or order < 1:
        raise FormatError("order must be a positive integer", f"{location}.order")
    if not isinstance(gens, list):
        raise FormatError("generators must be a list", f"{location}.generators")
    for i, perm in enumerate(gens):
        if (
            not isinstance(perm, list)
            or len(perm) != order
            or sorted(perm) != list(range(order))
        ):
            raise FormatError(
                f"generator must be a permutation of 0..{order - 1}",
                f"{location}.generators[{i}]",
            )
    try:
        group = enumerate_from_generators(gens, order)
    except (ValueError, GroupTooLargeError) as exc:
        raise FormatError(str(exc), f"{location}.generators") from exc
    if group.order != order:
        raise FormatError(
            f"generators close to order {group.order}, not {order}",
            f"{location}.order",
        )
    return group
