"""Cube chains from v to w and the poset they form.

A cube chain is a tuple of cube ids ``(c_1, ..., c_l)`` with every
``dim(c_i) >= 1``, ``d^0(c_1) = v``, ``d^1(c_l) = w`` and consecutive cubes
meeting at extreme vertices.  Its type is the tuple of cube dimensions, its
length the sum of the type and its dimension the length minus ``l``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import BudgetExceeded, EnumerationError, PCSError
from .pcs import PrecubicalSet, apply_face, has_no_loops, subset_label


def chain_type(cset: PrecubicalSet, chain) -> tuple:
    return tuple(cset.dim(c) for c in chain)


def chain_length(cset: PrecubicalSet, chain) -> int:
    return sum(cset.dim(c) for c in chain)


def chain_dim(cset: PrecubicalSet, chain) -> int:
    return chain_length(cset, chain) - len(chain)


def break_points(type_) -> tuple:
    """Partial sums of the type, starting at 0."""
    return (0,) + tuple(itertools.accumulate(type_))


def chain_vertices(cset: PrecubicalSet, chain) -> tuple:
    if not chain:
        return ()
    return (cset.extremes[chain[0]][0],) + tuple(cset.extremes[c][1] for c in chain)


def is_chain(cset: PrecubicalSet, chain, origin, goal) -> bool:
    if not chain:
        return origin == goal
    if any(cset.dim(c) < 1 for c in chain):
        return False
    verts = chain_vertices(cset, chain)
    if verts[0] != origin or verts[-1] != goal:
        return False
    return all(cset.extremes[a][1] == cset.extremes[b][0] for a, b in zip(chain, chain[1:]))


def chain_face(cset: PrecubicalSet, chain, k: int, subset) -> tuple:
    """Split block k in two: the face with the complement of subset at 0, then the face with subset at 1."""
    if not 1 <= k <= len(chain):
        raise PCSError(f"block index {k} out of range 1..{len(chain)}")
    c = chain[k - 1]
    n = cset.dim(c)
    subset = frozenset(subset)
    if not subset or len(subset) >= n or not subset <= set(range(1, n + 1)):
        raise PCSError(f"subset {sorted(subset)} must be a proper nonempty subset of 1..{n}")
    rest = [i for i in range(1, n + 1) if i not in subset]
    lower = apply_face(cset, c, subset_label(n, zeros=rest))
    upper = apply_face(cset, c, subset_label(n, ones=subset))
    return chain[:k - 1] + (lower, upper) + chain[k:]


def chain_faces(cset: PrecubicalSet, chain):
    """Yield ``(k, subset, face chain)`` over all blocks and proper nonempty subsets."""
    for k, c in enumerate(chain, 1):
        n = cset.dim(c)
        for r in range(1, n):
            for subset in itertools.combinations(range(1, n + 1), r):
                yield k, subset, chain_face(cset, chain, k, subset)


def _reaching(cset: PrecubicalSet, goal) -> set:
    preds = {u: set() for u in cset.vertices}
    for c in cset.cubes:
        if cset.dim(c) >= 1:
            a, b = cset.extremes[c]
            preds[b].add(a)
    seen, todo = {goal}, [goal]
    while todo:
        for u in preds[todo.pop()]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen


def enumerate_chains(cset: PrecubicalSet, origin, goal, max_length=None, limit=None) -> list:
    """All cube chains from v to w, sorted lexicographically by id sequence.

    ``max_length`` bounds the length and is mandatory when the complex has a directed
    loop.  ``limit`` caps the number of chains (:class:`BudgetExceeded`).
    When ``v == w`` the empty chain is included.
    """
    for x in (origin, goal):
        if x not in cset or cset.dim(x) != 0:
            raise PCSError(f"{x!r} is not a vertex")
    if max_length is None and not has_no_loops(cset)[0]:
        raise PCSError("the complex has a directed loop; max_length is required")
    useful = _reaching(cset, goal)
    out = []
    prefix = []

    def extend(u, length):
        if u == goal:
            out.append(tuple(prefix))
            if limit is not None and len(out) > limit:
                raise BudgetExceeded(f"more than {limit} cube chains")
        for c in cset.outgoing[u]:
            n = cset.dim(c)
            if max_length is not None and length + n > max_length:
                continue
            nxt = cset.extremes[c][1]
            if nxt in useful:
                prefix.append(c)
                extend(nxt, length + n)
                prefix.pop()

    if origin in useful:
        extend(origin, 0)
    return sorted(set(out))


def chain_leq_by_faces(cset: PrecubicalSet, b, c) -> bool:
    """b <= c by searching the iterated faces of c."""
    b, c = tuple(b), tuple(c)
    if chain_length(cset, b) != chain_length(cset, c):
        return False
    target = chain_dim(cset, b)
    layer = {c}
    for _ in range(chain_dim(cset, c) - target):
        layer = {face_chain for x in layer for _, _, face_chain in chain_faces(cset, x)}
    return b in layer


def chain_leq(cset: PrecubicalSet, b, c) -> bool:
    """b <= c, decided through the index isomorphism of c's downset."""
    from .cellular import inverse_index_iso_chain

    try:
        inverse_index_iso_chain(cset, c, b)
    except PCSError:
        return False
    return True


def chain_meet(cset: PrecubicalSet, c, c2):
    """Greatest common lower bound of two chains with equal endpoints, or None.

    Compares first blocks: the shorter-dimensional first cube must be a lower
    face d^0 of the other one; split that one accordingly and recurse on the
    tails.
    """
    c, c2 = tuple(c), tuple(c2)
    if not c or not c2:
        return () if not c and not c2 else None
    x, y = c[0], c2[0]
    n, m = cset.dim(x), cset.dim(y)
    if n == m:
        if x != y:
            return None
        rest = chain_meet(cset, c[1:], c2[1:])
        return None if rest is None else (x,) + rest
    if n > m:
        return chain_meet(cset, c2, c)
    for subset in itertools.combinations(range(1, m + 1), n):
        split = chain_face(cset, c2, 1, subset)
        if split[0] == x:
            rest = chain_meet(cset, c[1:], split[1:])
            return None if rest is None else (x,) + rest
    return None


@dataclass(eq=False)
class ChainPoset:
    """Cube chains with their cover relation ``child = chain_face(parent, k, subset)``."""

    cset: PrecubicalSet
    elements: list
    covers: list = field(default_factory=list)  # (child index, parent index)

    def __post_init__(self):
        self.index = {c: i for i, c in enumerate(self.elements)}
        self.dims = [chain_dim(self.cset, c) for c in self.elements]
        self.lengths = [chain_length(self.cset, c) for c in self.elements]

    def __len__(self):
        return len(self.elements)

    @cached_property
    def children(self) -> list:
        out = [[] for _ in self.elements]
        for a, b in self.covers:
            out[b].append(a)
        return out

    @cached_property
    def downsets(self) -> list:
        """Index -> frozenset of indices below or equal (memoized closure)."""
        out = [None] * len(self.elements)
        for i in sorted(range(len(self.elements)), key=lambda i: self.dims[i]):
            s = {i}
            for j in self.children[i]:
                s |= out[j]
            out[i] = frozenset(s)
        return out

    def leq(self, a, b) -> bool:
        return self.index[tuple(a)] in self.downsets[self.index[tuple(b)]]

    def strict_up(self) -> dict:
        """Index -> set of indices strictly above it."""
        up = {i: set() for i in range(len(self.elements))}
        for j, down in enumerate(self.downsets):
            for i in down:
                if i != j:
                    up[i].add(j)
        return up


def build_poset(cset: PrecubicalSet, chains) -> ChainPoset:
    cposet = ChainPoset(cset, list(chains))
    covers = []
    for j, c in enumerate(cposet.elements):
        for k, subset, child in chain_faces(cset, c):
            i = cposet.index.get(child)
            if i is None:
                raise EnumerationError(f"face ({k}, {subset}) of {c} = {child} is not enumerated")
            covers.append((i, j))
    cposet.covers = covers
    return cposet
