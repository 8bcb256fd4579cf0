"""Ordered partitions, products of permutohedra and their fundamental cycles.

Conventions:

* a composition ``ns = (n_1, ..., n_l)`` is a tuple of positive integers;
* an ordered partition of {1..n} is its characteristic function, stored as
  the tuple ``(f(1), ..., f(n))`` of a surjection onto {1..k};
* permutations are one-line tuples, ``s[i-1] == s(i)``, and composition
  ``f s`` means ``i -> f(s(i))``;
* a level function is a tuple ``(levels(1), ..., levels(n-1))`` of gap
  levels between consecutive positions; thresholding it at j merges the
  gaps of level <= j.

``f <= g`` ("f refines g") when g = h o f for a non-decreasing h.  The
constant partition is the top element; finer partitions sit lower.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, PCSError
from .simplicial import pushforward

DEFAULT_BUDGET = 100_000


# --- compositions -----------------------------------------------------------

def composition(ns) -> tuple:
    ns = tuple(int(x) for x in ns)
    if any(x < 1 for x in ns):
        raise PCSError(f"composition parts must be positive: {ns}")
    return ns


def breaks(ns) -> tuple:
    """Partial sums (0, n_1, n_1 + n_2, ..., n)."""
    return (0,) + tuple(itertools.accumulate(ns))


def split_part(ns, k: int, r: int) -> tuple:
    """Replace part k by the two parts (r, part - r)."""
    if not 1 <= r < ns[k - 1]:
        raise PCSError(f"cannot split part {ns[k - 1]} at {r}")
    return ns[:k - 1] + (r, ns[k - 1] - r) + ns[k:]


def char_function(ns) -> tuple:
    """The non-decreasing surjection taking value k once per element of part k."""
    return tuple(k for k, m in enumerate(ns, 1) for _ in range(m))


# --- ordered partitions --------------------------------------------------------

def is_ordered_partition(opart) -> bool:
    return set(opart) == set(range(1, max(opart, default=0) + 1))


def precedes(opart, other) -> bool:
    """f <= g: g factors as h o f with h non-decreasing."""
    if len(opart) != len(other):
        return False
    lift = {}
    for a, b in zip(opart, other):
        if lift.setdefault(a, b) != b:
            return False
    keys = sorted(lift)
    return all(lift[a] <= lift[b] for a, b in zip(keys, keys[1:]))


@lru_cache(maxsize=None)
def ordered_partitions(n: int) -> tuple:
    """All surjections {1..n} -> {1..k}, any k, sorted."""
    if n == 0:
        return ((),)
    out = []
    for opart in ordered_partitions(n - 1):
        k = max(opart, default=0)
        # put n into an existing block, or a new block inserted at position j
        for j in range(1, k + 1):
            out.append(opart + (j,))
        for j in range(1, k + 2):
            out.append(tuple(x + 1 if x >= j else x for x in opart) + (j,))
    return tuple(sorted(out))


def factor_components(opart, ns) -> tuple:
    """Split a refinement of ``char_function(ns)`` into one partition per part."""
    ns = composition(ns)
    if not precedes(opart, char_function(ns)):
        raise PCSError(f"{opart} does not refine the composition {ns}")
    b = breaks(ns)
    out = []
    for k in range(1, len(ns) + 1):
        part = opart[b[k - 1]:b[k]]
        lo = min(part)
        out.append(tuple(x - lo + 1 for x in part))
    return tuple(out)


def assemble_components(parts) -> tuple:
    """Inverse of :func:`factor_components`."""
    out, offset = [], 0
    for p in parts:
        out.extend(x + offset for x in p)
        offset += max(p, default=0)
    return tuple(out)


@dataclass(frozen=True)
class PartitionPoset:
    """All ordered partitions refining ``char_function(ns)``; a product of permutohedra."""

    ns: tuple
    elements: tuple

    @property
    def top(self) -> tuple:
        return char_function(self.ns)

    def leq(self, opart, other) -> bool:
        return precedes(opart, other)

    def strict_up(self) -> dict:
        idx = range(len(self.elements))
        return {i: {j for j in idx if j != i and precedes(self.elements[i], self.elements[j])}
                for i in idx}


def enumerate_ordered_partitions(ns) -> PartitionPoset:
    ns = composition(ns)
    blocks = [ordered_partitions(m) for m in ns]
    elems = sorted(assemble_components(p) for p in itertools.product(*blocks))
    return PartitionPoset(ns, tuple(elems))


def ordered_bell(n: int) -> int:
    """Number of ordered partitions of an n-set, by inclusion-exclusion."""
    return sum(sum((-1) ** (k - j) * math.comb(k, j) * j ** n for j in range(k + 1))
               for k in range(n + 1)) if n else 1


# --- permutations -------------------------------------------------------------

def perm_sign(p) -> int:
    seen, sign = set(), 1
    for i in range(1, len(p) + 1):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j - 1]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def compose(p, q) -> tuple:
    """p o q."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse(p) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return tuple(out)


def block_permutations(ns):
    """Permutations mapping every part of the composition to itself."""
    b = breaks(ns)
    ranges = [itertools.permutations(range(b[k] + 1, b[k + 1] + 1)) for k in range(len(ns))]
    for parts in itertools.product(*ranges):
        yield tuple(x for p in parts for x in p)


# --- level functions and simplices ----------------------------------------------

def steps_partition(steps) -> tuple:
    """Partition whose i-th value is 1 plus the number of cuts among the first i-1 gaps."""
    return (1,) + tuple(1 + s for s in itertools.accumulate(steps))


def threshold(levels, j: int) -> tuple:
    return tuple(0 if t <= j else 1 for t in levels)


def lower_map(levels, j: int) -> tuple:
    """Drop every level above j by one."""
    return tuple(t - 1 if t > j else t for t in levels)


def level_functions(n: int, d: int):
    """Level functions {1..n-1} -> {0..d+1} that hit every level 1..d."""
    need = set(range(1, d + 1))
    for levels in itertools.product(range(d + 2), repeat=max(n - 1, 0)):
        if need <= set(levels):
            yield levels


def level_functions_for(ns, d: int):
    """Level functions for a composition: inner part boundaries sit at level d + 1."""
    ns = composition(ns)
    n = sum(ns)
    inner = breaks(ns)[1:-1]
    free = [i for i in range(1, n) if i not in inner]
    need = set(range(1, d + 1))
    for vals in itertools.product(range(d + 2), repeat=len(free)):
        if need <= set(vals):
            levels = [d + 1] * (n - 1)
            for i, x in zip(free, vals):
                levels[i - 1] = x
            yield tuple(levels)


def top_level_functions(ns):
    """Top-dimensional level functions: a bijection onto 1..d off the part boundaries."""
    ns = composition(ns)
    n, l = sum(ns), len(ns)
    d = n - l
    inner = breaks(ns)[1:-1]
    free = [i for i in range(1, n) if i not in inner]
    for vals in itertools.permutations(range(1, d + 1)):
        levels = [d + 1] * (n - 1)
        for i, x in zip(free, vals):
            levels[i - 1] = x
        yield tuple(levels)


def simplex_vertices(arrangement, levels, d: int) -> tuple:
    """The d+1 vertices of the simplex: threshold the levels at 0..d, then permute.

    Vertices come out strictly increasing in the refinement order.
    """
    if not set(range(1, d + 1)) <= set(levels) or any(not 0 <= t <= d + 1 for t in levels):
        raise PCSError(f"levels {levels} are not a level function of dimension {d}")
    return tuple(compose(steps_partition(threshold(levels, j)), arrangement) for j in range(d + 1))


@dataclass(frozen=True)
class PermSimplex:
    arrangement: tuple
    levels: tuple
    d: int

    @classmethod
    def canonical(cls, arrangement, levels, d: int) -> "PermSimplex":
        """Same simplex, with the lexicographically least permutation."""
        finest = steps_partition(threshold(levels, 0))
        other = compose(finest, arrangement)
        used, out = set(), []
        for target in other:
            x = min(x for x in range(1, len(arrangement) + 1) if x not in used and finest[x - 1] == target)
            used.add(x)
            out.append(x)
        return cls(tuple(out), tuple(levels), d)

    def vertices(self) -> tuple:
        return simplex_vertices(self.arrangement, self.levels, self.d)


def level_sign(ns, levels) -> int:
    """Sign of the levels read off the non-boundary positions, as a permutation."""
    ns = composition(ns)
    n, l = sum(ns), len(ns)
    inner = set(breaks(ns)[1:-1])
    free = [i for i in range(1, n) if i not in inner]
    perm = tuple(levels[i - 1] for i in free)
    if sorted(perm) != list(range(1, n - l + 1)) or any(levels[b - 1] != n - l + 1 for b in inner):
        raise PCSError(f"levels {levels} are not top-dimensional for {ns}")
    return perm_sign(perm)


def subset_sign(subset, b: int = 0) -> int:
    """+1 iff sum(a - b for a in subset) has the parity of 1 + 2 + ... + |subset|."""
    subset = list(subset)
    r = len(subset)
    return 1 if (sum(a - b for a in subset) - r * (r + 1) // 2) % 2 == 0 else -1


def shuffle_permutation(ns, k: int, subset) -> tuple:
    """Move subset onto the first slots of part k, keeping both orders; identity elsewhere."""
    ns = composition(ns)
    b = breaks(ns)
    block = range(b[k - 1] + 1, b[k] + 1)
    subset = sorted(subset)
    if not subset or len(subset) >= ns[k - 1] or not set(subset) <= set(block):
        raise PCSError(f"subset {subset} must be a proper nonempty subset of block {k} = {list(block)}")
    shuffle = list(range(1, sum(ns) + 1))
    rest = [i for i in block if i not in subset]
    for slot, i in enumerate(subset + rest, b[k - 1] + 1):
        shuffle[i - 1] = slot
    return tuple(shuffle)


def split_levels(ns, levels):
    """Locate the top level: ``(k, r, lowered)`` with the top level at offset r of part k."""
    ns = composition(ns)
    d = sum(ns) - len(ns)
    if d < 1:
        raise PCSError(f"{ns} has dimension 0 and no splits")
    b = breaks(ns)
    pos = levels.index(d) + 1
    k = max(j for j in range(1, len(ns) + 1) if b[j - 1] < pos)
    return k, pos - b[k - 1], lower_map(levels, d)


# --- fundamental cycles ------------------------------------------------------

def _check_budget(ns, budget):
    n, l = sum(ns), len(ns)
    size = math.prod(math.factorial(m) for m in ns) * math.factorial(n - l)
    if budget is not None and size > budget:
        raise BudgetExceeded(f"fundamental cycle of {ns} has {size} simplices (budget {budget})")


@lru_cache(maxsize=None)
def _fundamental_cycle(ns) -> tuple:
    out = {}
    for arrangement in block_permutations(ns):
        s = perm_sign(arrangement)
        for levels in top_level_functions(ns):
            out[simplex_vertices(arrangement, levels, sum(ns) - len(ns))] = s * level_sign(ns, levels)
    return tuple(sorted(out.items()))


def fundamental_cycle(ns, budget=DEFAULT_BUDGET) -> dict:
    """Signed sum of all top simplices: sign of the permutation times sign of the levels."""
    ns = composition(ns)
    if not ns:
        return {((),): 1}
    _check_budget(ns, budget)
    return dict(_fundamental_cycle(ns))


def permutohedral_boundary(ns, budget=DEFAULT_BUDGET) -> list:
    """Decompose the boundary of the fundamental cycle over the splits of each part.

    Returns ``(k, r, subset, coefficient, chain)`` with subset of part k in
    absolute positions and ``chain`` the fundamental cycle of the split
    composition pulled back along :func:`shuffle_permutation`.
    """
    ns = composition(ns)
    b = breaks(ns)
    terms = []
    for k in range(1, len(ns) + 1):
        for r in range(1, ns[k - 1]):
            sub = fundamental_cycle(split_part(ns, k, r), budget)
            for subset in itertools.combinations(range(b[k - 1] + 1, b[k] + 1), r):
                shuffle = shuffle_permutation(ns, k, subset)
                coeff = (-1) ** (k + r + b[k - 1] + 1) * subset_sign(subset, b[k - 1])
                terms.append((k, r, subset, coeff, pushforward(sub, lambda opart, shuffle=shuffle: compose(opart, shuffle))))
    return terms
