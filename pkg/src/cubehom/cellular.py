"""Cellular chain complex of the cube-chain poset.

The downset of a chain of type ``ns`` is identified with the product of
permutohedra on ``ns`` (:func:`index_iso_chain`).  Each chain carries a
cell cycle, the fundamental cycle of that product pushed forward along the
identification, and the cellular boundary is given by a closed signed
formula over the block splits of :func:`cubehom.chains.chain_face`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .chains import ChainPoset, chain_dim, chain_face, chain_length, chain_type
from .errors import EnumerationError, PCSError
from .homology import SparseMatrix
from .permutohedra import (
    assemble_components,
    breaks,
    factor_components,
    fundamental_cycle,
    perm_sign,
    subset_sign,
    shuffle_permutation,
)
from .pcs import STAR, PrecubicalSet, apply_face
from .simplicial import pushforward


def block_label(s: int, opart) -> tuple:
    """Face label selecting block s of f: '*' on f = s, 1 below, 0 above."""
    return tuple(STAR if x == s else (1 if x < s else 0) for x in opart)


def index_iso(cset: PrecubicalSet, c, opart) -> tuple:
    """The chain of faces of c cut out by the blocks of an ordered partition."""
    if len(opart) != cset.dim(c):
        raise PCSError(f"partition of arity {len(opart)} for {cset.dim(c)}-cube {c!r}")
    return tuple(apply_face(cset, c, block_label(s, opart)) for s in range(1, max(opart, default=0) + 1))


@lru_cache(maxsize=4096)
def _vertex_table(cset: PrecubicalSet, c) -> dict:
    n = cset.dim(c)
    table = {}
    for ones in itertools.product((0, 1), repeat=n):
        table.setdefault(apply_face(cset, c, ones), []).append(frozenset(i for i, x in enumerate(ones, 1) if x))
    return table


def inverse_index_iso(cset: PrecubicalSet, c, chain) -> tuple:
    """Inverse of :func:`index_iso`: the ordered partition producing chain.

    Each cube of the chain is located as a face of c through its extreme
    vertices; raises :class:`PCSError` when chain is not below (c) or when a
    vertex of c is not uniquely labelled (the complex is not proper).
    """
    table = _vertex_table(cset, c)

    def locate(x):
        hits = table.get(x)
        if not hits:
            raise PCSError(f"{x!r} is not a vertex of {c!r}")
        if len(hits) > 1:
            raise PCSError(f"vertex {x!r} of {c!r} is ambiguous (the complex is not proper)")
        return hits[0]

    n = cset.dim(c)
    opart = [0] * n
    prev = frozenset()
    for k, b in enumerate(chain, 1):
        lo, hi = (locate(x) for x in cset.extremes[b])
        if lo != prev or not lo < hi:
            raise PCSError(f"{tuple(chain)} is not below ({c!r},)")
        for i in hi - lo:
            opart[i - 1] = k
        prev = hi
    if prev != frozenset(range(1, n + 1)):
        raise PCSError(f"{tuple(chain)} is not below ({c!r},)")
    opart = tuple(opart)
    if index_iso(cset, c, opart) != tuple(chain):
        raise PCSError(f"{tuple(chain)} is not below ({c!r},)")
    return opart


def index_iso_chain(cset: PrecubicalSet, chain, opart) -> tuple:
    """Index isomorphism for a chain: concatenate the block-wise images."""
    parts = factor_components(opart, chain_type(cset, chain))
    return tuple(itertools.chain.from_iterable(index_iso(cset, c, p) for c, p in zip(chain, parts)))


def inverse_index_iso_chain(cset: PrecubicalSet, chain, b) -> tuple:
    """Inverse of :func:`index_iso_chain`; raises :class:`PCSError` unless b <= chain."""
    chain, b = tuple(chain), tuple(b)
    if chain_length(cset, b) != chain_length(cset, chain):
        raise PCSError("chains of different length are incomparable")
    parts, pos = [], 0
    for c in chain:
        need, piece = cset.dim(c), []
        while need > 0 and pos < len(b):
            piece.append(b[pos])
            need -= cset.dim(b[pos])
            pos += 1
        if need != 0:
            raise PCSError(f"{b} does not split along the blocks of {chain}")
        parts.append(inverse_index_iso(cset, c, piece))
    return assemble_components(parts)


def cell_cycle(cset: PrecubicalSet, chain) -> dict:
    """Fundamental cycle of the chain's permutohedra pushed into the nerve of chains."""
    chain = tuple(chain)
    if not chain:
        return {(chain,): 1}
    cyc = fundamental_cycle(chain_type(cset, chain))
    return pushforward(cyc, lambda opart: index_iso_chain(cset, chain, opart))


def incidence_sign(type_, k: int, subset) -> int:
    """Sign of the face splitting block k along subset (positions 1..dim of block k)."""
    b = breaks(type_)
    return (-1) ** (b[k - 1] + k + len(subset) + 1) * subset_sign(subset)


def cellular_boundary(cset: PrecubicalSet, chain) -> list:
    """Signed codimension-one faces ``[(face chain, coefficient), ...]``."""
    chain = tuple(chain)
    type_ = chain_type(cset, chain)
    b = breaks(type_)
    out = []
    for k, n in enumerate(type_, 1):
        for r in range(1, n):
            for subset in itertools.combinations(range(1, n + 1), r):
                coeff = incidence_sign(type_, k, subset)
                shifted = [a + b[k - 1] for a in subset]
                # same sign with absolute positions, and as the sign of the shuffle
                alt = (-1) ** (k + r + b[k - 1] + 1) * subset_sign(shifted, b[k - 1])
                assert alt == coeff
                assert perm_sign(shuffle_permutation(type_, k, shifted)) == subset_sign(subset)
                out.append((chain_face(cset, chain, k, subset), coeff))
    return out


@dataclass
class CellularComplex:
    """Cells per dimension and sparse boundary matrices.

    ``boundary[d]`` has rows indexed by the (d-1)-cells and columns by the
    d-cells.
    """

    cells: dict = field(default_factory=dict)  # d -> list of chains
    boundary: dict = field(default_factory=dict)  # d -> SparseMatrix
    lengths: dict = field(default_factory=dict)  # chain -> length

    @property
    def top_dim(self) -> int:
        return max(self.cells, default=-1)

    def counts(self) -> list:
        return [len(self.cells.get(d, [])) for d in range(self.top_dim + 1)]

    def strata(self) -> list:
        return sorted(set(self.lengths.values()))

    def restrict(self, length: int) -> "CellularComplex":
        """Sub-complex on the chains of one length."""
        keep = {d: [c for c in cs if self.lengths[c] == length] for d, cs in self.cells.items()}
        out = CellularComplex(lengths={c: length for cs in keep.values() for c in cs})
        top = max((d for d, cs in keep.items() if cs), default=-1)
        out.cells = {d: keep.get(d, []) for d in range(top + 1)}
        for d in range(1, top + 1):
            rows = {c: i for i, c in enumerate(self.cells[d - 1])}
            cols = {c: j for j, c in enumerate(self.cells[d])}
            new_r = {c: i for i, c in enumerate(out.cells[d - 1])}
            new_c = {c: j for j, c in enumerate(out.cells[d])}
            old = self.boundary[d]
            inv_r = {i: c for c, i in rows.items()}
            inv_c = {j: c for c, j in cols.items()}
            entries = {}
            for (i, j), a in old.entries.items():
                if inv_c[j] in new_c:
                    entries[new_r[inv_r[i]], new_c[inv_c[j]]] = a
            out.boundary[d] = SparseMatrix(len(out.cells[d - 1]), len(out.cells[d]), entries)
        return out

    def check_dd(self) -> bool:
        for d in range(2, self.top_dim + 1):
            if not self.boundary[d - 1].matmul(self.boundary[d]).is_zero():
                return False
        return True

    def to_json(self) -> str:
        doc = {
            "cells": {str(d): [list(c) for c in cs] for d, cs in self.cells.items()},
            "lengths": {str(d): [self.lengths[c] for c in cs] for d, cs in self.cells.items()},
            "boundary": {str(d): {"shape": [m.rows, m.cols],
                                  "entries": [[i, j, a] for (i, j), a in sorted(m.entries.items())]}
                         for d, m in self.boundary.items()},
        }
        return json.dumps(doc, indent=1, sort_keys=True)


def cell_sort_key(cset: PrecubicalSet, chain):
    return chain_length(cset, chain), chain_type(cset, chain), chain


def assemble_complex(cset: PrecubicalSet, poset: ChainPoset) -> CellularComplex:
    """Cellular chain complex on the chains of ``poset``, boundaries from the closed formula."""
    cx = CellularComplex()
    by_dim = {}
    for c in poset.elements:
        by_dim.setdefault(chain_dim(cset, c), []).append(c)
    top = max(by_dim, default=-1)
    cx.cells = {d: sorted(by_dim.get(d, []), key=lambda c: cell_sort_key(cset, c)) for d in range(top + 1)}
    cx.lengths = {c: chain_length(cset, c) for c in poset.elements}
    for d in range(1, top + 1):
        rows = {c: i for i, c in enumerate(cx.cells[d - 1])}
        entries = {}
        for j, c in enumerate(cx.cells[d]):
            for child, coeff in cellular_boundary(cset, c):
                if child not in rows:
                    raise EnumerationError(f"face {child} of {c} is not enumerated")
                if cx.lengths[child] != cx.lengths[c]:
                    raise EnumerationError(f"incidence across length strata: {child} < {c}")
                if (rows[child], j) in entries:
                    raise EnumerationError(f"face {child} of {c} arises twice")
                entries[rows[child], j] = coeff
        cx.boundary[d] = SparseMatrix(len(cx.cells[d - 1]), len(cx.cells[d]), entries)
    return cx
