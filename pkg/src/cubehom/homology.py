"""Integer homology: Smith normal form, order complexes, reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import PCSError


class SparseMatrix(NamedTuple):
    rows: int
    cols: int
    entries: dict  # (i, j) -> nonzero int

    @classmethod
    def from_dense(cls, M) -> "SparseMatrix":
        M = [list(r) for r in M]
        cols = len(M[0]) if M else 0
        return cls(len(M), cols, {(i, j): a for i, r in enumerate(M) for j, a in enumerate(r) if a})

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), a in self.entries.items():
            out[i][j] = a
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): a for (i, j), a in self.entries.items()})

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise PCSError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        by_row = {}
        for (k, j), b in other.entries.items():
            by_row.setdefault(k, []).append((j, b))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, {ij: x for ij, x in out.items() if x})

    def is_zero(self) -> bool:
        return not self.entries


def _as_sparse(M) -> SparseMatrix:
    return M if isinstance(M, SparseMatrix) else SparseMatrix.from_dense(M)


def smith_normal_form(M):
    """Invariant factors ``d_1 | d_2 | ... | d_r`` and the rank r of an integer matrix.

    Sparse elimination with a minimal-absolute-value pivot; Python integers
    keep intermediate growth exact.  The diagonal found by elimination is
    normalized to the divisibility chain with gcd/lcm swaps.
    """
    M = _as_sparse(M)
    rows = {}
    cols = {}
    for (i, j), a in M.entries.items():
        rows.setdefault(i, {})[j] = a
        cols.setdefault(j, set()).add(i)

    def set_entry(i, j, a):
        if a:
            rows.setdefault(i, {})[j] = a
            cols.setdefault(j, set()).add(i)
        else:
            rows[i].pop(j, None)
            cols[j].discard(i)

    diag = []
    while rows:
        best = None
        for i, r in rows.items():
            for j, a in r.items():
                key = (abs(a), len(r), len(cols[j]))
                if best is None or key < best[0]:
                    best = (key, i, j, a)
        _, pi, pj, p = best
        prow = dict(rows[pi])
        done = True
        for i in list(cols[pj]):
            if i == pi:
                continue
            q = rows[i][pj] // p
            for j, a in prow.items():
                set_entry(i, j, rows[i].get(j, 0) - q * a)
            if rows[i].get(pj):
                done = False
            if not rows[i]:
                del rows[i]
        if not done:
            continue
        # column operations only touch the pivot row once its column is clear
        for j, a in list(rows[pi].items()):
            if j != pj:
                set_entry(pi, j, a - (a // p) * p)
        if len(rows[pi]) > 1:
            continue
        diag.append(abs(p))
        set_entry(pi, pj, 0)
        del rows[pi]
        cols.pop(pj, None)
        for j in [j for j, s in cols.items() if not s]:
            del cols[j]
    diag.sort()
    # enforce d_i | d_{i+1}
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = math.gcd(a, b)
            diag[i], diag[j] = g, a * b // g
    return diag, len(diag)


@dataclass
class HomologyReport:
    betti: list = field(default_factory=list)
    torsion: list = field(default_factory=list)  # per degree, list of factors > 1

    def degree(self, d):
        if d < len(self.betti):
            return self.betti[d], list(self.torsion[d])
        return 0, []

    def trimmed(self) -> "HomologyReport":
        b, t = list(self.betti), [list(x) for x in self.torsion]
        while b and b[-1] == 0 and not t[-1]:
            b.pop()
            t.pop()
        return HomologyReport(b, t)

    def __eq__(self, other):
        a, b = self.trimmed(), other.trimmed()
        return a.betti == b.betti and a.torsion == b.torsion

    def euler(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.betti))

    def lines(self) -> list:
        out = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            parts = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{x}" for x in t]
            out.append(f"H_{d} = " + (" ⊕ ".join(parts) if parts else "0"))
        return out or ["H_* = 0"]

    def __str__(self):
        return "\n".join(self.lines())

    def to_dict(self) -> dict:
        r = self.trimmed()
        return {"betti": r.betti, "torsion": r.torsion}


def homology_from_boundaries(counts, boundaries) -> HomologyReport:
    """H_d = ker d_d / im d_{d+1} over Z.

    ``counts[d]`` is the number of d-cells and ``boundaries[d]`` the matrix
    of d_d (rows: (d-1)-cells, columns: d-cells), dense or sparse.
    """
    top = len(counts) - 1
    ranks, factors = {}, {}
    for d in range(1, top + 1):
        M = boundaries.get(d)
        if M is None:
            ranks[d], factors[d] = 0, []
            continue
        M = _as_sparse(M)
        if (M.rows, M.cols) != (counts[d - 1], counts[d]):
            raise PCSError(f"boundary {d} has shape {M.rows}x{M.cols}, expected {counts[d - 1]}x{counts[d]}")
        factors[d], ranks[d] = smith_normal_form(M)
    betti, torsion = [], []
    for d in range(top + 1):
        betti.append(counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0))
        torsion.append([x for x in factors.get(d + 1, []) if x > 1])
    return HomologyReport(betti, torsion)


def compare_reports(a: HomologyReport, b: HomologyReport):
    """``(match, diffs)`` with diffs a list of (degree, a-side, b-side)."""
    diffs = []
    for d in range(max(len(a.betti), len(b.betti))):
        x, y = a.degree(d), b.degree(d)
        if x != y:
            diffs.append((d, x, y))
    return not diffs, diffs


# --- order complexes ----------------------------------------------------------

@dataclass
class SimplicialComplexRep:
    """Nerve of a finite poset; simplices are index tuples in increasing order."""

    vertices: list
    simplices: dict  # d -> sorted list of tuples

    @property
    def top_dim(self) -> int:
        return max((d for d, s in self.simplices.items() if s), default=-1)

    def counts(self, keep=None) -> list:
        return [sum(1 for s in self.simplices.get(d, []) if keep is None or keep(s))
                for d in range(self.top_dim + 1)]

    def euler(self, keep=None) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.counts(keep)))

    def boundary_matrices(self, keep=None) -> tuple:
        """(counts, matrices) of the chain complex on simplices passing ``keep``.

        With ``keep`` true exactly off a subcomplex this is the relative chain
        complex; faces failing ``keep`` are dropped.
        """
        sel = {d: [s for s in self.simplices.get(d, []) if keep is None or keep(s)]
               for d in range(self.top_dim + 1)}
        index = {d: {s: i for i, s in enumerate(ss)} for d, ss in sel.items()}
        mats = {}
        for d in range(1, self.top_dim + 1):
            entries = {}
            for j, s in enumerate(sel[d]):
                for i in range(len(s)):
                    row = index[d - 1].get(s[:i] + s[i + 1:])
                    if row is not None:
                        entries[row, j] = -1 if i % 2 else 1
            mats[d] = SparseMatrix(len(sel[d - 1]), len(sel[d]), entries)
        return [len(sel[d]) for d in range(self.top_dim + 1)], mats

    def homology(self, keep=None) -> HomologyReport:
        counts, mats = self.boundary_matrices(keep)
        return homology_from_boundaries(counts, mats)


def nerve_of_poset(elements, strict_up) -> SimplicialComplexRep:
    """Order complex: every totally ordered subset is a simplex.

    ``strict_up[i]`` is the set of indices strictly above element i.
    Simplices are listed bottom to top.
    """
    simplices = {}

    def grow(simplex, candidates):
        simplices.setdefault(len(simplex) - 1, []).append(simplex)
        for j in sorted(candidates):
            grow(simplex + (j,), candidates & strict_up[j])

    for i in range(len(elements)):
        grow((i,), set(strict_up[i]))
    return SimplicialComplexRep(list(elements), {d: sorted(s) for d, s in simplices.items()})
