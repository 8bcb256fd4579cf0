"""Finite pre-cubical sets.

A pre-cubical set stores, for every cube of dimension n, its 2n single faces
``d^eps_i`` (i = 1..n, eps = 0, 1).  Iterated faces are always computed
through single faces, so the composition law for face labels is something we
can test rather than something baked into the storage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import PCSError

STAR = "*"
ALPHABET = (0, 1, STAR)
MAX_DIM = 16


# --- face labels ---------------------------------------------------------

def face_label(values: Iterable) -> tuple:
    """Normalize ``values`` into a face label (a tuple over {0, 1, '*'})."""
    out = []
    for origin in values:
        if origin in ("0", "1"):
            origin = int(origin)
        if origin not in ALPHABET or isinstance(origin, bool):
            raise PCSError(f"bad face label entry {origin!r}")
        out.append(origin)
    return tuple(out)


def star_count(label) -> int:
    return sum(1 for x in label if x == STAR)


def compose_face_labels(label, tail_label) -> tuple:
    """Return h with d_g d_f = d_h.

    Off the starred positions of f, h agrees with f; the starred positions
    are filled in increasing order with the entries of g.
    """
    label, tail_label = face_label(label), face_label(tail_label)
    if len(tail_label) != star_count(label):
        raise PCSError(f"label of arity {len(tail_label)} cannot follow {label} ({star_count(label)} stars)")
    it = iter(tail_label)
    return tuple(next(it) if x == STAR else x for x in label)


def subset_label(n: int, zeros=(), ones=()) -> tuple:
    """Label d_{zeros, ones} of arity n; positions are 1-based."""
    lab = [STAR] * n
    for i in zeros:
        lab[i - 1] = 0
    for i in ones:
        if lab[i - 1] != STAR:
            raise PCSError("zero and one sets overlap")
        lab[i - 1] = 1
    return tuple(lab)


# --- cubes -----------------------------------------------------------------

@dataclass(frozen=True)
class Cube:
    id: str
    dim: int
    faces: tuple = ()  # faces[i-1] == (d^0_i id, d^1_i id)


class ValidationReport(NamedTuple):
    ok: bool
    violations: list  # (cube id, (i, j, eps, eta), message)


@dataclass(frozen=True, eq=False)
class PrecubicalSet:
    """Graded finite family of cubes with face maps.

    Construction checks structural well-formedness only (every face exists
    and has the right dimension); the cubical identities are checked by
    :func:`validate_precubical`.
    """

    cubes: Mapping[str, Cube]
    decoration: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        cubes = dict(self.cubes)
        for c in cubes.values():
            if c.dim < 0:
                raise PCSError(f"cube {c.id!r} has negative dimension")
            if c.dim > MAX_DIM:
                raise PCSError(f"cube {c.id!r} has dimension {c.dim} > {MAX_DIM}")
            if len(c.faces) != c.dim:
                raise PCSError(f"cube {c.id!r} of dim {c.dim} lists {len(c.faces)} face pairs")
            for i, pair in enumerate(c.faces, 1):
                for eps, fid in enumerate(pair):
                    if fid not in cubes:
                        raise PCSError(f"cube {c.id!r}: face d^{eps}_{i} refers to missing cube {fid!r}")
                    if cubes[fid].dim != c.dim - 1:
                        raise PCSError(
                            f"cube {c.id!r}: face d^{eps}_{i} = {fid!r} has dim "
                            f"{cubes[fid].dim}, expected {c.dim - 1}")
        object.__setattr__(self, "cubes", cubes)

    @classmethod
    def from_cubes(cls, cubes: Iterable[Cube], decoration=None) -> "PrecubicalSet":
        table = {}
        for c in cubes:
            if c.id in table:
                raise PCSError(f"duplicate cube id {c.id!r}")
            table[c.id] = c
        return cls(table, decoration or {})

    def __len__(self):
        return len(self.cubes)

    def __contains__(self, cid):
        return cid in self.cubes

    def __getitem__(self, cid) -> Cube:
        return self.cubes[cid]

    def dim(self, cid) -> int:
        return self.cubes[cid].dim

    @cached_property
    def max_dim(self) -> int:
        return max((c.dim for c in self.cubes.values()), default=-1)

    def graded(self, n: int) -> list:
        """Sorted ids of the n-cubes."""
        return sorted(c.id for c in self.cubes.values() if c.dim == n)

    def grading(self, dims=None) -> tuple:
        """Number of cubes in each dimension 0..dims; dims defaults to the top dimension."""
        top = self.max_dim if dims is None else dims
        return tuple(len(self.graded(n)) for n in range(top + 1))

    @property
    def vertices(self) -> list:
        return self.graded(0)

    def face(self, cid, i: int, eps: int) -> str:
        c = self.cubes[cid]
        if not 1 <= i <= c.dim:
            raise PCSError(f"direction {i} out of range for {c.dim}-cube {cid!r}")
        return c.faces[i - 1][eps]

    @cached_property
    def extremes(self) -> dict:
        """Map cube id -> (d^0 c, d^1 c)."""
        return {cid: extreme_vertices(self, cid) for cid in self.cubes}

    @cached_property
    def outgoing(self) -> dict:
        """Map vertex -> sorted ids of cubes (dim >= 1) starting there."""
        out = {origin: [] for origin in self.vertices}
        for cid, c in self.cubes.items():
            if c.dim >= 1:
                out[self.extremes[cid][0]].append(cid)
        for origin in out:
            out[origin].sort()
        return out


def apply_face(cset: PrecubicalSet, cid, label) -> str:
    """Evaluate d_f(c) = d_1^{f(1)} ... d_n^{f(n)} (c), starred slots skipped."""
    label = face_label(label)
    n = cset.dim(cid)
    if len(label) != n:
        raise PCSError(f"label of arity {len(label)} applied to {n}-cube {cid!r}")
    # apply the rightmost map first; lower indices are unaffected by it
    for i in range(n, 0, -1):
        if label[i - 1] != STAR:
            cid = cset.face(cid, i, label[i - 1])
    return cid


def extreme_vertices(cset: PrecubicalSet, cid) -> tuple:
    """(d^0 c, d^1 c) computed through the all-0 and all-1 labels."""
    n = cset.dim(cid)
    return apply_face(cset, cid, (0,) * n), apply_face(cset, cid, (1,) * n)


def validate_precubical(cset: PrecubicalSet) -> ValidationReport:
    violations = []
    for cid in sorted(cset.cubes):
        n = cset.dim(cid)
        for j in range(2, n + 1):
            for i in range(1, j):
                for eps in (0, 1):
                    for eta in (0, 1):
                        lhs = cset.face(cset.face(cid, j, eta), i, eps)
                        rhs = cset.face(cset.face(cid, i, eps), j - 1, eta)
                        if lhs != rhs:
                            violations.append((
                                cid, (i, j, eps, eta),
                                f"d^{eps}_{i} d^{eta}_{j} = {lhs!r} but "
                                f"d^{eta}_{j - 1} d^{eps}_{i} = {rhs!r}"))
    return ValidationReport(not violations, violations)


def is_proper(cset: PrecubicalSet):
    """Whether cubes are told apart by the set {d^0 c, d^1 c}.

    Returns ``(True, None)`` or ``(False, (id1, id2))``.
    """
    seen = {}
    for cid in sorted(cset.cubes):
        key = frozenset(cset.extremes[cid])
        if key in seen:
            return False, (seen[key], cid)
        seen[key] = cid
    return True, None


def has_no_loops(cset: PrecubicalSet):
    """Acyclicity of the vertex graph u -> v (one edge per cube of dim >= 1).

    Returns ``(True, None)`` or ``(False, cycle)`` with cycle[0] == cycle[-1].
    """
    succ = {origin: sorted({cset.extremes[c][1] for c in cset.outgoing[origin]}) for origin in cset.vertices}
    color = dict.fromkeys(succ, 0)
    for root in cset.vertices:
        if color[root]:
            continue
        color[root] = 1
        path = [root]
        stack = [iter(succ[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                color[path.pop()] = 2
            elif color[nxt] == 1:
                return False, path[path.index(nxt):] + [nxt]
            elif color[nxt] == 0:
                color[nxt] = 1
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return True, None


def covering_truncation(cset: PrecubicalSet, n: int) -> PrecubicalSet:
    """The truncated non-looping length covering.

    d-cubes are pairs (c, k) with 0 <= k <= n - d, named ``"<id>@<k>"``;
    faces shift the level by eps.  ``decoration`` maps each new id to
    ``(original id, k)``.
    """
    if n < 0:
        raise PCSError("truncation level must be non-negative")

    def name(cid, k):
        return f"{cid}@{k}"

    cubes, deco = [], {}
    for cid in sorted(cset.cubes):
        c = cset[cid]
        for k in range(n - c.dim + 1):
            faces = tuple((name(d0, k), name(d1, k + 1)) for d0, d1 in c.faces)
            cubes.append(Cube(name(cid, k), c.dim, faces))
            deco[name(cid, k)] = (cid, k)
    return PrecubicalSet.from_cubes(cubes, deco)


def is_covering_proper(cset: PrecubicalSet):
    """Properness of the non-looping length covering.

    Equivalent to: no two distinct cubes of equal dimension share the
    ordered pair (d^0, d^1).
    """
    seen = {}
    for cid in sorted(cset.cubes):
        key = (cset.dim(cid), cset.extremes[cid])
        if key in seen:
            return False, (seen[key], cid)
        seen[key] = cid
    return True, None
