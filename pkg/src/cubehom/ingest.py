"""Reading, writing and generating pre-cubical sets.

On-disk format (``.pcs.json``)::

    {"dims": 2,
     "source": "0,0", "target": "1,1",
     "cubes": [{"id": "0,0", "dim": 0, "faces": []},
               ...
               {"id": "0,0|0,1", "dim": 2, "faces": [["0,0|1", "1,0|1"], ["0,0|0", "0,1|0"]]}]}

``faces[i-1]`` is the pair ``[d^0_i, d^1_i]``.  Source and target are optional.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from .errors import PCSError
from .pcs import Cube, PrecubicalSet


def parse_pcs(text: str):
    """Parse a ``.pcs.json`` document into ``(complex, source, target)``.

    Only structural checks are made here; run
    :func:`cubehom.pcs.validate_precubical` for the cubical identities.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PCSError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "cubes" not in doc:
        raise PCSError("top level must be an object with a 'cubes' array")
    dims = doc.get("dims", None)
    cubes = []
    for n, entry in enumerate(doc["cubes"]):
        try:
            cid, dim, faces = entry["id"], entry["dim"], entry.get("faces", [])
        except (KeyError, TypeError):
            raise PCSError(f"cube #{n}: needs 'id' and 'dim'") from None
        if not isinstance(cid, str) or not isinstance(dim, int) or isinstance(dim, bool):
            raise PCSError(f"cube #{n}: 'id' must be a string and 'dim' an integer")
        if dims is not None and dim > dims:
            raise PCSError(f"cube {cid!r}: dim {dim} exceeds declared dims {dims}")
        if len(faces) != dim or any(len(pair) != 2 for pair in faces):
            raise PCSError(f"cube {cid!r}: expected {dim} face pairs")
        cubes.append(Cube(cid, dim, tuple((str(a), str(b)) for a, b in faces)))
    cset = PrecubicalSet.from_cubes(cubes)
    origin, goal = doc.get("source"), doc.get("target")
    for name, x in (("source", origin), ("target", goal)):
        if x is not None and (x not in cset or cset.dim(x) != 0):
            raise PCSError(f"{name} {x!r} is not a vertex")
    return cset, origin, goal


def serialize_pcs(cset: PrecubicalSet, origin=None, goal=None) -> str:
    """Deterministic ``.pcs.json`` text, one cube per line."""
    head = {"dims": max(cset.max_dim, 0)}
    if origin is not None:
        head["source"] = origin
    if goal is not None:
        head["target"] = goal
    lines = []
    for cid in sorted(cset.cubes, key=lambda x: (cset.dim(x), x)):
        c = cset[cid]
        lines.append(json.dumps({"id": c.id, "dim": c.dim, "faces": [list(p) for p in c.faces]}))
    body = json.dumps(head)[:-1]
    if not lines:
        return body + ', "cubes": []}\n'
    return body + ', "cubes": [\n  ' + ",\n  ".join(lines) + "\n]}\n"


# --- grid complexes ----------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    extents: tuple
    forbidden: tuple = ()

    def __post_init__(self):
        ext = tuple(int(e) for e in self.extents)
        if not ext or any(e < 1 for e in ext):
            raise PCSError("extents must be a nonempty list of positive integers")
        cells = []
        for cell in self.forbidden:
            cell = tuple(int(x) for x in cell)
            if len(cell) != len(ext) or any(not 0 <= x < e for x, e in zip(cell, ext)):
                raise PCSError(f"forbidden cell {list(cell)} outside extents {list(ext)}")
            cells.append(cell)
        object.__setattr__(self, "extents", ext)
        object.__setattr__(self, "forbidden", tuple(sorted(set(cells))))

    @classmethod
    def from_json(cls, text: str) -> "GridSpec":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PCSError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return cls(tuple(doc["extents"]), tuple(tuple(c) for c in doc.get("forbidden", [])))


def grid_cube_id(base, axes=()) -> str:
    s = ",".join(map(str, base))
    return s + "|" + ",".join(map(str, axes)) if axes else s


def generate_grid_complex(spec: GridSpec):
    """Cubical grid on prod [0, e_i] with the open forbidden unit boxes removed.

    A top-dimensional box is kept unless forbidden.  A lower cell is removed
    only if every unit box of Z^d around it is forbidden; boxes outside the
    grid never are, so the boundary of the grid is always kept.

    Returns ``(complex, source, target)`` with source the origin and target the
    far corner.
    """
    ext, d = spec.extents, len(spec.extents)
    forbidden = set(spec.forbidden)

    def kept(base, axes):
        if len(axes) == d:
            return base not in forbidden
        free = [i for i in range(d) if i not in axes]
        for shift in itertools.product((0, 1), repeat=len(free)):
            q = list(base)
            for i, s in zip(free, shift):
                q[i] -= s
            if tuple(q) not in forbidden:
                return True
        return False

    cubes = []
    for base in itertools.product(*(range(e + 1) for e in ext)):
        for k in range(d + 1):
            for axes in itertools.combinations(range(d), k):
                if any(base[i] == ext[i] for i in axes) or not kept(base, axes):
                    continue
                faces = []
                for a in axes:
                    rest = tuple(x for x in axes if x != a)
                    top = list(base)
                    top[a] += 1
                    faces.append((grid_cube_id(base, rest), grid_cube_id(top, rest)))
                cubes.append(Cube(grid_cube_id(base, axes), k, tuple(faces)))
    cset = PrecubicalSet.from_cubes(cubes)
    return cset, grid_cube_id((0,) * d), grid_cube_id(ext)


def random_grid_spec(rng: random.Random, max_extents=(3, 3), max_forbidden=4) -> GridSpec:
    """Random extents up to ``max_extents`` with up to ``max_forbidden`` forbidden cells."""
    ext = tuple(rng.randint(1, m) for m in max_extents)
    cells = list(itertools.product(*(range(e) for e in ext)))
    k = rng.randint(0, min(max_forbidden, len(cells)))
    return GridSpec(ext, tuple(rng.sample(cells, k)))


FIXTURES = ("sq", "hsq", "hc3", "annulus", "circle", "sq_corrupted")


def load_fixture(name: str):
    """(complex, source, target) for one of the shipped ``.pcs.json`` documents."""
    from importlib.resources import files

    if name not in FIXTURES:
        raise PCSError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return parse_pcs(files("cubehom").joinpath("data", f"{name}.pcs.json").read_text())
