import json

import pytest

from cubehom.cellular import (
    assemble_complex,
    cell_cycle,
    cellular_boundary,
    incidence_sign,
    index_iso,
    index_iso_chain,
    inverse_index_iso,
    inverse_index_iso_chain,
)
from cubehom.chains import build_poset, chain_face, chain_type, enumerate_chains
from cubehom.errors import PCSError
from cubehom.pcs import Cube, PrecubicalSet
from cubehom.permutohedra import breaks, enumerate_ordered_partitions, ordered_partitions

SQUARE = "0,0|0,1"


def test_index_iso_examples(sq):
    cset = sq[0]
    assert index_iso(cset, SQUARE, (1, 1)) == (SQUARE,)
    assert index_iso(cset, SQUARE, (1, 2)) == ("0,0|0", "1,0|1")
    assert index_iso(cset, SQUARE, (2, 1)) == ("0,0|1", "0,1|0")
    for opart in ordered_partitions(2):
        assert inverse_index_iso(cset, SQUARE, index_iso(cset, SQUARE, opart)) == opart
    with pytest.raises(PCSError):
        index_iso(cset, SQUARE, (1,))


def test_index_iso_chain_examples(sq, hc3):
    cset = sq[0]
    assert {index_iso_chain(cset, (SQUARE,), opart) for opart in [(1, 2), (2, 1)]} == {
        c for c in enumerate_chains(*sq) if c != (SQUARE,)}
    cset = hc3[0]
    c = next(c for c in enumerate_chains(*hc3) if chain_type(cset, c) == (2, 1))
    oposet = enumerate_ordered_partitions((2, 1))
    down = {index_iso_chain(cset, c, opart) for opart in oposet.elements}
    assert len(down) == 3 and c in down
    assert all(chain_type(cset, b) == (1, 1, 1) for b in down - {c})
    with pytest.raises(PCSError):
        index_iso_chain(cset, c, (2, 1, 1))


def test_inverse_rejects_non_descendants(hsq):
    cset = hsq[0]
    a, b = enumerate_chains(*hsq)
    with pytest.raises(PCSError):
        inverse_index_iso_chain(cset, a, b)


def test_inverse_detects_ambiguity():
    # a square whose four vertices are one point: every vertex label collides
    cubes = [Cube("v", 0, ()), Cube("e", 1, (("v", "v"),)),
             Cube("s", 2, (("e", "e"), ("e", "e")))]
    cset = PrecubicalSet.from_cubes(cubes)
    with pytest.raises(PCSError, match="ambiguous"):
        inverse_index_iso(cset, "s", ("e", "e"))


def test_cell_cycle_examples(sq, hc3):
    cset = sq[0]
    cyc = cell_cycle(cset, ("0,0|0", "1,0|1"))
    assert cyc == {(("0,0|0", "1,0|1"),): 1}
    cyc = cell_cycle(cset, (SQUARE,))
    assert len(cyc) == 2 and sorted(cyc.values()) == [-1, 1]
    assert all(s[-1] == (SQUARE,) for s in cyc)
    cset = hc3[0]
    c = next(c for c in enumerate_chains(*hc3) if chain_type(cset, c) == (2, 1))
    assert sorted(cell_cycle(cset, c).values()) == [-1, 1]
    assert cell_cycle(cset, ()) == {((),): 1}


def test_boundary_examples(sq, hc3):
    cset = sq[0]
    assert cellular_boundary(cset, (SQUARE,)) == [
        (chain_face(cset, (SQUARE,), 1, (1,)), -1), (chain_face(cset, (SQUARE,), 1, (2,)), 1)]
    assert cellular_boundary(cset, ("0,0|0", "1,0|1")) == []
    cset = hc3[0]
    c = next(c for c in enumerate_chains(*hc3) if chain_type(cset, c) == (1, 2))
    assert cellular_boundary(cset, c) == [(chain_face(cset, c, 2, (1,)), -1), (chain_face(cset, c, 2, (2,)), 1)]


def test_sign_conventions_agree():
    # block-relative and absolute-position forms of the incidence sign
    from cubehom.permutohedra import subset_sign
    import itertools
    for ns in [(3,), (2, 2), (1, 3), (2, 1, 2), (4, 1)]:
        b = breaks(ns)
        for k, n in enumerate(ns, 1):
            for r in range(1, n):
                for subset in itertools.combinations(range(1, n + 1), r):
                    shifted = [a + b[k - 1] for a in subset]
                    assert incidence_sign(ns, k, subset) == \
                        (-1) ** (k + r + b[k - 1] + 1) * subset_sign(shifted, b[k - 1])


def test_assemble_examples(sq, hsq, hc3):
    cx = assemble_complex(hsq[0], build_poset(hsq[0], enumerate_chains(*hsq)))
    assert cx.counts() == [2] and cx.boundary == {}
    cx = assemble_complex(sq[0], build_poset(sq[0], enumerate_chains(*sq)))
    assert cx.counts() == [2, 1]
    assert sorted(cx.boundary[1].to_dense()) == [[-1], [1]]
    cx = assemble_complex(hc3[0], build_poset(hc3[0], enumerate_chains(*hc3)))
    assert cx.counts() == [6, 6]
    from cubehom.homology import smith_normal_form
    assert smith_normal_form(cx.boundary[1])[1] == 5


def test_dump_format(sq):
    cx = assemble_complex(sq[0], build_poset(sq[0], enumerate_chains(*sq)))
    doc = json.loads(cx.to_json())
    assert doc["boundary"]["1"]["shape"] == [2, 1]
    assert sorted(e[2] for e in doc["boundary"]["1"]["entries"]) == [-1, 1]
    assert doc["cells"]["1"] == [[SQUARE]]


def test_restrict(circle):
    cset, u, _ = circle
    cposet = build_poset(cset, enumerate_chains(cset, u, u, max_length=4))
    cx = assemble_complex(cset, cposet)
    assert cx.strata() == [0, 2, 4]
    assert cx.restrict(2).counts() == [1]
