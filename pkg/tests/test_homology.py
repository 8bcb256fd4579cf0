import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cubehom.chains import build_poset, enumerate_chains
from cubehom.errors import PCSError
from cubehom.homology import (
    HomologyReport,
    SparseMatrix,
    compare_reports,
    homology_from_boundaries,
    nerve_of_poset,
    smith_normal_form,
)
from cubehom.permutohedra import enumerate_ordered_partitions
from cubehom.simplicial import chain_add, pushforward, scale_chain, simplicial_boundary, support_vertices


def test_snf_examples():
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form([[2, 4], [6, 8]]) == ([2, 4], 2)
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == ([1, 1, 1], 3)
    assert smith_normal_form(SparseMatrix(0, 3, {})) == ([], 0)


def test_snf_large_entries():
    big = 10 ** 30
    assert smith_normal_form([[big, 0], [0, big * 3]]) == ([big, 3 * big], 2)


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_against_reference(M):
    factors, rank = smith_normal_form(M)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    assert (factors, rank) == smith_normal_form(SparseMatrix.from_dense(M).transpose())
    ref = sympy.Matrix(M)
    assert rank == ref.rank()
    # product of the first k factors is the gcd of the k x k minors
    if rank:
        minors = [ref.extract(list(r), list(c)).det()
                  for r in _subsets(len(M), rank) for c in _subsets(len(M[0]), rank)]
        assert math.prod(factors) == math.gcd(*[int(x) for x in minors])


def _subsets(n, k):
    import itertools
    return itertools.combinations(range(n), k)


def test_homology_from_boundaries():
    # circle: two vertices, two edges
    rep = homology_from_boundaries([2, 2], {1: [[-1, -1], [1, 1]]})
    assert rep.trimmed().betti == [1, 1]
    # projective plane style torsion
    rep = homology_from_boundaries([1, 1, 1], {1: [[0]], 2: [[2]]})
    assert rep.betti == [1, 0, 0] and rep.torsion == [[], [2], []]
    assert rep.lines() == ["H_0 = Z", "H_1 = Z/2", "H_2 = 0"]
    with pytest.raises(PCSError):
        homology_from_boundaries([2, 2], {1: [[1, 1]]})


def test_report_format():
    assert HomologyReport([2], [[]]).lines() == ["H_0 = Z^2"]
    assert HomologyReport([1, 1], [[], [3]]).lines() == ["H_0 = Z", "H_1 = Z ⊕ Z/3"]
    assert HomologyReport().lines() == ["H_* = 0"]
    assert HomologyReport([1, 0], [[], []]) == HomologyReport([1], [[]])
    assert HomologyReport([1, 1], [[], []]).euler() == 0


def test_compare_reports():
    a = HomologyReport([1, 1], [[], []])
    assert compare_reports(a, a) == (True, [])
    ok, diffs = compare_reports(a, HomologyReport([1], [[]]))
    assert not ok and diffs == [(1, (1, []), (0, []))]


def test_nerve_examples(sq, hsq):
    cposet = build_poset(hsq[0], enumerate_chains(*hsq))
    nerve_cx = nerve_of_poset(cposet.elements, cposet.strict_up())
    assert nerve_cx.counts() == [2]
    cposet = build_poset(sq[0], enumerate_chains(*sq))
    nerve_cx = nerve_of_poset(cposet.elements, cposet.strict_up())
    assert nerve_cx.counts() == [3, 2]
    oposet = enumerate_ordered_partitions((3,))
    nerve_cx = nerve_of_poset(oposet.elements, oposet.strict_up())
    assert nerve_cx.counts() == [13, 24, 12]


@pytest.mark.parametrize("ns", [(3,), (2, 2), (4,)])
def test_nerve_face_closed(ns):
    oposet = enumerate_ordered_partitions(ns)
    nerve_cx = nerve_of_poset(oposet.elements, oposet.strict_up())
    stored = {s for ss in nerve_cx.simplices.values() for s in ss}
    for s in stored:
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            assert not face or face in stored
    # a cone on the top element is contractible
    rep = nerve_cx.homology()
    assert rep.trimmed().betti == [1] and nerve_cx.euler() == 1


def test_simplicial_helpers():
    a = {("x", "y"): 1, ("y", "z"): 2}
    assert chain_add(a, scale_chain(a, -1)) == {}
    assert simplicial_boundary(a) == {("y",): -1, ("x",): -1, ("z",): 2}
    assert simplicial_boundary({("x",): 3}) == {}
    assert pushforward({("x", "y"): 1}, str.upper) == {("X", "Y"): 1}
    assert pushforward({("x", "y"): 1, ("z", "y"): 1}, lambda origin: "x" if origin == "z" else origin) == {("x", "y"): 2}
    assert support_vertices(a) == {"x", "y", "z"}
