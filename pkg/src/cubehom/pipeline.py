"""End-to-end runs: chains -> cellular complex -> homology, with the nerve oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cellular import CellularComplex, assemble_complex, cell_cycle, cellular_boundary
from .chains import ChainPoset, build_poset, enumerate_chains
from .homology import HomologyReport, compare_reports, homology_from_boundaries, nerve_of_poset
from .simplicial import chain_add, scale_chain, simplicial_boundary


@dataclass
class PathSpaceModel:
    poset: ChainPoset
    complex: CellularComplex
    strata: dict = field(default_factory=dict)  # length -> HomologyReport
    total: HomologyReport = None


def cellular_homology(cx: CellularComplex) -> HomologyReport:
    return homology_from_boundaries(cx.counts(), cx.boundary)


def direct_sum(reports) -> HomologyReport:
    top = max((len(r.betti) for r in reports), default=0)
    betti, torsion = [0] * top, [[] for _ in range(top)]
    for r in reports:
        for d, (b, t) in enumerate(zip(r.betti, r.torsion)):
            betti[d] += b
            torsion[d].extend(t)
    return HomologyReport(betti, [sorted(t) for t in torsion])


def path_space_model(cset, origin, goal, max_length=None, limit=None) -> PathSpaceModel:
    """Enumerate chains, assemble the cellular complex and compute homology per length."""
    cposet = build_poset(cset, enumerate_chains(cset, origin, goal, max_length=max_length, limit=limit))
    cx = assemble_complex(cset, cposet)
    strata = {n: cellular_homology(cx.restrict(n)) for n in cx.strata()}
    return PathSpaceModel(cposet, cx, strata, direct_sum(strata.values()))


def nerve_homology(cposet: ChainPoset, length=None) -> HomologyReport:
    if length is None:
        idx = list(range(len(cposet)))
    else:
        idx = [i for i in range(len(cposet)) if cposet.lengths[i] == length]
    pos = {i: n for n, i in enumerate(idx)}
    up = cposet.strict_up()
    sub_up = {pos[i]: {pos[j] for j in up[i] if j in pos} for i in idx}
    return nerve_of_poset([cposet.elements[i] for i in idx], sub_up).homology()


def differential_mismatches(cset, cposet: ChainPoset) -> list:
    """Cells whose cell cycle has a simplicial boundary differing from the closed formula."""
    bad = []
    cycles = {}

    def cell_cyc(c):
        if c not in cycles:
            cycles[c] = cell_cycle(cset, c)
        return cycles[c]

    for c in cposet.elements:
        lhs = simplicial_boundary(cell_cyc(c))
        rhs = chain_add(*(scale_chain(cell_cyc(child), a) for child, a in cellular_boundary(cset, c)))
        if lhs != rhs:
            bad.append(c)
    return bad


@dataclass
class OracleResult:
    match: bool
    strata: dict  # length -> (cellular, nerve, diffs)
    differential_failures: list
    dd_zero: bool


def oracle(cset, origin, goal, max_length=None, limit=None) -> OracleResult:
    """Compare cellular homology with order-complex homology stratum by stratum."""
    model = path_space_model(cset, origin, goal, max_length=max_length, limit=limit)
    strata, match = {}, True
    for n, rep in model.strata.items():
        other = nerve_homology(model.poset, n)
        ok, diffs = compare_reports(rep, other)
        match &= ok
        strata[n] = (rep, other, diffs)
    bad = differential_mismatches(cset, model.poset)
    dd = model.complex.check_dd()
    return OracleResult(match and not bad and dd, strata, bad, dd)
