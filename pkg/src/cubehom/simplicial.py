"""Signed simplicial chains on order complexes.

A chain is a dict mapping a simplex (a tuple of poset elements listed in
increasing order) to a nonzero integer.  Zero coefficients are never stored.
"""


def chain_add(*chains, scale=1) -> dict:
    out = {}
    for ch in chains:
        for s, a in ch.items():
            out[s] = out.get(s, 0) + scale * a
    return {s: a for s, a in out.items() if a}


def scale_chain(chain, k: int) -> dict:
    return {s: k * a for s, a in chain.items()} if k else {}


def simplicial_boundary(chain) -> dict:
    """Alternating-sum boundary; 0-simplices have zero boundary."""
    out = {}
    for s, a in chain.items():
        if len(s) < 2:
            continue
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            out[face] = out.get(face, 0) + (-a if i % 2 else a)
    return {s: a for s, a in out.items() if a}


def pushforward(chain, fn) -> dict:
    """Apply ``fn`` to every vertex.  ``fn`` must be injective and monotone."""
    out = {}
    for s, a in chain.items():
        t = tuple(fn(x) for x in s)
        out[t] = out.get(t, 0) + a
    return {s: a for s, a in out.items() if a}


def support_vertices(chain) -> set:
    return {x for s in chain for x in s}
