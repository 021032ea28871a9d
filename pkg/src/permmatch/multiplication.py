"""Graph-theoretic model of multiplying a permutation by a transposition.

Multiplying a realized permutation p by a transposition (i,k) exchanges two
matched edges for two new ones along a 4-cycle: with a the preimage of i and
t the preimage of k, the matched edges (a,i) and (t,k) leave and (a,k) and
(t,i) enter.  `four_cycle` materializes that witness, `is_product_realized`
applies it as a realizability test, and `ep` is the specialization used at
stabilizer-chain level i, where p fixes 1..i and hence a = i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartite import BipartiteGraph, contains_matching, perm_to_matching
from .perms import Permutation, Transposition, compose


@dataclass(frozen=True)
class FourCycleWitness:
    """The 4-cycle (v_a, w_i, v_t, w_k) driving p * (i,k).

    edges_before are the two matched edges of p on the cycle; edges_after are
    the two matched edges of the product that replace them.
    """

    i: int
    k: int
    a: int
    t: int
    edges_before: frozenset  # {(a,i), (t,k)}, subset of the matching of p
    edges_after: frozenset  # {(a,k), (t,i)}, subset of the matching of p*(i,k)

    @property
    def cycle_nodes(self) -> tuple:
        """Cycle as (v_a, w_i, v_t, w_k) labels."""
        return (("v", self.a), ("w", self.i), ("v", self.t), ("w", self.k))


def four_cycle(p: Permutation, psi: Transposition) -> FourCycleWitness:
    if psi.is_identity:
        raise ValueError("identity multiplier has no 4-cycle witness")
    if psi.k > p.n:
        raise ValueError(f"transposition {psi} does not fit in S_{p.n}")
    i, k = psi.i, psi.k
    a = p.preimage(i)
    t = p.preimage(k)
    return FourCycleWitness(
        i=i,
        k=k,
        a=a,
        t=t,
        edges_before=frozenset({(a, i), (t, k)}),
        edges_after=frozenset({(a, k), (t, i)}),
    )


def is_product_realized(g: BipartiteGraph, p: Permutation, psi: Transposition) -> bool:
    """Is p*psi realized in g, given that p itself is?

    Requires the matching of p to be contained in g; the product is then
    realized exactly when the two replacement edges of the 4-cycle witness
    are present.
    """
    if g.n != p.n:
        raise ValueError(f"size mismatch: graph n={g.n}, permutation n={p.n}")
    if not contains_matching(g, perm_to_matching(p)):
        raise ValueError("p is not realized in g; hypothesis unmet")
    w = four_cycle(p, psi)
    return all(g.has_edge(v, u) for v, u in w.edges_after)


def ep(p: Permutation, psi: Transposition) -> tuple:
    """Edge pair ((i,k), (t,i)) for a level-i product, p fixing 1..i.

    t is the preimage of k under p; this is the a = i case of `four_cycle`.
    """
    if psi.is_identity:
        raise ValueError("identity multiplier has no edge pair")
    i, k = psi.i, psi.k
    if k > p.n:
        raise ValueError(f"transposition {psi} does not fit in S_{p.n}")
    if not p.fixes(i):
        raise ValueError(f"p must fix 1..{i} to multiply by a level-{i} representative")
    t = p.preimage(k)
    return ((i, k), (t, i))


def product_matching_check(p: Permutation, psi: Transposition) -> bool:
    """Does the witness edge exchange reproduce the matching of p*psi?"""
    w = four_cycle(p, psi)
    before = perm_to_matching(p).pairs
    after = perm_to_matching(compose(p, psi.to_perm(p.n))).pairs
    return after == (before - w.edges_before) | w.edges_after
