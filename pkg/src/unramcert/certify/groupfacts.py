"""The group-theoretic facts the construction relies on, each recomputed exhaustively."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..covers import build_det_pm1_cover, build_spin_cover_s7, lift_order, subgroup_splits
from ..covers.detcover import diag
from ..permgroup import perm as pm
from ..permgroup.group import (
    alternating_group,
    cyclic_group,
    direct_product,
    name_structure,
    structure_tag,
    symmetric_group,
)
from ..permgroup.lattice import lattice, subgroup_generated_by_class_check
from ..permgroup.pgl2 import Mat2, outer_involutions, pgl2_action, sl2
from ..permgroup.sylow import sylow2_shape


@dataclass(frozen=True)
class Fact:
    name: str
    expected: object
    observed: object

    @property
    def ok(self):
        return self.expected == self.observed

    def to_json(self):
        return {"name": self.name, "expected": _plain(self.expected), "observed": _plain(self.observed), "ok": self.ok}


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def two_b():
    return diag(1, -1).to_perm()


def klein_over_2b():
    """<x -> -x, x -> 1/x>: two commuting outer involutions, product inner."""
    return two_b(), Mat2.of(0, 1, 1, 0).to_perm()


def eight_cycle(G):
    return next(g for g in G if pm.cycle_type(g) == (8,))


@lru_cache(maxsize=None)
def subgroup_certificate():
    """No proper subgroup of PGL_2(7) generated by outer involutions contains an 8-cycle."""
    P = pgl2_action()
    G = P.group
    inv = outer_involutions(P)
    L = lattice(G)
    return subgroup_generated_by_class_check(G, inv, eight_cycle(G)), len(L)


def pgl2_facts():
    P = pgl2_action()
    G = P.group
    inv = outer_involutions(P)
    tau = two_b()
    C = G.centralizer(tau)
    c7 = next(g for g in G if G.element_order(g) == 7)
    c3 = next(g for g in G if G.element_order(g) == 3)
    N7 = G.normalizer(G.subgroup([c7]))
    N3 = G.normalizer(G.subgroup([c3]))
    n3_tag = structure_tag(N3)
    ok_cert, _ = subgroup_certificate()
    return [
        Fact("|PGL2(7)|", 336, G.order),
        Fact("elements in PSL2(7)", 168, sum(P.in_psl(g) for g in G)),
        Fact("outer (2^3.1^2) involutions", 28, len(inv)),
        Fact("outer involutions are all (2^3.1^2) involutions outside PSL2(7)", True, pm.cycle_type(tau) == (2, 2, 2, 1, 1) and not P.in_psl(tau)),
        Fact("centralizer order of an outer involution", 12, C.order),
        Fact("centralizer structure of an outer involution", "S3xC2", name_structure(C)),
        Fact("C7 normalizer order", 42, N7.order),
        Fact("C3 normalizer order", 12, N3.order),
        Fact("C3 normalizer census", structure_tag(direct_product(symmetric_group(3), cyclic_group(2)))["census"], n3_tag["census"]),
        Fact("C3 normalizer center order", 2, n3_tag["center"]),
        Fact("C3 normalizer derived subgroup order", 3, n3_tag["derived"]),
        Fact("every enumerated subgroup order divides 336", True, all(336 % o == 0 for o in lattice(G).orders())),
        Fact("no proper outer-involution-generated subgroup contains an 8-cycle", True, ok_cert),
    ]


def sylow_facts():
    shape, P = sylow2_shape(sl2())
    psl_shape, P2 = sylow2_shape(pgl2_action().psl)
    minus_one = Mat2.of(-1, 0, 0, -1)
    return [
        Fact("Sylow-2 of SL2(7) shape", "generalized-quaternion", shape),
        Fact("Sylow-2 of SL2(7) order", 16, P.order),
        Fact("Sylow-2 of SL2(7) has -I as its only involution", True, P.involutions() == [minus_one]),
        Fact("Sylow-2 of PSL2(7) shape", "dihedral", psl_shape),
        Fact("Sylow-2 of PSL2(7) order", 8, P2.order),
    ]


def s7_centralizer_facts():
    S7 = symmetric_group(7)
    tau = pm.from_cycles(7, (0, 1))
    C = S7.centralizer(tau)
    rest = symmetric_group(5, range(2, 7), 7)
    product_group = S7.subgroup([tau] + list(rest.gens))
    reference = direct_product(cyclic_group(2), symmetric_group(5))
    return [
        Fact("centralizer of (1,2) in S7 order", 240, C.order),
        Fact("centralizer equals <(1,2)> x Sym{3..7}", True, set(C.elements) == set(product_group.elements)),
        Fact("Sym{3..7} part order", 120, rest.order),
        Fact("(1,2) is central in the centralizer", True, all(S7.mul(tau, g) == S7.mul(g, tau) for g in C.gens)),
        Fact("centralizer census equals C2 x S5", structure_tag(reference)["census"], structure_tag(C)["census"]),
    ]


def det_cover_facts():
    E = build_det_pm1_cover()
    tau, sigma = klein_over_2b()
    K = E.base.subgroup([tau, sigma])
    split_k, tag_k = subgroup_splits(E, K)
    split_t, tag_t = subgroup_splits(E, E.base.subgroup([tau]))
    psl_pre = E.preimage(pgl2_action().psl)
    return [
        Fact("det +-1 cover order", 672, E.cover.order),
        Fact("det +-1 cover kernel central", True, E.kernel_is_central()),
        Fact("det +-1 cover is stem", True, E.is_stem()),
        Fact("2B lift order", 2, lift_order(E, tau)[0]),
        Fact("<2B> splits", True, split_t),
        Fact("C2xC2 over 2B splits", False, split_k),
        Fact("C2xC2 over 2B preimage", "D8", tag_k["name"]),
        Fact("preimage of PSL2(7) order", 336, psl_pre.order),
        Fact("preimage of PSL2(7) perfect", True, psl_pre.is_perfect()),
        Fact("preimage of PSL2(7) involutions", 1, len(psl_pre.involutions())),
    ]


def spin_cover_facts():
    S = build_spin_cover_s7()
    p = pm.from_cycles
    split, tag = subgroup_splits(S, S.base.subgroup([p(7, (0, 1)), p(7, (2, 3), (4, 5))]))
    A = S.preimage(alternating_group(range(7), 7))
    triple = lift_order(S, p(7, (0, 1), (2, 3), (4, 5)))[0]
    return [
        Fact("spin cover order", 10080, S.cover.order),
        Fact("spin cover is stem", True, S.is_stem()),
        Fact("transposition lift order", 2, lift_order(S, p(7, (0, 1)))[0]),
        Fact("(3,4)(5,6) lift order", 4, lift_order(S, p(7, (2, 3), (4, 5)))[0]),
        Fact("<(1,2),(3,4)(5,6)> preimage", "C2xC4", tag["name"]),
        # products of k disjoint transpositions lift to involutions iff k = 0, 1 mod 4 here
        Fact("(1,2)(3,4)(5,6) lift order", 4, triple),
        Fact("2.A7 order", 5040, A.order),
        Fact("2.A7 perfect", True, A.is_perfect()),
        Fact("2.A7 involutions", 1, len(A.involutions())),
    ]


def group_facts():
    """All facts, grouped; each group is a list of Fact."""
    return {
        "PGL2(7)": pgl2_facts(),
        "Sylow": sylow_facts(),
        "S7 centralizer": s7_centralizer_facts(),
        "det +-1 cover": det_cover_facts(),
        "spin cover": spin_cover_facts(),
    }
