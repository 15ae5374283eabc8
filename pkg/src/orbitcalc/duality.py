"""The Sommers dual of lifted data, Achar's d_A(-, 1), the invariant pair
encoding of unramified orbit classes, and the A-order.

An unramified class is recorded as the faithful pair

    (orbit of G, dual orbit of G^vee) = (saturation, Sommers dual)

and two invariants compare in the A-order when the first components compare
in closure order and the second components compare the other way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import balacarter as bc
from .orbits import (NilpotentOrbit, closure_leq, dual_bv, dual_ls,
                     enumerate_orbits, regular_orbit, zero_orbit)
from .rootdata import CartanType
from .weylrep import (JInductionTie, ambient_context, j_induce,
                      springer_orbit, springer_rep_label)


class DualityError(ValueError):
    pass


@dataclass(frozen=True)
class UnramifiedClassInvariant:
    orbit: NilpotentOrbit
    dual_orbit: NilpotentOrbit

    def to_json(self):
        return {"orbit": self.orbit.to_json(),
                "dual_orbit": self.dual_orbit.to_json()}

    def __str__(self):
        return f"({self.orbit.label()}, {self.dual_orbit.label()}^v)"


def sommers_dual(ct: CartanType, j, factor_orbits) -> NilpotentOrbit:
    """d_S of the lift of (J, O_J): dualize inside the pseudo-Levi, take the
    attached special representation, j-induce, and read the Springer orbit
    on the dual side.

    Raises JInductionTie when a degenerate type-D special representation has
    no unique minimal-b constituent; the tie carries both candidates.
    """
    ctx = bc.pair_context(ct, frozenset(j))
    if len(factor_orbits) != len(ctx.factors):
        raise DualityError("factor orbits do not match the pseudo-Levi")
    labels = []
    for f, orb in zip(ctx.factors, factor_orbits):
        labels.append(springer_rep_label(dual_ls(orb)))
    e = ctx._irrep(tuple(labels))
    jim = j_induce(ctx, e)
    return springer_orbit(ambient_context(ct), jim, target=ct.dual)


def invariant_of(ct: CartanType, j, factor_orbits) -> UnramifiedClassInvariant:
    return UnramifiedClassInvariant(
        bc.saturation(ct, frozenset(j), factor_orbits),
        sommers_dual(ct, j, factor_orbits))


def pair_invariant(ct: CartanType, pair: bc.ABCPair) -> UnramifiedClassInvariant:
    return invariant_of(ct, pair.J, bc.distinguished_factor_orbits(ct, pair))


def leq_A(i1: UnramifiedClassInvariant, i2: UnramifiedClassInvariant) -> bool:
    if i1.orbit.system != i2.orbit.system:
        raise DualityError("cannot compare invariants across systems")
    return closure_leq(i1.orbit, i2.orbit) and \
        closure_leq(i2.dual_orbit, i1.dual_orbit)


@lru_cache(maxsize=None)
def enumerate_nobc(ct: CartanType) -> tuple:
    """Deduplicated invariants over all affine Bala-Carter classes, each with
    the number of classes realizing it: ((invariant, count, representative)...)."""
    rows = {}
    for cls in bc.classes(ct):
        rep = cls[0]
        inv = pair_invariant(ct, rep)
        if inv in rows:
            cnt, first_rep = rows[inv]
            rows[inv] = (cnt + 1, min(first_rep, rep, key=lambda p: p.sort_key()))
        else:
            rows[inv] = (1, rep)
    out = [(inv, cnt, rep) for inv, (cnt, rep) in rows.items()]
    out.sort(key=lambda row: row[2].sort_key())
    return tuple(out)


def achar_dual_one(ct: CartanType, dual_orbit: NilpotentOrbit) -> UnramifiedClassInvariant:
    """d_A(O^vee, 1) as an invariant pair: (d(O^vee), O^vee).

    Asserts the pair is attained by some affine Bala-Carter class; failure
    would contradict the surjectivity of the Sommers dual.
    """
    if dual_orbit.system.series != ct.dual.series or \
            dual_orbit.system.rank != ct.rank:
        raise DualityError(f"{dual_orbit} is not an orbit of the dual of {ct}")
    inv = UnramifiedClassInvariant(dual_bv(dual_orbit), dual_orbit)
    attained = any(row[0] == inv for row in enumerate_nobc(ct))
    if not attained:
        raise DualityError(f"invariant {inv} not realized by any class")
    return inv


# ---------------------------------------------------------------------
# the G2 display table
# ---------------------------------------------------------------------

def g2_class_name(inv: UnramifiedClassInvariant) -> str:
    """Conjugacy-class name in the component group S3 of the subregular
    orbit, as display metadata for the seven G2 rows."""
    if inv.orbit.g2_label != "G2(a1)":
        return "1"
    return {"G2(a1)": "1", "A1~": "(12)", "A1": "(123)"}[inv.dual_orbit.g2_label]


def hasse_edges_A(ct: CartanType):
    """Cover relations of the A-order on the enumerated invariants."""
    invs = [row[0] for row in enumerate_nobc(ct)]
    edges = []
    for a in invs:
        for b in invs:
            if a == b or not leq_A(a, b):
                continue
            if any(c != a and c != b and leq_A(a, c) and leq_A(c, b)
                   for c in invs):
                continue
            edges.append((a, b))
    return tuple(edges)
