"""Wavefront-set computations.

local_wf is the generic engine: it consumes externally supplied restriction
data (for each face J of the alcove, the characters of W_J appearing in the
restriction of the Iwahori-fixed space, with multiplicities), pushes each
character to the special orbit of its twisted family, lifts through the
face, and keeps the A-order maxima.

arthur_wf evaluates the closed form for spherical representations attached
to a dual-side orbit: the canonical unramified wavefront set is the single
invariant (d(O^vee), O^vee) and the geometric wavefront set is d(O^vee).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import balacarter as bc
from . import duality as du
from .orbits import NilpotentOrbit, closure_leq
from .rootdata import CartanType
from .weylrep import orbit_s_factors


class WavefrontError(ValueError):
    pass


@dataclass(frozen=True)
class WavefrontResult:
    canonical: tuple  # A-order-maximal UnramifiedClassInvariants
    geometric: tuple  # closure-maximal orbits among the canonical lifts

    def to_json(self):
        return {"canonical": [i.to_json() for i in self.canonical],
                "geometric": [o.to_json() for o in self.geometric]}

    def __str__(self):
        c = ", ".join(str(i) for i in self.canonical)
        g = ", ".join(o.label() for o in self.geometric)
        return f"canonical {{{c}}}; geometric {{{g}}}"


def _maxima(items, leq):
    out = []
    for a in items:
        if any(b != a and leq(a, b) for b in items):
            continue
        if a not in out:
            out.append(a)
    return out


def _result_from_invariants(invariants):
    canon = _maxima(list(invariants), du.leq_A)
    orbits = []
    for i in canon:
        if i.orbit not in orbits:
            orbits.append(i.orbit)
    geom = _maxima(orbits, closure_leq)
    key = lambda x: str(x)
    return WavefrontResult(tuple(sorted(canon, key=key)),
                           tuple(sorted(geom, key=key)))


def validate_restriction_data(ct: CartanType, data) -> dict:
    """data: {frozenset(display nodes) -> [(label tuple, mult), ...]}."""
    subsets = set(bc.proper_subsets(ct))
    out = {}
    for j, items in data.items():
        j = frozenset(j)
        if j not in subsets:
            raise WavefrontError(f"J={sorted(j)} is not a face type of {ct}")
        ctx = bc.pair_context(ct, j)
        valid_labels = {e.label for e in ctx.irreps()}
        checked = []
        for label, mult in items:
            label = tuple(label)
            if mult <= 0:
                raise WavefrontError("multiplicities must be positive")
            if label not in valid_labels:
                raise WavefrontError(
                    f"{label} is not a character of the face group of {sorted(j)}")
            checked.append((label, int(mult)))
        out[j] = tuple(checked)
    return out


def local_wf(ct: CartanType, data) -> WavefrontResult:
    """Wavefront sets from restriction data, maximized over the faces."""
    data = validate_restriction_data(ct, data)
    invariants = []
    for j, items in data.items():
        ctx = bc.pair_context(ct, j)
        for label, _mult in items:
            e = ctx._irrep(label)
            factor_orbits = orbit_s_factors(ctx, e)
            invariants.append(du.invariant_of(ct, j, factor_orbits))
    if not invariants:
        raise WavefrontError("restriction data is empty")
    return _result_from_invariants(invariants)


def arthur_wf(ct: CartanType, dual_orbit: NilpotentOrbit) -> WavefrontResult:
    """Wavefront sets of the spherical representation with dual-side
    parameter dual_orbit; requires the adjoint form."""
    if ct.isogeny != "adjoint":
        raise WavefrontError(
            "the spherical wavefront formula assumes the adjoint split form")
    inv = du.achar_dual_one(ct, dual_orbit)
    return WavefrontResult((inv,), (inv.orbit,))


def cross_check_arthur(ct: CartanType, dual_orbit: NilpotentOrbit) -> bool:
    """Consistency of the closed form with the enumerated invariants: the
    bound is dominated by d_A(O^vee,1) and attained."""
    target = du.achar_dual_one(ct, dual_orbit)
    attained = False
    for inv, _, _ in du.enumerate_nobc(ct):
        if inv == target:
            attained = True
        if closure_leq(dual_orbit, inv.dual_orbit):
            if not du.leq_A(inv, target):
                return False
    return attained


# -- canned restriction patterns --------------------------------------

def steinberg_pattern(ct: CartanType) -> dict:
    """The restriction data of the Steinberg representation: the sign
    character of every face group."""
    out = {}
    for j in bc.proper_subsets(ct):
        ctx = bc.pair_context(ct, j)
        sgn = max(ctx.irreps(), key=lambda e: e.b)
        out[j] = [(sgn.label, 1)]
    return out


def trivial_pattern(ct: CartanType) -> dict:
    """The restriction data of the trivial representation."""
    out = {}
    for j in bc.proper_subsets(ct):
        ctx = bc.pair_context(ct, j)
        triv = next(e for e in ctx.irreps() if e.b == 0)
        out[j] = [(triv.label, 1)]
    return out


# -- JSON forms --------------------------------------------------------

def restriction_data_from_json(records) -> dict:
    def detuple(x):
        if isinstance(x, list):
            return tuple(detuple(t) for t in x)
        return x

    out = {}
    for rec in records:
        j = frozenset(int(x) for x in rec["J"])
        items = [(detuple(item["label"]), int(item["mult"]))
                 for item in rec["irreps"]]
        out[j] = items
    return out


def restriction_data_to_json(data):
    def listify(x):
        if isinstance(x, tuple):
            return [listify(t) for t in x]
        return x

    recs = []
    for j in sorted(data, key=lambda s: (len(s), sorted(s))):
        recs.append({"J": sorted(j),
                     "irreps": [{"label": listify(lab), "mult": m}
                                for lab, m in data[j]]})
    return recs
