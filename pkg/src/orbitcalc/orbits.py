"""Nilpotent orbits: enumeration, closure order, weighted Dynkin diagrams,
Lusztig-Spaltenstein and Barbasch-Vogan duality.

Classical orbits are partitions with the usual parity rules; G2 orbits are
the five labels 0 < A1 < A1~ < G2(a1) < G2, kept in one literal table whose
entries the test suite re-derives from independent oracles.

Type D very even orbits (all parts even) come in I/II pairs.  The mark is
tied to the weighted Dynkin diagram: mark I is the diagram whose value at
the fork node alpha_{n-1} is >= the value at alpha_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from .rootdata import CartanType, build_root_system

G2_LABELS = ("0", "A1", "A1~", "G2(a1)", "G2")

# label -> (weights on (alpha_1, alpha_2) with alpha_1 long, dimension,
#           d_LS image, special?)
G2_TABLE = {
    "0":      {"wdd": (0, 0), "dim": 0,  "dual": "G2",     "special": True},
    "A1":     {"wdd": (1, 0), "dim": 6,  "dual": "G2(a1)", "special": False},
    "A1~":    {"wdd": (0, 1), "dim": 8,  "dual": "G2(a1)", "special": False},
    "G2(a1)": {"wdd": (2, 0), "dim": 10, "dual": "G2(a1)", "special": True},
    "G2":     {"wdd": (2, 2), "dim": 12, "dual": "0",      "special": True},
}


class OrbitError(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentOrbit:
    system: CartanType
    partition: tuple | None = None
    g2_label: str | None = None
    mark: str | None = None  # 'I' or 'II', type D very even only

    def __post_init__(self):
        ct = self.system
        if ct.series == "G":
            if self.g2_label not in G2_LABELS:
                raise OrbitError(f"bad G2 label {self.g2_label!r}")
            if self.partition is not None or self.mark is not None:
                raise OrbitError("G2 orbits carry a label only")
            return
        if self.partition is None:
            raise OrbitError("classical orbit needs a partition")
        p = pt.normalize(self.partition)
        object.__setattr__(self, "partition", p)
        if not pt.valid(p, ct.series, ct.rank):
            raise OrbitError(f"{p} is not a valid {ct.series}{ct.rank} partition")
        ve = ct.series == "D" and all(x % 2 == 0 for x in p)
        if ve and self.mark not in ("I", "II"):
            raise OrbitError(f"very even orbit {p} needs a mark I/II")
        if not ve and self.mark is not None:
            raise OrbitError(f"orbit {p} must not carry a mark")

    @property
    def very_even(self) -> bool:
        return self.mark is not None

    def label(self) -> str:
        if self.system.series == "G":
            return self.g2_label
        s = pt.format_partition(self.partition)
        return f"{s}-{self.mark}" if self.mark else s

    def __str__(self):
        return f"{self.system}:{self.label()}"

    def to_json(self):
        rec = {"series": self.system.series, "rank": self.system.rank}
        if self.system.series == "G":
            rec["g2_label"] = self.g2_label
        else:
            rec["partition"] = list(self.partition)
            if self.mark:
                rec["mark"] = self.mark
        return rec


def orbit_from_json(rec, isogeny="adjoint") -> NilpotentOrbit:
    ct = CartanType(rec["series"], rec["rank"], isogeny)
    if ct.series == "G":
        return NilpotentOrbit(ct, g2_label=rec["g2_label"])
    return NilpotentOrbit(ct, partition=tuple(rec["partition"]), mark=rec.get("mark"))


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    system: CartanType
    values: tuple  # value at alpha_1..alpha_n

    def __post_init__(self):
        if not all(v in (0, 1, 2) for v in self.values):
            raise OrbitError(f"weights must be 0/1/2, got {self.values}")

    def to_json(self):
        return {f"a{i+1}": v for i, v in enumerate(self.values)}


# ---------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_orbits(ct: CartanType) -> tuple:
    if ct.series == "G":
        return tuple(NilpotentOrbit(ct, g2_label=l) for l in G2_LABELS)
    out = []
    for p in pt.valid_partitions(ct.series, ct.rank):
        if ct.series == "D" and all(x % 2 == 0 for x in p):
            out.append(NilpotentOrbit(ct, partition=p, mark="I"))
            out.append(NilpotentOrbit(ct, partition=p, mark="II"))
        else:
            out.append(NilpotentOrbit(ct, partition=p))
    return tuple(out)


def zero_orbit(ct: CartanType) -> NilpotentOrbit:
    if ct.series == "G":
        return NilpotentOrbit(ct, g2_label="0")
    n = pt.family_size(ct.series, ct.rank)
    p = (1,) * n
    # 1^{2n} in type D is never very even
    return NilpotentOrbit(ct, partition=p)


def regular_orbit(ct: CartanType) -> NilpotentOrbit:
    if ct.series == "G":
        return NilpotentOrbit(ct, g2_label="G2")
    s, n = ct.series, ct.rank
    if s == "A":
        p = (n + 1,)
    elif s == "B":
        p = (2 * n + 1,)
    elif s == "C":
        p = (2 * n,)
    else:
        p = (2 * n - 1, 1) if n >= 2 else (1,)
    return NilpotentOrbit(ct, partition=p)


# ---------------------------------------------------------------------
# closure order
# ---------------------------------------------------------------------

def closure_leq(o1: NilpotentOrbit, o2: NilpotentOrbit) -> bool:
    if o1.system != o2.system:
        raise OrbitError(f"cannot compare orbits across {o1.system} and {o2.system}")
    if o1.system.series == "G":
        return G2_LABELS.index(o1.g2_label) <= G2_LABELS.index(o2.g2_label)
    if o1.partition == o2.partition and (o1.mark or o2.mark):
        return o1.mark == o2.mark
    return pt.dominance_leq(o1.partition, o2.partition)


# ---------------------------------------------------------------------
# weighted Dynkin diagrams
# ---------------------------------------------------------------------

def h_vector(p) -> tuple:
    """Concatenated strings {p_i-1, p_i-3, ..., 1-p_i}, sorted descending."""
    vals = []
    for part in p:
        vals.extend(range(part - 1, -part - 1, -2))
    return tuple(sorted(vals, reverse=True))


def _wdd_values(ct: CartanType, orbit: NilpotentOrbit):
    s, n = ct.series, ct.rank
    p = orbit.partition
    hv = h_vector(p)
    if s == "A":
        return tuple(hv[i] - hv[i + 1] for i in range(n))
    top = list(hv[:n])
    if s == "D" and orbit.very_even and orbit.mark == "I":
        top[-1] = -top[-1]
    if s == "B":
        return tuple(top[i] - top[i + 1] for i in range(n - 1)) + (top[-1],)
    if s == "C":
        return tuple(top[i] - top[i + 1] for i in range(n - 1)) + (2 * top[-1],)
    # D
    if n == 1:
        return (2 * top[0],)
    vals = tuple(top[i] - top[i + 1] for i in range(n - 1))
    return vals[:-1] + (top[n - 2] - top[n - 1], top[n - 2] + top[n - 1])


def weighted_dynkin(orbit: NilpotentOrbit) -> WeightedDynkinDiagram:
    ct = orbit.system
    if ct.series == "G":
        return WeightedDynkinDiagram(ct, G2_TABLE[orbit.g2_label]["wdd"])
    return WeightedDynkinDiagram(ct, _wdd_values(ct, orbit))


@lru_cache(maxsize=None)
def _wdd_table(ct: CartanType):
    return {weighted_dynkin(o).values: o for o in enumerate_orbits(ct)}


def orbit_from_wdd(wdd: WeightedDynkinDiagram) -> NilpotentOrbit:
    table = _wdd_table(wdd.system)
    try:
        return table[wdd.values]
    except KeyError:
        raise OrbitError(f"no orbit with weighted diagram {wdd.values} in {wdd.system}")


def orbit_dimension(orbit: NilpotentOrbit) -> int:
    """dim O = |Phi| - #{alpha : alpha(h)=0} - #{alpha : alpha(h)=1}."""
    ct = orbit.system
    if ct.series == "G":
        return G2_TABLE[orbit.g2_label]["dim"]
    rs = build_root_system(ct)
    h = weighted_dynkin(orbit).values
    n0 = n1 = 0
    for beta in rs.roots:
        v = sum(c * x for c, x in zip(beta, h))
        if v == 0:
            n0 += 1
        elif v == 1:
            n1 += 1
    return len(rs.roots) - n0 - n1


# ---------------------------------------------------------------------
# dualities
# ---------------------------------------------------------------------

def _mark_of_dual(ct: CartanType, in_mark, out_p):
    """Mark convention for a very even output of a type-D duality."""
    if not (ct.series == "D" and all(x % 2 == 0 for x in out_p)):
        return None
    if in_mark is None:
        return "I"
    if ct.rank % 4 == 0:
        return in_mark
    return "II" if in_mark == "I" else "I"


def dual_ls(orbit: NilpotentOrbit) -> NilpotentOrbit:
    """Lusztig-Spaltenstein dual: transpose then same-family collapse."""
    ct = orbit.system
    if ct.series == "G":
        return NilpotentOrbit(ct, g2_label=G2_TABLE[orbit.g2_label]["dual"])
    q = pt.collapse(pt.transpose(orbit.partition), ct.series, ct.rank)
    return NilpotentOrbit(ct, partition=q, mark=_mark_of_dual(ct, orbit.mark, q))


def dual_bv(orbit: NilpotentOrbit) -> NilpotentOrbit:
    """Barbasch-Vogan dual: from an orbit of the *dual* system into ours.

    The argument lives in G^vee; the result lives in G (B <-> C swap).
    """
    src = orbit.system
    tgt = src.dual
    if src.series == "G":
        return NilpotentOrbit(tgt, g2_label=G2_TABLE[orbit.g2_label]["dual"])
    if src.series in ("A", "D"):
        q = pt.collapse(pt.transpose(orbit.partition), tgt.series, tgt.rank)
        return NilpotentOrbit(tgt, partition=q,
                              mark=_mark_of_dual(tgt, orbit.mark, q))
    t = list(pt.transpose(orbit.partition))
    if src.series == "B":  # partitions of 2n+1 -> 2n: drop a box from the tail
        t[-1] -= 1
    else:  # C: partitions of 2n -> 2n+1: grow the head
        t[0] += 1
    q = pt.collapse(pt.normalize(t), tgt.series, tgt.rank)
    return NilpotentOrbit(tgt, partition=q)


def is_special(orbit: NilpotentOrbit) -> bool:
    """O is special iff d_LS is an involution at O."""
    if orbit.system.series == "G":
        return G2_TABLE[orbit.g2_label]["special"]
    return dual_ls(dual_ls(orbit)) == orbit


def special_orbits(ct: CartanType) -> tuple:
    return tuple(o for o in enumerate_orbits(ct) if is_special(o))


def hasse_edges(ct: CartanType):
    """Cover relations of the closure order, as (lower, upper) pairs."""
    orbs = enumerate_orbits(ct)
    edges = []
    for a in orbs:
        for b in orbs:
            if a == b or not closure_leq(a, b):
                continue
            if any(c != a and c != b and closure_leq(a, c) and closure_leq(c, b)
                   for c in orbs):
                continue
            edges.append((a, b))
    return tuple(edges)
