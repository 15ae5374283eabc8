"""Character tables of Weyl groups, evaluated on concrete root permutations.

The abstract values come from Murnaghan-Nakayama style recursions:

* type A        -- partitions, rim-hook removal on beta-sets;
* types B/C     -- ordered bipartitions, the wreath-product rule (positive
                   class parts strip either component, negative parts strip
                   with a sign on the second component);
* type D        -- restriction from B; degenerate pairs {lam,lam} split in
                   half, with the classical correction 2^l(gamma) chi_lam(gamma)
                   on split classes (all cycles positive and even);
* G2            -- the dihedral table of order 12.

Concrete Weyl elements (root permutations from rootdata) are matched to
abstract class labels through per-factor coordinate frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .rootdata import CartanType, RootSystem, WeylElement, subgroup_closure


class CharError(ValueError):
    pass


# ---------------------------------------------------------------------
# rim hooks and abstract character values
# ---------------------------------------------------------------------

def _strips(lam, r):
    """All removals of an r-rim-hook: (smaller partition, leg length)."""
    if r <= 0:
        raise CharError("strip size must be positive")
    ell = len(lam)
    if ell == 0:
        return ()
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        newlam = tuple(new_beta[j] - (ell - 1 - j) for j in range(ell))
        out.append((pt.normalize(newlam), height))
    return tuple(out)


@lru_cache(maxsize=None)
def sym_char(lam: tuple, rho: tuple) -> int:
    """Character of S_n: partition label lam at cycle type rho."""
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    return sum((-1) ** h * sym_char(l2, rest) for l2, h in _strips(lam, r))


@lru_cache(maxsize=None)
def hyp_char(lam: tuple, mu: tuple, alpha: tuple, beta: tuple) -> int:
    """Character of the hyperoctahedral group W(B_n) = Z/2 wr S_n.

    Irreducible (lam, mu); class = (alpha, beta) with alpha the positive
    and beta the negative cycle lengths.
    """
    if not alpha and not beta:
        return 1 if not lam and not mu else 0
    if alpha:
        r, rest = alpha[0], alpha[1:]
        tot = 0
        for l2, h in _strips(lam, r):
            tot += (-1) ** h * hyp_char(l2, mu, rest, beta)
        for m2, h in _strips(mu, r):
            tot += (-1) ** h * hyp_char(lam, m2, rest, beta)
        return tot
    r, rest = beta[0], beta[1:]
    tot = 0
    for l2, h in _strips(lam, r):
        tot += (-1) ** h * hyp_char(l2, mu, alpha, rest)
    for m2, h in _strips(mu, r):
        tot -= (-1) ** h * hyp_char(lam, m2, alpha, rest)
    return tot


def d_char(pair, sign, alpha, beta, class_split) -> int:
    """Character of W(D_n).

    pair is the sorted (lam, mu); sign is 0 for lam != mu, else +1/-1.
    class_split is 0 for non-split classes and +1/-1 on split classes.
    """
    lam, mu = pair
    if sign == 0:
        return hyp_char(lam, mu, alpha, beta)
    base = hyp_char(lam, lam, alpha, beta)
    if class_split == 0:
        assert base % 2 == 0, (pair, alpha, beta)
        return base // 2
    gamma = tuple(a // 2 for a in alpha)
    delta = (2 ** len(gamma)) * sym_char(lam, gamma)
    val = base + (delta if sign == class_split else -delta)
    assert val % 2 == 0
    return val // 2


# G2 classes: identity, rotations by 60/120/180 degrees, reflections in a
# long root, reflections in a short root.
G2_CLASSES = ("1", "r1", "r2", "r3", "sl", "ss")
G2_CLASS_SIZES = {"1": 1, "r1": 2, "r2": 2, "r3": 1, "sl": 3, "ss": 3}
G2_IRREPS = ("phi(1,0)", "phi(1,6)", "phi(1,3)l", "phi(1,3)s",
             "phi(2,1)", "phi(2,2)")
G2_CHAR = {
    "phi(1,0)":  {"1": 1, "r1": 1, "r2": 1, "r3": 1, "sl": 1, "ss": 1},
    "phi(1,6)":  {"1": 1, "r1": 1, "r2": 1, "r3": 1, "sl": -1, "ss": -1},
    # phi(1,3)l is +1 on reflections in long roots, phi(1,3)s on short ones
    "phi(1,3)l": {"1": 1, "r1": -1, "r2": 1, "r3": -1, "sl": 1, "ss": -1},
    "phi(1,3)s": {"1": 1, "r1": -1, "r2": 1, "r3": -1, "sl": -1, "ss": 1},
    "phi(2,1)":  {"1": 2, "r1": 1, "r2": -1, "r3": -2, "sl": 0, "ss": 0},
    "phi(2,2)":  {"1": 2, "r1": -1, "r2": -1, "r3": 2, "sl": 0, "ss": 0},
}
G2_B_INVARIANT = {"phi(1,0)": 0, "phi(1,6)": 6, "phi(1,3)l": 3,
                  "phi(1,3)s": 3, "phi(2,1)": 1, "phi(2,2)": 2}


def n_stat(p) -> int:
    return sum(i * x for i, x in enumerate(p))


def b_invariant(kind, label) -> int:
    if kind == "A":
        return n_stat(label)
    if kind == "BC":
        lam, mu = label
        return 2 * n_stat(lam) + 2 * n_stat(mu) + sum(mu)
    if kind == "D":
        pair, sign = label
        lam, mu = pair
        if sign:
            return 4 * n_stat(lam) + sum(lam)
        return 2 * n_stat(lam) + 2 * n_stat(mu) + min(sum(lam), sum(mu))
    if kind == "G":
        return G2_B_INVARIANT[label]
    raise CharError(kind)


def factor_irrep_labels(kind, rank):
    if kind == "A":
        return tuple(pt.partitions_of(rank + 1))
    if kind == "BC":
        out = []
        for k in range(rank + 1):
            for lam in pt.partitions_of(k):
                for mu in pt.partitions_of(rank - k):
                    out.append((lam, mu))
        return tuple(out)
    if kind == "D":
        out = []
        for k in range(rank + 1):
            for lam in pt.partitions_of(k):
                for mu in pt.partitions_of(rank - k):
                    if (lam, mu) > (mu, lam):
                        continue
                    if lam == mu:
                        out.append(((lam, mu), 1))
                        out.append(((lam, mu), -1))
                    else:
                        out.append(((lam, mu), 0))
        return tuple(out)
    if kind == "G":
        return G2_IRREPS
    raise CharError(kind)


def factor_char_value(kind, label, cls) -> int:
    if kind == "A":
        return sym_char(label, cls)
    if kind == "BC":
        lam, mu = label
        alpha, beta = cls
        return hyp_char(lam, mu, alpha, beta)
    if kind == "D":
        pair, sign = label
        alpha, beta, class_split = cls
        return d_char(pair, sign, alpha, beta, class_split)
    if kind == "G":
        return G2_CHAR[label][cls]
    raise CharError(kind)


# ---------------------------------------------------------------------
# embedded factors: classify concrete elements
# ---------------------------------------------------------------------

@dataclass
class EmbeddedFactor:
    kind: str            # 'A', 'BC', 'D', 'G'
    series: str          # the root-system series: A/B/C/D/G
    rank: int
    basis: tuple         # ordered simple roots (root-coordinate tuples)
    roots: tuple         # the whole subsystem
    frame: tuple         # classification frame (see _build_frame)

    def cartan_type(self) -> CartanType:
        return CartanType(self.series, self.rank)


def _span_solve(basis, target):
    """Coefficients of target in the QQ-span of basis, or None."""
    cols = len(basis)
    rows = len(target)
    # least squares free: solve via Gaussian elimination on [basis^T | target]
    aug = [[Fraction(basis[j][i]) for j in range(cols)] + [Fraction(target[i])]
           for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    # consistency
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    coeffs = [Fraction(0)] * cols
    for row_idx, c in enumerate(piv_cols):
        coeffs[c] = aug[row_idx][cols]
    return tuple(coeffs)


def subsystem_roots(rs: RootSystem, basis):
    """All ambient roots in the integer span of the given simple basis
    (the closed subsystem it generates)."""
    out = []
    for beta in rs.roots:
        coeffs = _span_solve(basis, beta)
        if coeffs is not None and all(c.denominator == 1 for c in coeffs):
            out.append(beta)
    return tuple(out)


def split_basis_into_factors(rs: RootSystem, basis):
    """Connected components of the basis diagram, as lists of roots."""
    m = len(basis)
    adj = {i: set() for i in range(m)}
    for i in range(m):
        for j in range(m):
            if i != j and rs.pairing(basis[i], basis[j]) != 0:
                adj[i].add(j)
    seen, comps = set(), []
    for i in range(m):
        if i in seen:
            continue
        comp, stack = [], [i]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            stack.extend(adj[x] - seen)
        comps.append(tuple(sorted(comp)))
    return tuple(tuple(basis[i] for i in comp) for comp in comps)


def _classify_factor(rs: RootSystem, comp):
    """Determine (kind, series, rank, ordered basis) of one connected factor."""
    k = len(comp)
    pair = {(i, j): rs.pairing(comp[i], comp[j]) for i in range(k) for j in range(k)}
    deg = {i: sum(1 for j in range(k) if i != j and pair[(i, j)] != 0) for i in range(k)}
    off = [pair[(i, j)] for i in range(k) for j in range(k) if i != j]
    triple = any(v == -3 for v in off)
    double = any(v == -2 for v in off)
    if triple:
        # G2: order (long, short); <short, long^vee> = -1, <long, short^vee> = -3
        i, j = 0, 1
        if pair[(i, j)] == -3:
            order = (comp[i], comp[j])
        else:
            order = (comp[j], comp[i])
        return ("G", "G", 2, order)
    if not double:
        forks = [i for i in range(k) if deg[i] == 3]
        if forks and k >= 4:
            return ("D", "D", k, _order_d(comp, pair, deg, forks[0]))
        return ("A", "A", k, _order_path(comp, pair, deg))
    # doubly laced: B (unique short root, at the end) or C (unique long root)
    len2 = _relative_lengths(comp, pair)
    path = _order_path(comp, pair, deg)
    idx = {c: i for i, c in enumerate(comp)}
    lmax = max(len2)
    n_long = sum(1 for v in len2 if v == lmax)
    if k == 2 or n_long >= k - 1:
        # B-type shape (B2 == C2 normalized long-first)
        if len2[idx[path[0]]] < len2[idx[path[-1]]]:
            path = tuple(reversed(path))
        return ("BC", "B", k, path)
    # exactly one long root: type C, long root last
    if len2[idx[path[0]]] > len2[idx[path[-1]]]:
        path = tuple(reversed(path))
    return ("BC", "C", k, path)


def _relative_lengths(comp, pair):
    k = len(comp)
    len2 = [None] * k
    len2[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(k):
            for j in range(k):
                if i == j or pair[(i, j)] == 0:
                    continue
                if len2[i] is not None and len2[j] is None:
                    # (a_i,a_i)/(a_j,a_j) = pair[i,j]/pair[j,i]
                    len2[j] = len2[i] * pair[(j, i)] / pair[(i, j)]
                    changed = True
    return len2


def _order_path(comp, pair, deg):
    k = len(comp)
    if k == 1:
        return (comp[0],)
    ends = [i for i in range(k) if deg[i] == 1]
    start = min(ends, key=lambda i: comp[i])
    order = [start]
    used = {start}
    while len(order) < k:
        cur = order[-1]
        nxt = next(j for j in range(k)
                   if j not in used and pair[(cur, j)] != 0)
        order.append(nxt)
        used.add(nxt)
    return tuple(comp[i] for i in order)


def _order_d(comp, pair, deg, fork):
    k = len(comp)
    tips = [j for j in range(k) if deg[j] == 1 and pair[(fork, j)] != 0]
    if len(tips) == 3:  # D4: three tips at the fork; two become the prongs
        tips = sorted(tips, key=lambda i: comp[i])[1:]
    prongs = sorted(tips, key=lambda i: comp[i])
    remaining = {j for j in range(k) if j not in prongs and j != fork}
    order = []
    if remaining:
        cur = min((i for i in remaining if deg[i] == 1), key=lambda i: comp[i])
        order.append(cur)
        remaining.discard(cur)
        while remaining:
            nxt = next(j for j in remaining if pair[(order[-1], j)] != 0)
            order.append(nxt)
            remaining.discard(nxt)
    order.append(fork)
    order.extend(prongs)
    return tuple(comp[i] for i in order)


def _build_frame(rs: RootSystem, kind, series, rank, basis):
    """Rational root-coordinate vectors used to classify group elements.

    A: the k+1 points of the permutation model (mean-zero e_i);
    B/C/D: the vectors 2*e_i (so everything stays a root combination).
    """
    n = rs.rank
    k = rank
    if kind == "G":
        return ()
    if kind == "A":
        first = [Fraction(0)] * n
        for j, b in enumerate(basis):
            w = Fraction(k - j, k + 1)
            for t in range(n):
                first[t] += w * b[t]
        pts = [tuple(first)]
        for b in basis:
            pts.append(tuple(x - y for x, y in zip(pts[-1], b)))
        return tuple(pts)
    if kind == "BC":
        # frame vectors are 2*e_i: for B the last simple root is e_k,
        # for C it is 2*e_k, and 2*e_i = 2*beta_i + 2*e_{i+1} going left
        if series == "B":
            es = [tuple(2 * Fraction(x) for x in basis[-1])]
        else:
            es = [tuple(map(Fraction, basis[-1]))]
        for b in reversed(basis[:-1]):
            es.append(tuple(2 * Fraction(x) + y for x, y in zip(b, es[-1])))
        return tuple(reversed(es))
    if kind == "D":
        bl, bm = basis[-2], basis[-1]
        ekm1 = tuple(Fraction(x + y) for x, y in zip(bl, bm))      # 2*e_{k-1}
        ek = tuple(Fraction(y - x) for x, y in zip(bl, bm))        # 2*e_k
        es = [ek, ekm1]
        for b in reversed(basis[:-2]):
            es.append(tuple(2 * Fraction(x) + y for x, y in zip(b, es[-1])))
        return tuple(reversed(es))
    raise CharError(kind)


def build_factor(rs: RootSystem, comp, forced_basis=None,
                 forced_series=None) -> EmbeddedFactor:
    """forced_basis/forced_series override the canonical normal form; the
    caller promises the pair is a standard model for the subsystem (used
    for ambient systems, where labels must agree with the system-level
    recipes; the canonical form may differ by a diagram automorphism or,
    for B2 = C2, by the dual naming)."""
    kind, series, rank, basis = _classify_factor(rs, comp)
    if forced_basis is not None:
        assert set(forced_basis) == set(basis)
        basis = tuple(forced_basis)
    if forced_series is not None:
        series = forced_series
        kind = {"A": "A", "B": "BC", "C": "BC", "D": "D", "G": "G"}[series]
    roots = subsystem_roots(rs, basis)
    frame = _build_frame(rs, kind, series, rank, basis)
    return EmbeddedFactor(kind, series, rank, basis, roots, frame)


def _signed_perm(factor: EmbeddedFactor, w: WeylElement):
    """(pi, signs) with w(frame_i) = signs[i] * frame_{pi[i]}."""
    imgs = [w.apply_root_coords(v) for v in factor.frame]
    pi, signs = [], []
    for img in imgs:
        neg = tuple(-x for x in img)
        if img in factor.frame:
            pi.append(factor.frame.index(img))
            signs.append(1)
        elif neg in factor.frame:
            pi.append(factor.frame.index(neg))
            signs.append(-1)
        else:
            raise CharError("element does not preserve the factor frame")
    return tuple(pi), tuple(signs)


def _cycle_data(pi, signs):
    alpha, beta = [], []
    seen = set()
    for i in range(len(pi)):
        if i in seen:
            continue
        ln, sign, j = 0, 1, i
        while j not in seen:
            seen.add(j)
            sign *= signs[j]
            ln += 1
            j = pi[j]
        (alpha if sign == 1 else beta).append(ln)
    return tuple(sorted(alpha, reverse=True)), tuple(sorted(beta, reverse=True))


class FactorClassifier:
    """Conjugacy-class labels for elements of one embedded factor."""

    def __init__(self, rs: RootSystem, factor: EmbeddedFactor):
        self.rs = rs
        self.factor = factor
        self._cache = {}
        self._split_reps = {}
        self._subgroup = None

    def _group(self):
        if self._subgroup is None:
            self._subgroup = subgroup_closure(self.rs, self.factor.basis)
        return self._subgroup

    def label(self, w: WeylElement):
        key = w.perm
        if key in self._cache:
            return self._cache[key]
        out = self._label(w)
        self._cache[key] = out
        return out

    def _label(self, w):
        f = self.factor
        if f.kind == "G":
            return self._g2_label(w)
        pi, signs = _signed_perm(f, w)
        if f.kind == "A":
            assert all(s == 1 for s in signs)
            seen, cyc = set(), []
            for i in range(len(pi)):
                if i in seen:
                    continue
                ln, j = 0, i
                while j not in seen:
                    seen.add(j)
                    ln += 1
                    j = pi[j]
                cyc.append(ln)
            return tuple(sorted(cyc, reverse=True))
        alpha, beta = _cycle_data(pi, signs)
        if f.kind == "BC":
            return (alpha, beta)
        # D
        if beta or any(a % 2 for a in alpha):
            return (alpha, beta, 0)
        return (alpha, beta, self._split_sign(w, alpha))

    def _g2_label(self, w):
        rs = self.rs
        m = w.matrix_on_points()
        tr = m[0][0] + m[1][1]
        if tr == 2:
            return "1"
        if tr == 1:
            return "r1"
        if tr == -1:
            return "r2"
        if tr == -2:
            return "r3"
        negated = [r for r in rs.roots if w.apply_root(r) == tuple(-x for x in r)]
        l2 = max(rs.root_length2(r) for r in negated)
        lmax = max(rs.root_length2(r) for r in rs.roots)
        return "sl" if l2 == lmax else "ss"

    def _canonical_split_rep(self, alpha):
        """The element acting as positive consecutive cycles of lengths alpha
        on the frame: the '+' representative of the split class."""
        if alpha in self._split_reps:
            return self._split_reps[alpha]
        k = self.factor.rank
        target_pi = list(range(k))
        pos = 0
        for ln in alpha:
            idxs = list(range(pos, pos + ln))
            for t in range(ln):
                target_pi[idxs[t]] = idxs[(t + 1) % ln]
            pos += ln
        target = (tuple(target_pi), (1,) * k)
        found = None
        for u in self._group():
            if _signed_perm(self.factor, u) == target:
                found = u
                break
        if found is None:
            raise CharError(f"no split representative for {alpha}")
        self._split_reps[alpha] = found
        return found

    def _split_sign(self, w, alpha):
        rep = self._canonical_split_rep(alpha)
        for u in self._group():
            if (u * w * u.inverse()).perm == rep.perm:
                return 1
        return -1
