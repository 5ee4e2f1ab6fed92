"""Partially symmetric polynomial spaces and the dual assignment maps.

A `SymContext` is a list of variable groups, each carrying full symmetric
group invariance; degree slices have the monomial symmetric (orbit sum)
basis, indexed by one partition per group.  The assignment maps send
variables to variables; their matrices on orbit bases are exact integer
matrices, and kernel intersections / images are computed by rational
linear algebra.

The maps implemented are the graded duals of the inclusion of a product
subspace into a jet component (one target group per lattice point) and the
index-unwinding map of the lifted situation (one target group per (point,
height) pair), plus the supersymmetric-polynomial machinery used by the
splitting argument.
"""

from fractions import Fraction
from itertools import combinations

from .exactpoly import Poly
from .linalg import RowReducer, nullspace_dense


def _partitions(total, max_parts):
    """Weakly decreasing tuples of positive ints, sum = total, length <= max_parts."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return

    def rec(rem, parts_left, cap):
        if rem == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(total, max_parts, total)


def _distinct_permutations(values):
    """All distinct orderings of a multiset (small inputs only)."""
    values = sorted(values, reverse=True)
    n = len(values)
    out = []

    def rec(remaining, prefix):
        if not remaining:
            out.append(tuple(prefix))
            return
        seen = set()
        for idx, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            rec(remaining[:idx] + remaining[idx + 1:], prefix + [v])

    rec(values, [])
    return out


class SymContext:
    """Ordered variable groups with per-group symmetric invariance."""

    def __init__(self, groups):
        self.groups = [(str(label), int(size)) for label, size in groups]
        if len({g for g, _ in self.groups}) != len(self.groups):
            raise ValueError("group labels must be distinct")
        if any(size < 0 for _, size in self.groups):
            raise ValueError("group sizes must be nonnegative")

    @property
    def labels(self):
        return [g for g, _ in self.groups]

    def size(self, label):
        for g, s in self.groups:
            if g == label:
                return s
        raise KeyError(label)

    def var(self, label, k):
        return (label, k, None)

    def variables(self):
        return [(g, k) for g, s in self.groups for k in range(1, s + 1)]

    def slice_basis(self, d):
        """Orbit keys of degree d: one partition per group."""
        keys = [()]
        for _, size in self.groups:
            keys = [k + (lam,) for k in keys
                    for rem in [d - sum(sum(x) for x in k)]
                    for lam in _partitions_upto(rem, size)]
        return [k for k in keys if sum(sum(lam) for lam in k) == d]

    def orbit_exponents(self, key):
        """All exponent assignments in the orbit of the key."""
        per_group = []
        for (label, size), lam in zip(self.groups, key):
            padded = list(lam) + [0] * (size - len(lam))
            per_group.append(_distinct_permutations(padded))
        stack = [[]]
        for opts in per_group:
            stack = [acc + [o] for acc in stack for o in opts]
        return stack

    def canonical_of_exponents(self, exps):
        """The orbit key of a per-group exponent assignment, or None if the
        assignment is not the canonical (sorted) representative."""
        key = []
        for e in exps:
            s = tuple(sorted(e, reverse=True))
            if tuple(e) != s:
                return None
            key.append(tuple(x for x in s if x))
        return tuple(key)

    def monomial_of_key(self, key):
        """Canonical representative monomial of an orbit key, as a Poly."""
        p = Poly.constant(1)
        for (label, _), lam in zip(self.groups, key):
            for k, e in enumerate(lam, start=1):
                p = p * Poly.variable(self.var(label, k), e)
        return p

    def orbit_sum(self, key):
        """The monomial symmetric polynomial of the key."""
        out = Poly.zero()
        for exps in self.orbit_exponents(key):
            mono = []
            for (label, _), e in zip(self.groups, exps):
                for k, exp in enumerate(e, start=1):
                    if exp:
                        mono.append(((label, k, None), exp))
            out = out + Poly({tuple(sorted(mono)): 1})
        return out

    def power_sum(self, label, k):
        """p_k of one group."""
        out = Poly.zero()
        for i in range(1, self.size(label) + 1):
            out = out + Poly.variable(self.var(label, i), k)
        return out

    def poly_to_vector(self, p, d):
        """Coefficients of a symmetric Poly on the degree-d orbit basis.

        Reads off the coefficient at the canonical representative of each
        orbit; raises if the polynomial has a variable outside the context
        or is not homogeneous of degree d.
        """
        vec = {}
        labels = {g for g, _ in self.groups}
        for mono, c in p.terms.items():
            exps = {g: [0] * s for g, s in self.groups}
            deg = 0
            for (label, k, _), e in mono:
                if label not in labels:
                    raise ValueError("variable group %r not in context" % label)
                exps[label][k - 1] = e
                deg += e
            if deg != d:
                raise ValueError("polynomial not homogeneous of degree %d" % d)
            key = self.canonical_of_exponents(
                [exps[g] for g, _ in self.groups])
            if key is not None:
                vec[key] = Fraction(c)
        return vec


def _partitions_upto(total_max, size):
    out = []
    for t in range(total_max + 1):
        out.extend(_partitions(t, size))
    return out


class AssignmentMap:
    """A variable-to-variable substitution between two SymContexts."""

    def __init__(self, source, target, assign, name=""):
        self.source = source
        self.target = target
        self.assign = dict(assign)
        self.name = name
        src_vars = set(source.variables())
        if set(self.assign) != src_vars:
            raise ValueError("assignment must cover exactly the source variables")
        tgt_vars = set(target.variables())
        if not set(self.assign.values()) <= tgt_vars:
            raise ValueError("assignment image must lie in the target variables")

    def apply_to_poly(self, p):
        """Substitute on an explicit polynomial over the source variables."""
        mapping = {self.source.var(g, k): self.target.var(*self.assign[(g, k)])
                   for (g, k) in self.assign}
        return p.substitute(mapping)

    def matrix_on_slice(self, d):
        """Integer matrix of the map between degree-d orbit bases.

        Returns (target_keys, source_keys, M) with M a dict from
        (target_key, source_key) to the integer coefficient.
        """
        src_keys = self.source.slice_basis(d)
        tgt_index = {}
        M = {}
        for skey in src_keys:
            for exps in self.source.orbit_exponents(skey):
                image = {g: [0] * s for g, s in self.target.groups}
                for (g, size), e in zip(self.source.groups, exps):
                    for k in range(1, size + 1):
                        if e[k - 1]:
                            tg, tk = self.assign[(g, k)]
                            image[tg][tk - 1] += e[k - 1]
                tkey = self.target.canonical_of_exponents(
                    [image[g] for g, _ in self.target.groups])
                if tkey is None:
                    continue
                tgt_index.setdefault(tkey, None)
                M[(tkey, skey)] = M.get((tkey, skey), 0) + 1
        return sorted(tgt_index), src_keys, M


# ----------------------------------------------------------------------
# the two concrete families of maps

def phi_vee(ctx, r):
    """Dual of the inclusion of the product subspace indexed by r.

    Source: groups s_1..s_n of sizes abar plus the w-group of size L;
    target: one group per lattice point of size r_j.  Coordinate i's
    variables are split into consecutive blocks, alpha^j_i many for each of
    the r_j copies of point j, sent to t_j^(1..r_j); the w-variables are
    split L = r_1 + ... + r_m in order.
    """
    abar, L = ctx.monomial_map_exponents(r)
    source = SymContext([("s%d" % (i + 1), abar[i]) for i in range(ctx.n)]
                        + [("w", L)])
    target = SymContext([("t%d" % (j + 1), r[j]) for j in range(ctx.m)])
    assign = {}
    for i in range(ctx.n):
        pos = 1
        for j in range(ctx.m):
            alpha = ctx.points[j][i]
            for g in range(1, r[j] + 1):
                for _ in range(alpha):
                    assign[("s%d" % (i + 1), pos)] = ("t%d" % (j + 1), g)
                    pos += 1
    pos = 1
    for j in range(ctx.m):
        for g in range(1, r[j] + 1):
            assign[("w", pos)] = ("t%d" % (j + 1), g)
            pos += 1
    return AssignmentMap(source, target, assign, name="phi_vee%s" % (tuple(r),))


def psi_map(zetas, r):
    """The index-unwinding map of the lifted situation.

    ``zetas`` lists the heights zeta_1..zeta_m; ``r`` maps (i, j) with
    1 <= i <= m, 0 <= j <= zeta_i to a multiplicity.  Source groups: u_i of
    size a_i = sum_j r[i,j] and one s-group of size a = sum_j j*r[i,j];
    target groups: t_{i,j} of size r[i,j].  Each u_i^{(k)} goes bijectively
    to a t_{i,j}^{(l)} and exactly j of the s-variables land on each
    t_{i,j}^{(l)}.
    """
    m = len(zetas)
    r = {(int(i), int(j)): int(v) for (i, j), v in r.items()}
    for (i, j) in r:
        if not (1 <= i <= m and 0 <= j <= zetas[i - 1]):
            raise ValueError("index (%d, %d) out of range" % (i, j))
    a_i = [sum(r.get((i, j), 0) for j in range(zetas[i - 1] + 1))
           for i in range(1, m + 1)]
    a = sum(j * r.get((i, j), 0) for i in range(1, m + 1)
            for j in range(zetas[i - 1] + 1))
    source = SymContext([("u%d" % i, a_i[i - 1]) for i in range(1, m + 1)]
                        + [("s", a)])
    target = SymContext([("t%d_%d" % (i, j), r.get((i, j), 0))
                         for i in range(1, m + 1)
                         for j in range(zetas[i - 1] + 1)])
    assign = {}
    for i in range(1, m + 1):
        k = 1
        for j in range(zetas[i - 1] + 1):
            for l in range(1, r.get((i, j), 0) + 1):
                assign[("u%d" % i, k)] = ("t%d_%d" % (i, j), l)
                k += 1
    k = 1
    for i in range(1, m + 1):
        for j in range(1, zetas[i - 1] + 1):
            for l in range(1, r.get((i, j), 0) + 1):
                for _ in range(j):
                    assign[("s", k)] = ("t%d_%d" % (i, j), l)
                    k += 1
    return AssignmentMap(source, target, assign, name="psi%s" % (sorted(r.items()),))


# ----------------------------------------------------------------------
# kernel intersections and image slices

class ImageSlice:
    """The degree-d image of a target map on an intersection of kernels."""

    def __init__(self, dim, reducer, target_keys, degree):
        self.dim = dim
        self._reducer = reducer
        self.target_keys = target_keys
        self.degree = degree

    def contains_vector(self, vec):
        return self._reducer.contains(vec)

    def contains_poly(self, target_ctx, p):
        if p.is_zero():
            return True
        return self.contains_vector(target_ctx.poly_to_vector(p, self.degree))


def kernel_intersection_image(maps, target_map, d):
    """target_map( intersection of kernels of `maps` ) on the degree-d slice.

    All maps must share the source context.  An empty list of maps yields
    the full image of the target map.  Exact rational linear algebra on the
    orbit bases throughout.
    """
    source = target_map.source
    for mp in maps:
        if mp.source.groups != source.groups:
            raise ValueError("all maps must share the source context")
    src_keys = source.slice_basis(d)
    col_index = {k: i for i, k in enumerate(src_keys)}
    stacked = []
    for mp in maps:
        tkeys, skeys, M = mp.matrix_on_slice(d)
        rows = {t: [0] * len(src_keys) for t in tkeys}
        for (t, s), c in M.items():
            rows[t][col_index[s]] = c
        stacked.extend(rows[t] for t in tkeys)
    if stacked:
        kernel = nullspace_dense(stacked, len(src_keys))
    else:
        kernel = [[Fraction(1) if i == j else Fraction(0)
                   for j in range(len(src_keys))] for i in range(len(src_keys))]
    tkeys, _, T = target_map.matrix_on_slice(d)
    red = RowReducer()
    for kvec in kernel:
        img = {}
        for (t, s), c in T.items():
            x = kvec[col_index[s]] * c
            if x:
                img[t] = img.get(t, Fraction(0)) + x
        red.add({k: v for k, v in img.items() if v})
    return ImageSlice(red.rank, red, tkeys, d)


def product_generator(target_ctx, exponents):
    """prod over group pairs (g, g') of prod_{l,l'} (x_g^(l) - x_g'^(l'))^e.

    ``exponents`` maps ordered pairs of group labels to the exponent e.
    """
    out = Poly.constant(1)
    for (g1, g2), e in sorted(exponents.items()):
        if not e:
            continue
        for l1 in range(1, target_ctx.size(g1) + 1):
            for l2 in range(1, target_ctx.size(g2) + 1):
                diff = Poly.variable(target_ctx.var(g1, l1)) - \
                    Poly.variable(target_ctx.var(g2, l2))
                out = out * diff ** e
    return out


def split_kappa(pair_order, ij, ij2):
    """kappa((i,j), (i',j')): the count of l < j' with (i,j) before (i',l).

    ``pair_order`` is the list of all (i, j) pairs in their total order.
    """
    pos = {p: n for n, p in enumerate(pair_order)}
    (i, j), (i2, j2) = ij, ij2
    if pos[ij] > pos[ij2]:
        ij, ij2 = ij2, ij
        (i, j), (i2, j2) = ij, ij2
    return sum(1 for l in range(j2)
               if (i2, l) in pos and pos[ij] < pos[(i2, l)])


# ----------------------------------------------------------------------
# supersymmetric polynomials

def supersym_context(b, c):
    return SymContext([("p", b), ("q", c)])


def supersym_generators(b, c, k, kind="p"):
    """The degree-k generator of the supersymmetric ring.

    kind="p": p_k = sum p_i^k - sum q_j^k.  kind="h": the T^k coefficient
    of prod (1 - T p_i) / prod (1 - T q_j).
    """
    ctx = supersym_context(b, c)
    if kind == "p":
        out = Poly.zero()
        for i in range(1, b + 1):
            out = out + Poly.variable(ctx.var("p", i), k)
        for j in range(1, c + 1):
            out = out - Poly.variable(ctx.var("q", j), k)
        return out
    if kind != "h":
        raise ValueError("kind must be 'p' or 'h'")
    num = [Poly.constant(1)] + [Poly.zero()] * k
    for i in range(1, b + 1):
        fac = [Poly.constant(1), -Poly.variable(ctx.var("p", i))]
        num = _tseries_mul(num, fac, k)
    den = [Poly.constant(1)] + [Poly.zero()] * k
    for j in range(1, c + 1):
        fac = [Poly.constant(1), -Poly.variable(ctx.var("q", j))]
        den = _tseries_mul(den, fac, k)
    inv = [Poly.constant(1)] + [Poly.zero()] * k
    for t in range(1, k + 1):
        acc = Poly.zero()
        for s in range(1, t + 1):
            acc = acc + den[s] * inv[t - s]
        inv[t] = -acc
    return _tseries_mul(num, inv, k)[k]


def _tseries_mul(a, b, trunc):
    out = [Poly.zero() for _ in range(trunc + 1)]
    for i, ai in enumerate(a[:trunc + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[:trunc + 1 - i]):
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def cancellation_substitute(p, b, c):
    """Substitute p^(b) -> Z, q^(c) -> Z (the supersymmetry test map)."""
    mapping = {("p", b, None): ("Z", 0, None), ("q", c, None): ("Z", 0, None)}
    return p.substitute(mapping)


def is_supersymmetric(p, b, c):
    """Is the substituted polynomial independent of Z?"""
    sub = cancellation_substitute(p, b, c)
    return all(all(v[0] != "Z" for v, _ in mono) for mono in sub.terms)


def omega_slice(b, c, d):
    """Basis of the degree-d slice of the supersymmetric ring Omega_{b,c}.

    Solves the Z-independence constraints on the bisymmetric orbit basis;
    returns (keys, coefficient vectors).
    """
    ctx = supersym_context(b, c)
    keys = ctx.slice_basis(d)
    if b == 0 or c == 0:
        return keys, [[Fraction(1) if i == j else Fraction(0)
                       for j in range(len(keys))] for i in range(len(keys))]
    constraint_rows = {}
    for col, key in enumerate(keys):
        sub = cancellation_substitute(ctx.orbit_sum(key), b, c)
        for mono, coeff in sub.terms.items():
            if any(v[0] == "Z" for v, _ in mono):
                constraint_rows.setdefault(mono, {})[col] = coeff
    rows = []
    for mono in sorted(constraint_rows):
        row = [constraint_rows[mono].get(col, Fraction(0))
               for col in range(len(keys))]
        rows.append(row)
    if not rows:
        return keys, [[Fraction(1) if i == j else Fraction(0)
                       for j in range(len(keys))] for i in range(len(keys))]
    return keys, nullspace_dense(rows, len(keys))


def psi_bc_image_dim(b, c, d):
    """dim of the image of the cancellation map on the degree-d Omega slice."""
    ctx = supersym_context(b, c)
    small = supersym_context(b - 1, c - 1)
    keys, vectors = omega_slice(b, c, d)
    red = RowReducer()
    for vec in vectors:
        poly = Poly.zero()
        for c_, key in zip(vec, keys):
            if c_:
                poly = poly + c_ * ctx.orbit_sum(key)
        sub = cancellation_substitute(poly, b, c)
        if any(any(v[0] == "Z" for v, _ in mono) for mono in sub.terms):
            raise AssertionError("Omega slice vector failed supersymmetry")
        if not sub.is_zero():
            red.add(small.poly_to_vector(sub, d))
    return red.rank


def omega_slice_dim(b, c, d):
    _, vectors = omega_slice(b, c, d)
    return len(vectors)
