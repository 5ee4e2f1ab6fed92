"""Monomial orders, gamma exponents, lattice-path steps, and the zeta lift.

A *cube generating datum* for a polytope P assigns to every ordered pair of
distinct lattice points (p, q) a nonnegative exponent gamma(p, q) and a list
of gamma + 1 step vectors e_1..e_{gamma+1} such that

  * the steps sum to q - p,
  * every partial sum p + sum_{l in J} e_l is a lattice point of P,
  * e_l(q, p) = -e_l(p, q),
  * for every proper nonempty J the intermediate product
    X_{p + sum_J e} X_{q - sum_J e} is strictly smaller than X_p X_q in the
    attached monomial order (so X_p X_q is the initial pair of the relation
    series built from the datum).

The lift construction turns a datum for P into one for P^zeta; iterating it
from a segment produces the data for boxes, simplices and the 2D polygon
families, whose closed-form gamma values are also implemented here.
"""

from dataclasses import dataclass
from functools import cmp_to_key

from .lattice import LatticePolytope, ZetaFunction, lift_zeta


# ----------------------------------------------------------------------
# monomial orders on N^m (m = number of lattice points)

class MonomialOrderSpec:
    kind = "abstract"

    def compare(self, r, rp):
        raise NotImplementedError

    def sort(self, vectors):
        return sorted(vectors, key=cmp_to_key(self.compare))


class GradedLexOrder(MonomialOrderSpec):
    """Total degree first, then lexicographic on the exponent vector.

    For a segment with its natural point order this is the
    weight-restricted lexicographic order of the one-dimensional family.
    """

    def __init__(self, m, kind="graded-lex"):
        self.m = m
        self.kind = kind

    def compare(self, r, rp):
        if len(r) != len(rp):
            raise ValueError("incompatible vector lengths")
        da, db = sum(r), sum(rp)
        if da != db:
            return -1 if da < db else 1
        for a, b in zip(r, rp):
            if a != b:
                return -1 if a < b else 1
        return 0


class TwoDOrder(MonomialOrderSpec):
    """The order of the two-dimensional polygon family.

    Vectors are compared first by (total degree, column sums) in the usual
    lexicographic sense, larger tuple meaning larger monomial; ties are
    broken at the smallest point (in the polygon's point order) where the
    vectors differ, smaller entry meaning smaller monomial.
    """

    kind = "2d-order"

    def __init__(self, points, eta):
        self.points = list(points)
        self.eta = eta

    def _key1(self, r):
        cols = [0] * (self.eta + 1)
        for (i, _), c in zip(self.points, r):
            cols[i] += c
        return (sum(r), *cols)

    def compare(self, r, rp):
        if len(r) != len(rp):
            raise ValueError("incompatible vector lengths")
        k1, k2 = self._key1(r), self._key1(rp)
        if k1 != k2:
            return -1 if k1 < k2 else 1
        for a, b in zip(r, rp):
            if a != b:
                return -1 if a < b else 1
        return 0


class ZetaOrder(MonomialOrderSpec):
    """The lifted order on monomials over the points of P^zeta.

    First compare the projections to the base polytope with the base order;
    on a tie compare lexicographically along the lifted point list (which is
    sorted by height, then base index), smaller entry first.
    """

    kind = "zeta-order"

    def __init__(self, base_order, base_index_of, m):
        self.base_order = base_order
        self.base_index_of = list(base_index_of)
        self.m = m
        self.base_m = (max(base_index_of) + 1) if base_index_of else 0

    def project(self, r):
        rho = [0] * self.base_m
        for bi, c in zip(self.base_index_of, r):
            rho[bi] += c
        return tuple(rho)

    def compare(self, r, rp):
        if len(r) != len(rp):
            raise ValueError("incompatible vector lengths")
        c = self.base_order.compare(self.project(r), self.project(rp))
        if c:
            return c
        for a, b in zip(r, rp):
            if a != b:
                return -1 if a < b else 1
        return 0


def compare(order, r, rp):
    """Three-way comparison of exponent vectors under a MonomialOrderSpec."""
    return order.compare(tuple(r), tuple(rp))


# ----------------------------------------------------------------------
# closed-form gamma exponents

def gamma_segment(alpha, beta, zeta=None):
    """Exponent for a pair of points of the segment [0, zeta]."""
    if not 0 <= alpha < beta or (zeta is not None and beta > zeta):
        raise ValueError("need 0 <= alpha < beta <= zeta")
    return beta - alpha - 1


def gamma_parallelepiped(ds, alpha, beta):
    """Exponent for a pair of points of the box prod [0, d_i].

    gamma = sum |beta_i - alpha_i| - S where S counts the coordinates i with
    alpha_i != beta_i whose previous differing coordinate disagrees in sign
    (or does not exist).
    """
    alpha, beta = tuple(alpha), tuple(beta)
    for p in (alpha, beta):
        if any(not 0 <= x <= d for x, d in zip(p, ds)):
            raise ValueError("point %s outside the box %s" % (p, ds))
    total = sum(abs(a - b) for a, b in zip(alpha, beta))
    S = 0
    prev_sign = None
    for a, b in zip(alpha, beta):
        if a == b:
            continue
        sign = 1 if a > b else -1
        if prev_sign is None or sign * prev_sign < 0:
            S += 1
        prev_sign = sign
    return total - S


def _colex_key(a):
    return tuple(reversed(a))


def _colex_leq(a, b):
    return tuple(reversed(a)) <= tuple(reversed(b))


def gamma_simplex(n, d, alpha, beta):
    """Exponent for a pair of points of P_{n,d} = {d >= x_n >= ... >= x_1 >= 0}.

    Gamma is the sum of per-level vertical counts kappa_0..kappa_{n-1},
    accumulated over the prefix pairs.  At each level the prefix pair is
    re-sorted colexicographically before the case split (the level-wise
    orientation need not agree with the final one), and levels on which the
    prefixes still coincide sit at the repeated-point seed value -1.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == beta:
        raise ValueError("points must be distinct")
    for p in (alpha, beta):
        if len(p) != n or any(p[i] > p[i + 1] for i in range(n - 1)) \
                or p[0] < 0 or p[-1] > d:
            raise ValueError("point %s outside the simplex P_{%d,%d}" % (p, n, d))
    total = abs(alpha[0] - beta[0]) - 1
    for i in range(1, n):
        if alpha[:i + 1] == beta[:i + 1]:
            total = -1
            continue
        lo, hi = sorted((alpha[:i + 1], beta[:i + 1]), key=_colex_key)
        (xbar, x), (ybar, y) = (lo[:i], lo[i]), (hi[:i], hi[i])
        if ybar[-1] > x:
            total += y - ybar[-1]
        elif _colex_leq(xbar, ybar):
            total += y - x
        else:
            total += y - x - 1
    return total


# ----------------------------------------------------------------------
# the reflected 2D polygon family and its lattice paths

class ReflectedPolygon:
    """Columns i = 0..eta with points (i, j), zmax - zeta_i <= j <= zmax.

    `zetas` is the concave integer profile (differences zeta_{i-1} - zeta_i
    weakly increasing); the polygon is the hull of the top row and the
    per-column bottom points.
    """

    def __init__(self, zetas):
        zetas = tuple(int(z) for z in zetas)
        if len(zetas) < 2:
            raise ValueError("need at least two columns")
        diffs = [zetas[i] - zetas[i + 1] for i in range(len(zetas) - 1)]
        if any(diffs[i] > diffs[i + 1] for i in range(len(diffs) - 1)):
            raise ValueError("profile %s is not concave" % (zetas,))
        self.zetas = zetas
        self.eta = len(zetas) - 1
        self.zmax = max(zetas)

    def bottom(self, i):
        return self.zmax - self.zetas[i]

    def contains(self, p):
        i, j = p
        return 0 <= i <= self.eta and self.bottom(i) <= j <= self.zmax

    def points(self):
        pts = [(i, j) for i in range(self.eta + 1)
               for j in range(self.bottom(i), self.zmax + 1)]
        pts.sort(key=lambda p: (p[1], p[0]))
        return pts

    def polytope(self):
        return LatticePolytope.from_points(self.points(), "paper-2d")


def _check_2d_pair(P, alpha, beta):
    if alpha == beta:
        raise ValueError("points must be distinct")
    for p in (alpha, beta):
        if not P.contains(p):
            raise ValueError("point %s outside the polygon" % (p,))
    if alpha[0] > beta[0] or (alpha[0] == beta[0] and alpha[1] > beta[1]):
        raise ValueError("pair must be ordered: alpha1 <= beta1, tie on alpha2")


def path_2d(P, alpha, beta):
    """Step vectors of the concave lattice path from alpha to beta.

    Four cases: same-or-upward rows reachable horizontally, upward with a
    bottom-following detour, downward with (alpha1, beta2) in P, and
    downward along the bottom.  Every partial sum of steps stays in P and
    the number of steps is (beta1 - alpha1) + kappa_2d(P, alpha, beta).
    """
    _check_2d_pair(P, alpha, beta)
    a1, a2 = alpha
    b1, b2 = beta
    steps = []
    if a2 <= b2:
        u = a1
        while u + 1 <= b1 and P.contains((u + 1, a2)):
            u += 1
        steps += [(1, 0)] * (u - a1)
        height = a2
        if u < b1:
            steps.append((1, P.bottom(u + 1) - a2))
            for c in range(u + 2, b1 + 1):
                steps.append((1, P.bottom(c) - P.bottom(c - 1)))
            height = P.bottom(b1)
        steps += [(0, 1)] * (b2 - height)
    elif P.contains((a1, b2)):
        steps += [(0, -1)] * (a2 - b2 - 1)
        steps.append((1, -1))
        steps += [(1, 0)] * (b1 - a1 - 1)
    else:
        u = a1
        while not P.contains((u, b2)):
            u += 1
        steps += [(0, -1)] * (a2 - P.bottom(a1))
        for c in range(a1 + 1, u):
            steps.append((1, P.bottom(c) - P.bottom(c - 1)))
        steps.append((1, b2 - P.bottom(u - 1)))
        steps += [(1, 0)] * (b1 - u)
    # partial sums stay inside by construction; assert cheaply
    x, y = alpha
    for e in steps:
        x, y = x + e[0], y + e[1]
        assert P.contains((x, y)), "path left the polygon at (%d,%d)" % (x, y)
    assert (x, y) == beta
    return steps


def kappa_2d(P, alpha, beta):
    """Number of vertical segments of path_2d, in closed form."""
    _check_2d_pair(P, alpha, beta)
    a1, a2 = alpha
    b1, b2 = beta
    if a2 <= b2:
        if P.contains((b1, a2)):
            return b2 - a2
        return b2 - P.bottom(b1)
    if P.contains((a1, b2)):
        return a2 - b2 - 1
    return a2 - P.bottom(a1)


# ----------------------------------------------------------------------
# cube generating data

@dataclass
class CubeGenData:
    points: list                 # ordered lattice points of P
    order: MonomialOrderSpec
    gamma: dict                  # (i, j) index pair -> exponent, symmetric
    steps: dict                  # (i, j) -> tuple of step vectors
    lifts: dict = None           # (i, j) -> tuple of ints f_l, or None

    def __post_init__(self):
        self.points = [tuple(p) for p in self.points]
        self.index = {p: i for i, p in enumerate(self.points)}

    @property
    def m(self):
        return len(self.points)

    def gamma_of(self, p, q):
        return self.gamma[(self.index[tuple(p)], self.index[tuple(q)])]

    def steps_of(self, p, q):
        return self.steps[(self.index[tuple(p)], self.index[tuple(q)])]

    def gamma_table(self):
        """Symmetric matrix of gamma values, diagonal zero."""
        g = [[0] * self.m for _ in range(self.m)]
        for (i, j), v in self.gamma.items():
            g[i][j] = v
        return g

    def to_json(self):
        return {
            "points": [list(p) for p in self.points],
            "order": self.order.kind,
            "gamma": self.gamma_table(),
            "steps": {"%d,%d" % k: [list(e) for e in v]
                      for k, v in sorted(self.steps.items())},
            "lifts": None if self.lifts is None else
                     {"%d,%d" % k: list(v) for k, v in sorted(self.lifts.items())},
        }


def segment_data(zeta_len):
    """The seed datum for the segment [0, zeta_len]."""
    points = [(i,) for i in range(zeta_len + 1)]
    gamma, steps = {}, {}
    for i in range(zeta_len + 1):
        for j in range(zeta_len + 1):
            if i == j:
                continue
            gamma[(i, j)] = abs(i - j) - 1
            d = 1 if j > i else -1
            steps[(i, j)] = tuple((d,) for _ in range(abs(i - j)))
    order = GradedLexOrder(zeta_len + 1, kind="weight-restricted-lex")
    return CubeGenData(points=points, order=order, gamma=gamma, steps=steps)


def _detect_coordinate(points, zeta):
    dim = len(points[0])
    for c in range(dim):
        by_val = {}
        if all(by_val.setdefault(p[c], zeta.values[p]) == zeta.values[p]
               for p in points):
            return c
    raise ValueError("zeta does not depend on a single coordinate; "
                     "supply lift integers explicitly")


def f_from_convex(data, zeta, coord=None):
    """Attach lift integers f_l for a zeta depending on one coordinate.

    Within each pair the steps are reordered by weakly increasing absolute
    value of the distinguished coordinate (ties keep the original order);
    the f_l are then zeros up to the first drop of zeta along the partial
    sums, followed by consecutive differences.  Returns a new datum with the
    reordered steps and the lifts; raises on a mixed-sign coordinate.
    """
    zvals = {tuple(p): v for p, v in zeta.values.items()}
    constant = len(set(zvals.values())) == 1
    if coord is None and not constant:
        coord = _detect_coordinate(data.points, zeta)
    new_steps = dict(data.steps)
    lifts = {}
    for i in range(data.m):
        for j in range(i + 1, data.m):
            pi, pj = data.points[i], data.points[j]
            hi, lo = (i, j) if zvals[pi] >= zvals[pj] else (j, i)
            phi = data.points[hi]
            stps = list(data.steps[(hi, lo)])
            if constant:
                f = [0] * len(stps)
            else:
                signs = {1 if e[coord] > 0 else -1 for e in stps if e[coord]}
                if len(signs) > 1:
                    raise ValueError(
                        "mixed-sign coordinate %d among steps of pair %s,%s"
                        % (coord, phi, data.points[lo]))
                stps.sort(key=lambda e: abs(e[coord]))
                f = []
                cur = phi
                prev_val = zvals[phi]
                dropped = False
                for e in stps:
                    cur = tuple(a + b for a, b in zip(cur, e))
                    val = zvals[cur]
                    if not dropped and val >= zvals[phi]:
                        f.append(0)
                    else:
                        f.append(val - (prev_val if dropped else zvals[phi]))
                        dropped = True
                    prev_val = val
            new_steps[(hi, lo)] = tuple(stps)
            new_steps[(lo, hi)] = tuple(tuple(-x for x in e) for e in stps)
            lifts[(hi, lo)] = tuple(f)
            lifts[(lo, hi)] = tuple(-x for x in f)
            _check_lift_integers(data.points[hi], new_steps[(hi, lo)],
                                 lifts[(hi, lo)], zvals)
    return CubeGenData(points=data.points, order=data.order,
                       gamma=dict(data.gamma), steps=new_steps, lifts=lifts)


def _check_lift_integers(start, steps, f, zvals):
    from itertools import combinations
    n = len(steps)
    if sum(f) != zvals[tuple(a + sum(e[c] for e in steps)
                             for c, a in enumerate(start))] - zvals[start]:
        raise ValueError("lift integers do not telescope for pair at %s" % (start,))
    for size in range(n + 1):
        for J in combinations(range(n), size):
            p = tuple(a + sum(steps[l][c] for l in J)
                      for c, a in enumerate(start))
            if zvals[start] + sum(f[l] for l in J) > zvals[p]:
                raise ValueError("lift integers violate the subset bound "
                                 "at %s, J=%s" % (start, J))


def build_zeta_data(data, P, zeta):
    """Cube generating datum for the lifted polytope P^zeta.

    Needs lift integers on `data` (attached automatically for constant zeta
    or via f_from_convex when zeta depends on one coordinate).  Returns the
    pair (lifted polytope, lifted datum); the lifted order compares base
    projections first and breaks ties along the lifted point list.
    """
    zvals = {tuple(p): v for p, v in zeta.values.items()}
    missing = [p for p in data.points if p not in zvals]
    if missing:
        raise ValueError("zeta undefined at lattice points %s" % missing)
    if data.lifts is None:
        data = f_from_convex(data, zeta)
    zmax = max(zvals[p] for p in data.points)
    PL = lift_zeta(P, zeta)
    pts = PL.points
    base_index_of = [data.index[q[:-1]] for q in pts]
    gamma, steps = {}, {}
    for u in range(len(pts)):
        for v in range(u + 1, len(pts)):
            qi, qj = pts[u], pts[v]
            i, j = base_index_of[u], base_index_of[v]
            a, b = qi[-1], qj[-1]
            gb = data.gamma[(i, j)] if i != j else -1
            ebase = data.steps[(i, j)] if i != j else ()
            bot_j = zmax - zvals[data.points[j]]
            if bot_j > a:
                kappa = b - bot_j
                f = data.lifts[(i, j)]
                heights = []
                H = a
                Bq = zmax - zvals[data.points[i]]
                for l in range(len(ebase)):
                    Bq -= f[l]
                    Hn = max(a, Bq)
                    heights.append(Hn - H)
                    H = Hn
                lifted = [e + (h,) for e, h in zip(ebase, heights)]
                lifted += [(0,) * P.dim + (1,)] * (b - H)
            elif i <= j:
                kappa = b - a
                lifted = [e + (0,) for e in ebase]
                lifted += [(0,) * P.dim + (1,)] * (b - a)
            else:
                kappa = b - a - 1
                lifted = [e + (0,) for e in ebase[:-1]]
                lifted.append(ebase[-1] + (1,))
                lifted += [(0,) * P.dim + (1,)] * (b - a - 1)
            g = gb + kappa
            assert len(lifted) == g + 1, (qi, qj, lifted, g)
            gamma[(u, v)] = gamma[(v, u)] = g
            steps[(u, v)] = tuple(lifted)
            steps[(v, u)] = tuple(tuple(-x for x in e) for e in lifted)
    order = ZetaOrder(data.order, base_index_of, len(pts))
    return PL, CubeGenData(points=pts, order=order, gamma=gamma, steps=steps)


def validate(data, P):
    """All cube-generating-data conditions, checked exhaustively.

    Returns a list of violation strings (empty means the datum is valid):
    step sums, antisymmetry, membership of every partial sum, gamma
    symmetry and step counts, and strict order descent of every proper
    intermediate product below the top pair.
    """
    from itertools import combinations
    violations = []
    pts = data.points
    members = set(P.points)
    for i in range(data.m):
        for j in range(data.m):
            if i == j:
                continue
            key = (i, j)
            if key not in data.gamma or key not in data.steps:
                violations.append("missing data for pair %s,%s" % (pts[i], pts[j]))
                continue
            g = data.gamma[key]
            stps = data.steps[key]
            if data.gamma[(j, i)] != g:
                violations.append("gamma not symmetric at %s,%s" % (pts[i], pts[j]))
            if len(stps) != g + 1:
                violations.append("pair %s,%s: %d steps for gamma=%d"
                                  % (pts[i], pts[j], len(stps), g))
            target = tuple(b - a for a, b in zip(pts[i], pts[j]))
            if tuple(sum(e[c] for e in stps) for c in range(len(target))) != target:
                violations.append("steps of %s,%s do not sum to the difference"
                                  % (pts[i], pts[j]))
            if data.steps[(j, i)] != tuple(tuple(-x for x in e) for e in stps):
                violations.append("steps of %s,%s not antisymmetric"
                                  % (pts[i], pts[j]))
            if i < j:
                top = _pair_profile(data.m, i, j)
                for size in range(len(stps) + 1):
                    for J in combinations(range(len(stps)), size):
                        mid = tuple(a + sum(stps[l][c] for l in J)
                                    for c, a in enumerate(pts[i]))
                        if mid not in members:
                            violations.append(
                                "partial sum leaves P: pair %s,%s subset %s"
                                % (pts[i], pts[j], J))
                            continue
                        if 0 < size < len(stps):
                            other = tuple(b - (m - a) for a, b, m in
                                          zip(pts[i], pts[j], mid))
                            if other not in data.index:
                                violations.append(
                                    "complement partial sum leaves P: pair "
                                    "%s,%s subset %s" % (pts[i], pts[j], J))
                                continue
                            prof = _pair_profile(
                                data.m, data.index[mid], data.index[other])
                            if data.order.compare(prof, top) >= 0:
                                violations.append(
                                    "intermediate product not below the top "
                                    "pair: %s,%s subset %s"
                                    % (pts[i], pts[j], J))
    return violations


def _pair_profile(m, i, j):
    prof = [0] * m
    prof[i] += 1
    prof[j] += 1
    return tuple(prof)
