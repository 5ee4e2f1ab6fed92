"""Lattice polytopes: integer points, normality, and the height-lift P^zeta.

Points are plain tuples of ints.  Hull membership is decided exactly by a
phase-1 simplex over Fraction, so everything works in any dimension without
floating point.  Point lists are always ordered; the order is part of the
polytope data because the downstream constructions depend on it.

Supported point orders:

* ``graded-lex``: by total coordinate sum, then lexicographic;
* ``colex``: by last coordinate, then second-to-last, ...  This is the
  order used by all the catalog families (aliases ``paper-2d``, ``zeta``).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

ORDER_ALIASES = {"paper-2d": "colex", "zeta": "colex", "colex": "colex",
                 "graded-lex": "graded-lex"}


def point_sort_key(order):
    order = ORDER_ALIASES.get(order)
    if order == "graded-lex":
        return lambda p: (sum(p), p)
    if order == "colex":
        return lambda p: tuple(reversed(p))
    raise ValueError("unknown point order %r" % order)


# ----------------------------------------------------------------------
# exact hull membership (phase-1 simplex, Bland's rule)

def _lp_feasible(A, b):
    """Is {x >= 0 : A x = b} nonempty?  Exact rational simplex."""
    m = len(A)
    n = len(A[0]) if m else 0
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        if row[-1] < 0:
            row = [-x for x in row]
        row[n + i] = Fraction(1)
        T.append(row)
    ncols = n + m
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    def objective_row():
        obj = [Fraction(0)] * (ncols + 1)
        for i in range(m):
            ci = cost[basis[i]]
            if ci:
                for j in range(ncols + 1):
                    obj[j] += ci * T[i][j]
        for j in range(ncols):
            obj[j] = cost[j] - obj[j]
        return obj

    while True:
        obj = objective_row()
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            return sum(cost[basis[i]] * T[i][ncols] for i in range(m)) == 0
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][ncols] / T[i][entering]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise ArithmeticError("phase-1 LP unbounded; malformed input")
        r = best[1]
        piv = T[r][entering]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][entering]:
                f = T[i][entering]
                T[i] = [a - f * c for a, c in zip(T[i], T[r])]
        basis[r] = entering


def in_hull(vertices, point):
    """Exact test: is `point` in the convex hull of `vertices`?"""
    dim = len(point)
    A = [[v[i] for v in vertices] for i in range(dim)]
    A.append([1] * len(vertices))
    b = list(point) + [1]
    return _lp_feasible(A, b)


def lattice_points(vertices, order="graded-lex"):
    """All integer points of conv(vertices), sorted by the given order.

    Raises ValueError on a dimension mismatch among the vertices.
    """
    vertices = [tuple(v) for v in vertices]
    if not vertices:
        raise ValueError("need at least one vertex")
    dim = len(vertices[0])
    if any(len(v) != dim for v in vertices):
        raise ValueError("dimension mismatch among vertices")
    lo = [min(v[i] for v in vertices) for i in range(dim)]
    hi = [max(v[i] for v in vertices) for i in range(dim)]
    pts = [p for p in product(*(range(lo[i], hi[i] + 1) for i in range(dim)))
           if in_hull(vertices, p)]
    pts.sort(key=point_sort_key(order))
    return pts


def hull_vertices(generators):
    """The minimal subset of `generators` spanning the same hull."""
    gens = [tuple(g) for g in dict.fromkeys(map(tuple, generators))]
    out = []
    for g in gens:
        others = [h for h in gens if h != g]
        if not others or not in_hull(others, g):
            out.append(g)
    return out


@dataclass
class LatticePolytope:
    dim: int
    vertices: list
    points: list
    point_order: str = "graded-lex"
    index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.vertices = [tuple(v) for v in self.vertices]
        self.points = [tuple(p) for p in self.points]
        self.index = {p: i for i, p in enumerate(self.points)}

    @classmethod
    def from_vertices(cls, vertices, order="graded-lex"):
        vertices = [tuple(v) for v in vertices]
        pts = lattice_points(vertices, order)
        return cls(dim=len(vertices[0]), vertices=hull_vertices(vertices),
                   points=pts, point_order=order)

    @classmethod
    def from_points(cls, points, order_tag):
        """Polytope from an explicit, already-ordered point list."""
        points = [tuple(p) for p in points]
        return cls(dim=len(points[0]), vertices=hull_vertices(points),
                   points=points, point_order=order_tag)

    def contains(self, point):
        return tuple(point) in self.index or in_hull(self.vertices, point)

    # JSON format per the library interface:
    # {"dim": n, "vertices": [[ints]], "order": "graded-lex"|"paper-2d"|"zeta"}
    def to_json(self):
        return {"dim": self.dim, "vertices": [list(v) for v in self.vertices],
                "order": self.point_order}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        order = data.get("order", "graded-lex")
        if order not in ORDER_ALIASES:
            raise ValueError("unknown point order %r" % order)
        poly = cls.from_vertices(data["vertices"], order)
        if poly.dim != data.get("dim", poly.dim):
            raise ValueError("dim field does not match vertex dimension")
        return poly


def minkowski_sums(points, k):
    """The k-fold Minkowski sum of a point set with itself."""
    acc = {(0,) * len(points[0])}
    for _ in range(k):
        acc = {tuple(a + b for a, b in zip(p, q)) for p in acc for q in points}
    return acc


def is_normal(P, k_max=None):
    """Is every integer point of kP a sum of k integer points of P?

    Checked for k <= k_max; the default k_max = dim(P) - 1 suffices for all
    k by the standard sufficiency bound for lattice polytopes.
    """
    if k_max is None:
        k_max = max(P.dim - 1, 0)
    base = set(P.points)
    for k in range(2, k_max + 1):
        scaled = lattice_points([tuple(k * x for x in v) for v in P.vertices],
                                P.point_order)
        sums = minkowski_sums(P.points, k)
        if not set(scaled) <= sums:
            return False
    return True


# ----------------------------------------------------------------------
# height functions and the lifted polytope

@dataclass
class ZetaFunction:
    """Integer height data on the points of a polytope.

    The lift attaches point p at height zeta_max - zeta(p); for the lifted
    polytope to have exactly the prescribed lattice points, the height
    profile zeta_max - zeta must extend to a convex function on P (so zeta
    itself is midpoint-concave on lattice points).
    """
    values: dict

    def __post_init__(self):
        self.values = {tuple(p): int(v) for p, v in self.values.items()}
        if any(v < 0 for v in self.values.values()):
            raise ValueError("zeta values must be nonnegative")

    @property
    def zeta_max(self):
        return max(self.values.values())

    @classmethod
    def constant(cls, P, c):
        return cls({p: c for p in P.points})

    @classmethod
    def from_sequence(cls, seq):
        """Heights over a segment [0, len(seq)-1]."""
        return cls({(i,): v for i, v in enumerate(seq)})

    def check_on(self, P):
        missing = [p for p in P.points if p not in self.values]
        if missing:
            raise ValueError("zeta undefined at lattice points %s" % missing)
        # midpoint inequality on the height profile (sound desk-scale check;
        # the exact certificate is the lattice-point equality in lift_zeta)
        pts = P.points
        for i, x in enumerate(pts):
            for y in pts[i + 1:]:
                mid = tuple((a + b) // 2 for a, b in zip(x, y))
                if any((a + b) % 2 for a, b in zip(x, y)) or mid not in self.values:
                    continue
                if 2 * self.values[mid] < self.values[x] + self.values[y]:
                    raise ValueError(
                        "zeta profile is not liftable: midpoint inequality "
                        "fails at %s, %s" % (x, y))


def lift_zeta(P, zeta):
    """The lifted polytope P^zeta in one dimension higher.

    Convex hull of P x {zeta_max} and all points p x (zeta_max - zeta(p)).
    The lattice points are exactly {(p, a) : zeta_max - zeta(p) <= a <=
    zeta_max}, ordered by (height, base point index); a profile for which
    this fails is rejected.
    """
    zeta.check_on(P)
    zmax = max(zeta.values[p] for p in P.points)
    generators = [v + (zmax,) for v in P.vertices]
    generators += [p + (zmax - zeta.values[p],) for p in P.points]
    expected = set()
    for p in P.points:
        for a in range(zmax - zeta.values[p], zmax + 1):
            expected.add(p + (a,))
    actual = set(lattice_points(generators, "graded-lex"))
    if actual != expected:
        raise ValueError(
            "zeta profile is not liftable: hull of the lifted points has "
            "extra or missing lattice points (height profile not convex)")
    pts = sorted(expected, key=lambda q: (q[-1], P.index[q[:-1]]))
    return LatticePolytope(dim=P.dim + 1, vertices=hull_vertices(generators),
                           points=pts, point_order="zeta")
