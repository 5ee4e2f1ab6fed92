"""The toric ring of a lattice polytope and its defining binomial ideal.

R(P) sits inside k[z_1..z_n, w], generated by Y_p = z^p w for each lattice
point p of P.  On the presentation side, each point p contributes a variable
X_p, and a monomial X^r with exponent vector r maps to z^(sum r_i p_i) w^(sum
r_i).  The fiber of that map over (abar, L) is the index set R(abar, L).

The toric ideal is computed by graded enumeration plus exact kernel linear
algebra up to a degree cap, which is sufficient (and verifiable) at desk
scale; the families studied here are quadratically generated.
"""

from fractions import Fraction
from functools import lru_cache

from .exactpoly import Poly, jet_series, series_mul, series_pow, var
from .linalg import RowReducer


class ToricContext:
    """A polytope together with its fixed, ordered list of lattice points."""

    def __init__(self, polytope):
        self.polytope = polytope
        self.points = list(polytope.points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.m = len(self.points)
        self.n = polytope.dim
        self._series_cache = {}

    def monomial_map_exponents(self, r):
        """(abar, L) of the monomial X^r under eta o tau."""
        abar = tuple(sum(ri * p[c] for ri, p in zip(r, self.points))
                     for c in range(self.n))
        return abar, sum(r)

    def monomial_map(self, r):
        """The base monomial z^abar w^L as a Poly in plain z, w variables."""
        abar, L = self.monomial_map_exponents(r)
        mono = tuple((var("z", i + 1), e) for i, e in enumerate(abar) if e)
        if L:
            mono = mono + ((var("w", 0), L),)
        return Poly({tuple(sorted(mono)): Fraction(1)})

    def x_poly(self, r, coeff=1):
        """The monomial X^r in the presentation variables."""
        mono = tuple(sorted((var("X", p), e) for p, e in zip(self.points, r) if e))
        return Poly({mono: Fraction(coeff)})

    def generator_jet(self, i, j):
        """The jet (z^p w)^{(j)} of the i-th generator, as a z/w-jet Poly."""
        return self.generator_series(i, j)[j]

    def generator_series(self, i, trunc):
        """Truncated series of Y_{p_i}(s) = (z^p w)(s) in z/w jet variables."""
        cached = self._series_cache.get(i)
        if cached is not None and len(cached) > trunc:
            return cached
        p = self.points[i]
        series = jet_series("w", 0, trunc)
        for c, e in enumerate(p):
            if e:
                zc = jet_series("z", c + 1, trunc)
                series = series_mul(series, series_pow(zc, e, trunc), trunc)
        self._series_cache[i] = series
        return series


def enumerate_R(ctx, abar, L, order=None):
    """All r in N^m with sum r_i = L and sum r_i p_i = abar.

    Exhaustive bounded search; the result is sorted ascending by `order`
    (a MonomialOrderSpec) or, by default, by graded-lex on the vectors.
    """
    abar = tuple(abar)
    out = []
    r = [0] * ctx.m

    def rec(i, rem_L, rem_a):
        if i == ctx.m:
            if rem_L == 0 and all(x == 0 for x in rem_a):
                out.append(tuple(r))
            return
        p = ctx.points[i]
        cap = rem_L
        for c in range(ctx.n):
            if p[c] > 0:
                cap = min(cap, rem_a[c] // p[c])
        for k in range(cap + 1):
            r[i] = k
            rec(i + 1, rem_L - k, tuple(a - k * pc for a, pc in zip(rem_a, p)))
        r[i] = 0

    rec(0, L, abar)
    if order is not None:
        from functools import cmp_to_key
        out.sort(key=cmp_to_key(order.compare))
    else:
        out.sort(key=lambda v: (sum(v), v))
    return out


def reachable_cells(ctx, L):
    """All (abar, cell) with nonempty R(abar, L), keyed by abar."""
    cells = {}
    r = [0] * ctx.m

    def rec(i, rem):
        if i == ctx.m - 1:
            r[i] = rem
            abar, _ = ctx.monomial_map_exponents(r)
            cells.setdefault(abar, []).append(tuple(r))
            return
        for k in range(rem + 1):
            r[i] = k
            rec(i + 1, rem - k)
        r[i] = 0

    if ctx.m == 0:
        return {}
    rec(0, L)
    for cell in cells.values():
        cell.sort(key=lambda v: (sum(v), v))
    return cells


def toric_ideal_generators(ctx, degree_cap=4, order=None):
    """Binomial generators X^u - X^v of the toric ideal, X-degree <= cap.

    Works cell by cell in increasing degree: inside the cell R(abar, L) the
    relation space is spanned by differences of cell members; binomials that
    already lie in the slice generated by lower-degree output are discarded.
    Returns a list of (u, v, Poly) with X^u the order-larger monomial.
    """
    if degree_cap < 2:
        raise ValueError("degree cap must be at least 2")
    kept = []  # (u, v) pairs in increasing degree
    for L in range(2, degree_cap + 1):
        for abar, cell in sorted(reachable_cells(ctx, L).items()):
            if len(cell) < 2:
                continue
            span = RowReducer()
            for (u, v) in kept:
                Lg = sum(u)
                rem_L = L - Lg
                if rem_L < 0:
                    continue
                rem_a = tuple(a - b for a, b in
                              zip(abar, ctx.monomial_map_exponents(u)[0]))
                if any(x < 0 for x in rem_a):
                    continue
                for cof in enumerate_R(ctx, rem_a, rem_L):
                    uu = tuple(a + b for a, b in zip(u, cof))
                    vv = tuple(a + b for a, b in zip(v, cof))
                    if uu != vv:
                        span.add({uu: 1, vv: -1})
            base = cell[0]
            for other in cell[1:]:
                if span.add({other: 1, base: -1}):
                    u, v = _sort_pair(ctx, other, base, order)
                    kept.append((u, v))
    return [(u, v, ctx.x_poly(u) - ctx.x_poly(v)) for u, v in kept]


def _sort_pair(ctx, a, b, order):
    if order is not None and order.compare(a, b) < 0:
        return b, a
    if order is None and a < b:
        return b, a
    return a, b


def hilbert_generation_check(ctx, generators, degree_cap):
    """Verify the binomials cut out the toric ring up to the degree cap.

    For each nonempty cell R(abar, L): the quotient slice must be one
    dimensional, i.e. the ideal slice spanned by cofactor multiples of the
    generators has rank |cell| - 1.  Additionally the number of nonempty
    cells at level L must equal #(LP meet Z^n), which holds for normal P.
    Returns a list of human-readable failures (empty means the check holds).
    """
    from .lattice import lattice_points
    failures = []
    pairs = [(u, v) for (u, v, _) in generators]
    for L in range(1, degree_cap + 1):
        cells = reachable_cells(ctx, L)
        scaled = lattice_points([tuple(L * x for x in vtx)
                                 for vtx in ctx.polytope.vertices])
        if len(cells) != len(scaled):
            failures.append("level %d: %d cells vs %d points of LP"
                            % (L, len(cells), len(scaled)))
        for abar, cell in sorted(cells.items()):
            if len(cell) == 1:
                continue
            span = RowReducer()
            for (u, v) in pairs:
                rem_L = L - sum(u)
                if rem_L < 0:
                    continue
                rem_a = tuple(a - b for a, b in
                              zip(abar, ctx.monomial_map_exponents(u)[0]))
                if any(x < 0 for x in rem_a):
                    continue
                for cof in enumerate_R(ctx, rem_a, rem_L):
                    uu = tuple(a + b for a, b in zip(u, cof))
                    vv = tuple(a + b for a, b in zip(v, cof))
                    if uu != vv:
                        span.add({uu: 1, vv: -1})
            if span.rank != len(cell) - 1:
                failures.append("cell (%s, %d): quotient dim %d != 1"
                                % (abar, L, len(cell) - span.rank))
    return failures
