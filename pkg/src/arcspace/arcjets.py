"""Brute-force dimension oracles for graded pieces of arc rings.

Everything here is independent of the closed-form characters: dimensions
are computed as exact ranks of explicit spanning sets.

* `reduced_component_dim` spans the (abar, L, d) piece of the reduced arc
  ring by expanding products of generator jets into z/w jet monomials (the
  reduced ring embeds into the polynomial jet ring, so rank = dimension).
* `nonreduced_component_dim` works on the presentation side: X-jet
  monomials modulo the slice of the ideal generated by the s-coefficients
  of the finite defining relations.
* `filtration_dims` runs the cumulative spans sum_{r' <= r} A_{r'} along a
  monomial order and records the subquotient dimensions.
"""

from itertools import combinations_with_replacement

from .exactpoly import Poly, series_coefficient, jet_series, var
from .linalg import RowReducer
from .toricring import enumerate_R


def jet_assignments(r, d):
    """All ways to attach jet orders to a product profile r, total grad d.

    Yields one tuple per point: a weakly increasing tuple of r_i jet orders;
    the grand total over all points is d.  Weakly increasing tuples suffice
    because the generator jets commute.
    """
    positions = [i for i, ri in enumerate(r) for _ in range(ri)]

    def rec(pos, remaining, prefix_floor):
        if pos == len(positions):
            if remaining == 0:
                yield ()
            return
        same_as_prev = pos > 0 and positions[pos] == positions[pos - 1]
        lo = prefix_floor if same_as_prev else 0
        for j in range(lo, remaining + 1):
            for rest in rec(pos + 1, remaining - j, j):
                yield (j,) + rest

    for flat in rec(0, d, 0):
        jets = []
        k = 0
        for ri in r:
            jets.append(tuple(flat[k:k + ri]))
            k += ri
        yield tuple(jets)


def expand_product(ctx, r, jets):
    """Exact z/w-jet expansion of prod_i prod_k Y_{p_i}^{(j^i_k)}."""
    out = Poly.constant(1)
    for i, jlist in enumerate(jets):
        for j in jlist:
            out = out * ctx.generator_jet(i, j)
    return out


def _poly_vector(p):
    return dict(p.terms)


def reduced_component_dim(ctx, abar, L, d):
    """dim of the (abar, L, d) piece of the reduced arc ring of R(P)."""
    red = RowReducer()
    for r in enumerate_R(ctx, abar, L):
        for jets in jet_assignments(r, d):
            red.add(_poly_vector(expand_product(ctx, r, jets)))
    return red.rank


def component_dims_by_degree(ctx, abar, L, dmax):
    """reduced_component_dim for d = 0..dmax, sharing the enumeration."""
    reducers = [RowReducer() for _ in range(dmax + 1)]
    for r in enumerate_R(ctx, abar, L):
        for d in range(dmax + 1):
            for jets in jet_assignments(r, d):
                reducers[d].add(_poly_vector(expand_product(ctx, r, jets)))
    return [red.rank for red in reducers]


def a_r_dim(ctx, r, d):
    """dim of the grad-d slice of the single subspace A_r."""
    red = RowReducer()
    for jets in jet_assignments(r, d):
        red.add(_poly_vector(expand_product(ctx, r, jets)))
    return red.rank


def filtration_dims(ctx, abar, L, d, order):
    """Cumulative and subquotient dimensions along the monomial order.

    Returns a list of (r, cumulative_dim, subquotient_dim) over the members
    of R(abar, L) in increasing order; the subquotient dimensions sum to
    reduced_component_dim(ctx, abar, L, d).
    """
    cell = enumerate_R(ctx, abar, L, order=order)
    red = RowReducer()
    out = []
    prev = 0
    for r in cell:
        for jets in jet_assignments(r, d):
            red.add(_poly_vector(expand_product(ctx, r, jets)))
        out.append((r, red.rank, red.rank - prev))
        prev = red.rank
    return out


# ----------------------------------------------------------------------
# the non-reduced side: X-jet monomials modulo the differential ideal slice

def x_jet_monomial(ctx, r, jets):
    """The X-jet monomial with profile r and the given jet orders."""
    out = Poly.constant(1)
    for i, jlist in enumerate(jets):
        for j in jlist:
            out = out * Poly.variable(var("X", ctx.points[i], j))
    return out


def nonreduced_component_dim(ctx, generators, abar, L, d, trunc=None):
    """dim of the (abar, L, d) piece of the arc ring of k[X]/<generators>.

    `generators` are Polys in the plain variables X_p (p a lattice point of
    the context), homogeneous with respect to (abar, L); their series
    coefficients up to grad d are multiplied by all cofactor jet monomials
    landing in the component.  The dimension is the number of X-jet
    monomials in the component minus the rank of that relation slice.
    """
    if trunc is not None and trunc < d:
        raise ValueError("truncation order %d below requested grad %d" % (trunc, d))
    basis_count = 0
    for r in enumerate_R(ctx, abar, L):
        basis_count += sum(1 for _ in jet_assignments(r, d))
    assignments = {var("X", p): jet_series("X", p, d) for p in ctx.points}
    red = RowReducer()
    for g in generators:
        ga, gL = _x_poly_degrees(ctx, g)
        rem_L = L - gL
        rem_a = tuple(a - b for a, b in zip(abar, ga))
        if rem_L < 0 or any(x < 0 for x in rem_a):
            continue
        for e in range(d + 1):
            coeff = series_coefficient(g, assignments, e)
            if coeff.is_zero():
                continue
            for c in enumerate_R(ctx, rem_a, rem_L):
                for jets in jet_assignments(c, d - e):
                    row = coeff * x_jet_monomial(ctx, c, jets)
                    red.add(_poly_vector(row))
    return basis_count - red.rank


def _x_poly_degrees(ctx, g):
    """(abar, L) of a homogeneous polynomial in the X_p variables."""
    degs = set()
    for mono in g.terms:
        a = [0] * ctx.n
        L = 0
        for (fam, p, jet), e in mono:
            if fam != "X" or jet is not None:
                raise ValueError("generators must be plain X-polynomials")
            for c in range(ctx.n):
                a[c] += e * p[c]
            L += e
        degs.add((tuple(a), L))
    if len(degs) != 1:
        raise ValueError("generator is not homogeneous in (abar, L)")
    return degs.pop()
