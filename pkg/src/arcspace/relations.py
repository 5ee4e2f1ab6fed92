"""Nilpotent relation series of arc rings of toric varieties.

A relation series is a finite signed combination of products

    c * d^k'/ds^k' Y_p(s) * Y_q(s)

with a fixed derivative level k'.  The unit-cube series W_{l,k} and their
pushforwards along cube embeddings (given by the step vectors of a cube
generating datum) all have this shape; their s-coefficients are nilpotent in
the arc ring, hence vanish identically after expansion into z/w jets, which
is what `verify_identically_zero` checks order by order.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .exactpoly import Poly, series_derivative, series_mul


@dataclass(frozen=True)
class RelationSeries:
    pair: tuple          # (alpha, beta) or a label for cube series
    kprime: int
    terms: tuple         # ((coeff, derived_point, plain_point), ...)

    def __str__(self):
        chunks = []
        for c, p, q in self.terms:
            d = "Y_%s(s)" % str(p) if self.kprime == 0 else \
                "d^%d Y_%s(s)" % (self.kprime, str(p))
            chunks.append("%s %s*Y_%s(s)" % ("%+d" % c if c != 1 else "+", d, str(q)))
        return " ".join(chunks).lstrip("+ ")


def _canonical(pair, kprime, raw_terms):
    """Merge terms with equal factors; for k'=0 the factor pair is unordered."""
    acc = {}
    for c, p, q in raw_terms:
        key = tuple(sorted((p, q))) if kprime == 0 else (p, q)
        acc[key] = acc.get(key, 0) + c
    terms = tuple((c, p, q) for (p, q), c in sorted(acc.items()) if c)
    return RelationSeries(pair=pair, kprime=kprime, terms=terms)


def cube_series(l, k):
    """The unit-cube series W_{l,k}, with points of C_l as 0/1 vectors.

    W_{l,k} = sum over I in [2,l] of (-1)^|I| Y_{I u {1}}(s) d^k Y_{[2,l]-I}(s);
    its coefficients are nilpotent in the arc ring of the cube for
    0 <= k <= l-2.  The sum has 2^{l-1} terms before merging.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    if not 0 <= k <= l - 2:
        raise ValueError("derivative level k must satisfy 0 <= k <= l-2")

    def vec(subset):
        return tuple(1 if i in subset else 0 for i in range(1, l + 1))

    raw = []
    rest = list(range(2, l + 1))
    for size in range(l):
        for I in combinations(rest, size):
            plain = vec(set(I) | {1})
            derived = vec(set(rest) - set(I))
            raw.append(((-1) ** size, derived, plain))
    return _canonical(("cube", l), k, raw)


def pushforward(data, alpha, beta, kprime):
    """Image of the cube series under the embedding given by the steps.

    For a pair with exponent gamma = gamma(alpha, beta) and steps e_1 ..
    e_{gamma+1}, the series is

        sum over J in {1..gamma} of (-1)^|J|
            d^k' Y_{alpha + sum_J e}(s) * Y_{beta - sum_J e}(s),

    with 0 <= k' <= gamma - 1.  On a segment the terms with equal subscripts
    merge into binomial coefficients, recovering the one-dimensional closed
    form.  Raises when gamma = 0 (the pair carries no relation).
    """
    alpha, beta = tuple(alpha), tuple(beta)
    g = data.gamma_of(alpha, beta)
    if g == 0:
        raise ValueError("gamma(%s, %s) = 0: no relation for this pair"
                         % (alpha, beta))
    if not 0 <= kprime <= g - 1:
        raise ValueError("need 0 <= k' <= gamma - 1 = %d" % (g - 1))
    steps = data.steps_of(alpha, beta)
    if len(steps) != g + 1:
        raise ValueError("inconsistent datum: %d steps for gamma = %d on the "
                         "pair %s, %s" % (len(steps), g, alpha, beta))
    raw = []
    for size in range(g + 1):
        for J in combinations(range(g), size):
            shift = tuple(sum(steps[l][c] for l in J)
                          for c in range(len(alpha)))
            p = tuple(a + s for a, s in zip(alpha, shift))
            q = tuple(b - s for b, s in zip(beta, shift))
            raw.append(((-1) ** size, p, q))
    return _canonical((alpha, beta), kprime, raw)


def veronese_series(alpha, beta, kprime):
    """Closed binomial form of the segment relation series.

    sum_i (-1)^i C(beta-alpha-1, i) d^k' Y_{alpha+i}(s) Y_{beta-i}(s),
    for 0 <= k' <= beta - alpha - 2.
    """
    g = beta - alpha - 1
    if g <= 0 or not 0 <= kprime <= g - 1:
        raise ValueError("need beta - alpha >= 2 and 0 <= k' <= beta-alpha-2")
    raw = [((-1) ** i * comb(g, i), (alpha + i,), (beta - i,))
           for i in range(g + 1)]
    return _canonical(((alpha,), (beta,)), kprime, raw)


def coefficient_polynomial(ctx, rs, j):
    """The s^j coefficient of the series, expanded into z/w jet variables."""
    trunc = j + rs.kprime
    out = Poly.zero()
    for c, p, q in rs.terms:
        sp = ctx.generator_series(ctx.index[p], trunc)[:trunc + 1]
        for _ in range(rs.kprime):
            sp = series_derivative(sp)
        sq = ctx.generator_series(ctx.index[q], trunc)[:j + 1]
        out = out + c * series_mul(sp, sq, j)[j]
    return out


def verify_identically_zero(ctx, rs, N):
    """Do all s-coefficients up to order N expand to the zero polynomial?

    Nilpotent elements of the arc ring map to zero inside the polynomial
    ring of z/w jets, so a valid relation series must vanish identically.
    """
    return all(coefficient_polynomial(ctx, rs, j).is_zero()
               for j in range(N + 1))


def initial_part(rs, order, points):
    """The term of the series at its defining pair, with descent asserted.

    For a series built from a valid cube generating datum the initial part
    is d^k' Y_alpha(s) * Y_beta(s) at the defining pair; every other term's
    point pair must be strictly smaller in the monomial order.  Raises
    ValueError when the defining-pair term is missing or some other term is
    not strictly below it (the datum is then not cube-generating for the
    order).
    """
    index = {tuple(p): i for i, p in enumerate(points)}

    def profile(p, q):
        prof = [0] * len(points)
        prof[index[p]] += 1
        prof[index[q]] += 1
        return tuple(prof)

    if not rs.terms:
        raise ValueError("empty relation series")
    alpha, beta = rs.pair
    top = None
    for t in rs.terms:
        if {t[1], t[2]} == {alpha, beta}:
            top = t
            break
    if top is None:
        raise ValueError("series has no term at its defining pair %s, %s"
                         % (alpha, beta))
    top_profile = profile(top[1], top[2])
    for t in rs.terms:
        if t is top:
            continue
        if order.compare(profile(t[1], t[2]), top_profile) >= 0:
            raise ValueError(
                "term %s is not strictly below the defining pair %s, %s; "
                "the datum is not cube-generating for this order"
                % (t, alpha, beta))
    return top
