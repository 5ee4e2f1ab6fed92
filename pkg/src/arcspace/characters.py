"""Truncated q-series and the closed-form graded characters.

The character of the z-degree-L component of the reduced arc ring of R(P)
is, for a strict cube generating datum with exponents gamma,

    sum over r with |r| = L of
        v^(sum r_p p) * q^(sum_{p<q} r_p r_q gamma(p,q)) * prod_p 1/(q)_{r_p}

where (q)_r = (1-q)...(1-q^r).  Characters are stored per (abar, d) with
exact integer coefficients; the torus variables v are never symbolic.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .toricring import reachable_cells


@dataclass
class QSeries:
    """A q-series truncated at q^trunc, with exact rational coefficients."""
    coeffs: list
    trunc: int

    def __post_init__(self):
        self.coeffs = [Fraction(c) for c in self.coeffs[:self.trunc + 1]]
        self.coeffs += [Fraction(0)] * (self.trunc + 1 - len(self.coeffs))

    @classmethod
    def one(cls, trunc):
        return cls([1], trunc)

    @classmethod
    def monomial(cls, k, trunc):
        c = [0] * (trunc + 1)
        if 0 <= k <= trunc:
            c[k] = 1
        return cls(c, trunc)

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d <= self.trunc else Fraction(0)

    def __add__(self, other):
        t = min(self.trunc, other.trunc)
        return QSeries([self[i] + other[i] for i in range(t + 1)], t)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            t = min(self.trunc, other.trunc)
            out = [Fraction(0)] * (t + 1)
            for i in range(t + 1):
                if not self[i]:
                    continue
                for j in range(t + 1 - i):
                    out[i + j] += self[i] * other[j]
            return QSeries(out, t)
        return QSeries([c * other for c in self.coeffs], self.trunc)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q^k (the truncation order grows accordingly)."""
        return QSeries([Fraction(0)] * k + self.coeffs, self.trunc + k)

    def __eq__(self, other):
        t = min(self.trunc, other.trunc)
        return all(self[i] == other[i] for i in range(t + 1))

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def __str__(self):
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else "%s*" % c)
                parts.append("%sq^%d" % (head, d) if d > 1 else "%sq" % head)
        body = " + ".join(parts) if parts else "0"
        return body.replace("+ -", "- ") + " + O(q^%d)" % (self.trunc + 1)


def q_pochhammer(L, trunc):
    """(q)_L = (1 - q)(1 - q^2)...(1 - q^L), truncated."""
    out = QSeries.one(trunc)
    for l in range(1, L + 1):
        out = out * (QSeries.one(trunc) + QSeries.monomial(l, trunc) * (-1))
    return out


def inv_pochhammer(r, trunc):
    """1/(q)_r: the generating series of partitions with parts <= r."""
    out = QSeries.one(trunc)
    for l in range(1, r + 1):
        geo = QSeries([1 if d % l == 0 else 0 for d in range(trunc + 1)], trunc)
        out = out * geo
    return out


def q_int_factorial_poly(n):
    """[n]_q! as an exact integer coefficient list."""
    out = [1]
    for k in range(2, n + 1):
        bracket = [1] * k
        new = [0] * (len(out) + k - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(bracket):
                new[i + j] += a * b
        out = new
    return out


def q_multinomial(n, parts, trunc):
    """The Gaussian multinomial [n]_q! / prod [n_i]_q!, truncated.

    Computed by the Pascal recurrence for q-binomials (so integrality is
    automatic), multiplying one block at a time.  Requires sum(parts) = n.
    """
    if sum(parts) != n:
        raise ValueError("parts must sum to n")
    poly = [1]
    total = 0
    for p in parts:
        total += p
        poly = _poly_mul_int(poly, _q_binomial_poly(total, p))
    coeffs = poly[:trunc + 1] + [0] * max(0, trunc + 1 - len(poly))
    if any(c < 0 for c in poly):
        raise ArithmeticError("q-multinomial produced a negative coefficient")
    return QSeries(coeffs, trunc)


def _q_binomial_poly(n, k):
    """Gaussian binomial coefficient as an integer coefficient list."""
    k = min(k, n - k)
    if k < 0:
        raise ValueError("binomial out of range")
    row = {0: [1]}
    for nn in range(1, n + 1):
        new = {0: [1]}
        for kk in range(1, min(k, nn) + 1):
            a = row.get(kk - 1, [0])
            b = row.get(kk, None) if kk <= nn - 1 else None
            qb = [0] * kk + (b if b is not None else [])
            new[kk] = _poly_add_int(a, qb)
        row = new
    return row.get(k, [1])


def _poly_add_int(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


# ----------------------------------------------------------------------
# characters

@dataclass
class CharacterSeries:
    """Graded character: coefficient of v^abar q^d, for one z-degree L."""
    L: int
    trunc: int
    terms: dict = field(default_factory=dict)   # (abar, d) -> int

    def add(self, abar, series):
        for d in range(series.trunc + 1):
            c = series[d]
            if c:
                if c.denominator != 1:
                    raise ArithmeticError("character coefficient not integral")
                key = (tuple(abar), d)
                self.terms[key] = self.terms.get(key, 0) + int(c)
                if not self.terms[key]:
                    del self.terms[key]

    def coefficient(self, abar, d):
        return self.terms.get((tuple(abar), d), 0)

    def q_series_at(self, abar):
        c = [0] * (self.trunc + 1)
        for d in range(self.trunc + 1):
            c[d] = self.coefficient(abar, d)
        return QSeries(c, self.trunc)

    def weights(self):
        return sorted({a for (a, _) in self.terms})

    def total_per_degree(self):
        out = [0] * (self.trunc + 1)
        for (_, d), c in self.terms.items():
            out[d] += c
        return out

    def rows(self):
        return [(list(a), d, c) for (a, d), c in sorted(self.terms.items())]


def gamma_weight(r, gamma, m):
    """sum over pairs i < j of r_i r_j gamma(i, j)."""
    return sum(r[i] * r[j] * gamma[(i, j)]
               for i in range(m) for j in range(i + 1, m) if r[i] and r[j])


def principal_ideal_slice_dims(r, gamma, d):
    """Coefficient of q^d in q^(sum r_i r_j gamma_ij) prod 1/(q)_{r_i}.

    This is the graded dimension of the principal-ideal dual model of one
    filtration subquotient, the formula side of the oracle comparison.
    """
    m = len(r)
    shift = gamma_weight(r, gamma, m)
    if shift > d:
        return 0
    series = QSeries.one(d)
    for ri in r:
        if ri:
            series = series * inv_pochhammer(ri, d)
    return int(series[d - shift])


def component_character(ctx, data, L, trunc):
    """The closed-form character of the z-degree-L component."""
    out = CharacterSeries(L=L, trunc=trunc)
    for abar, cell in sorted(reachable_cells(ctx, L).items()):
        for r in cell:
            shift = gamma_weight(r, data.gamma, ctx.m)
            if shift > trunc:
                continue
            series = QSeries.one(trunc - shift)
            for ri in r:
                if ri:
                    series = series * inv_pochhammer(ri, trunc - shift)
            out.add(abar, series.shift(shift))
    return out


def freeness_check(char, abar, trunc=None):
    """Necessary condition for freeness over the symmetric-function algebra:

    the per-weight character times (q)_L must have nonnegative integer
    coefficients up to the truncation order.
    """
    trunc = char.trunc if trunc is None else min(trunc, char.trunc)
    series = char.q_series_at(abar) * q_pochhammer(char.L, trunc)
    return series.is_nonnegative()


def veronese_segre_character(dims, levels, ell, trunc):
    """Character of the degree-ell component for a product of projective
    spaces embedded by degrees d_i (a product of simplices).

    Computed as (q)_ell^(m-1) times the product of the full single-factor
    characters (each of which carries one 1/(q)_ell); torus weights of the
    factors are concatenated.
    """
    from .catalog import simplex_entry, segment_entry
    if len(dims) != len(levels):
        raise ValueError("need one level per factor")
    if ell == 0:
        out = CharacterSeries(L=0, trunc=trunc)
        out.add((0,) * sum(n - 1 for n in dims), QSeries.one(trunc))
        return out
    factors = []
    for n, dlev in zip(dims, levels):
        entry = segment_entry(dlev) if n == 2 else simplex_entry(n - 1, dlev)
        factors.append(component_character(entry.context, entry.data, ell, trunc))
    poch = q_pochhammer(ell, trunc)
    out = CharacterSeries(L=ell, trunc=trunc)
    partial = {((), 0): QSeries.one(trunc)}
    for ch in factors:
        nxt = {}
        for (a0, _), s0 in partial.items():
            for abar in ch.weights():
                s = s0 * ch.q_series_at(abar)
                key = (a0 + tuple(abar), 0)
                if key in nxt:
                    nxt[key] = nxt[key] + s
                else:
                    nxt[key] = s
        partial = nxt
    for (abar, _), s in partial.items():
        for _ in range(len(factors) - 1):
            s = s * poch
        out.add(abar, s)
    return out
