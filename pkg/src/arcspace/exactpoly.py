"""Sparse multivariate polynomials over exact rationals, with jet variables.

A variable is a triple ``(family, index, jet)``:

* ``family`` is a short string such as ``"z"``, ``"w"``, ``"X"``;
* ``index`` identifies the generator inside the family (an int, or a tuple
  of ints for variables indexed by lattice points);
* ``jet`` is the superscript ``(j)`` of the jet variable, a nonnegative
  integer, or ``None`` for a plain (non-jet) variable.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
and a polynomial is a dict from monomials to nonzero Fractions.  All
arithmetic is exact; nothing here ever touches floating point.
"""

from fractions import Fraction


def var(family, index, jet=None):
    return (family, index, jet)


def _norm_coeff(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    self.terms[mono] = c

    # ------------------------------------------------------------------
    # constructors
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        c = _norm_coeff(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, v, exp=1):
        if exp == 0:
            return cls.constant(1)
        return cls({((v, exp),): Fraction(1)})

    # ------------------------------------------------------------------
    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return self.terms == Poly.constant(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self):
        """Deterministic iteration: monomials in sorted order."""
        return sorted(self.terms.items())

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    # ------------------------------------------------------------------
    # ring operations
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        p = Poly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _norm_coeff(other)
            if not c:
                return Poly()
            p = Poly()
            p.terms = {m: cc * c for m, cc in self.terms.items()}
            return p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mul_monomials(m1, m2)
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        p = Poly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # gradings
    def q_degree(self):
        """The grading assigning degree j to any jet variable of order j.

        Returns the common degree of all terms, or raises if the polynomial
        is not homogeneous.  The zero polynomial has q_degree 0.
        """
        degs = {_mono_q_degree(m) for m in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError("polynomial is not grad-homogeneous: %s" % sorted(degs))
        return degs.pop()

    def family_degree(self, family):
        """Total exponent of variables of the given family (must be uniform)."""
        degs = set()
        for mono in self.terms:
            degs.add(sum(e for (fam, _, _), e in mono if fam == family))
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError("polynomial not homogeneous in family %r" % family)
        return degs.pop()

    def multidegree(self, n):
        """(z-degree vector of length n, w-degree, q-degree) of a
        homogeneous z/w-jet polynomial."""
        degs = set()
        for mono in self.terms:
            z = [0] * n
            w = 0
            q = 0
            for (fam, idx, jet), e in mono:
                q += e * (jet or 0)
                if fam == "z":
                    z[idx - 1] += e
                elif fam == "w":
                    w += e
            degs.add((tuple(z), w, q))
        if not degs:
            return ((0,) * n, 0, 0)
        if len(degs) > 1:
            raise ValueError("polynomial is not multihomogeneous")
        return degs.pop()

    def substitute(self, mapping):
        """Variable-for-variable substitution (mapping: var -> var)."""
        out = Poly()
        for mono, c in self.terms.items():
            acc = {}
            for v, e in mono:
                w = mapping.get(v, v)
                acc[w] = acc.get(w, 0) + e
            key = tuple(sorted(acc.items()))
            s = out.terms.get(key, Fraction(0)) + c
            if s:
                out.terms[key] = s
            else:
                out.terms.pop(key, None)
        return out

    # ------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = []
            for (fam, idx, jet), e in mono:
                name = fam if idx in (0, None, ()) and fam in ("w", "s", "T") else "%s%s" % (fam, _fmt_index(idx))
                if jet is not None:
                    name += "^{(%d)}" % jet
                if e != 1:
                    name = "%s^%d" % (name, e) if jet is None else "(%s)^%d" % (name, e)
                factors.append(name)
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body) if factors else str(c))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        """JSON-able term list: [[ [[family,index,jet],exp], ... ], num, den]."""
        rows = []
        for mono, c in self.items():
            rows.append([[[f, list(i) if isinstance(i, tuple) else i, j], e] for (f, i, j), e in mono]
                        + [["__coeff__", c.numerator, c.denominator]])
        return rows


def _fmt_index(idx):
    if isinstance(idx, tuple):
        return "_{%s}" % ",".join(str(x) for x in idx)
    return str(idx)


def _mul_monomials(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _mono_q_degree(mono):
    return sum(e * (jet or 0) for (_, _, jet), e in mono)


# ----------------------------------------------------------------------
# truncated power series with Poly coefficients

def series_mul(a, b, trunc):
    """Product of two coefficient lists, truncated at s^trunc inclusive."""
    out = [Poly.zero() for _ in range(trunc + 1)]
    for i, ai in enumerate(a):
        if i > trunc or ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j > trunc:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def series_pow(a, n, trunc):
    result = [Poly.constant(1)] + [Poly.zero()] * trunc
    for _ in range(n):
        result = series_mul(result, a, trunc)
    return result


def series_derivative(a):
    """d/ds of a truncated series; the result is one order shorter."""
    return [(j + 1) * a[j + 1] for j in range(len(a) - 1)]


def jet_series(family, index, trunc):
    """The generating series of a jet family: sum_j X^{(j)} s^j, truncated."""
    return [Poly.variable(var(family, index, j)) for j in range(trunc + 1)]


def series_coefficient(f, assignments, d):
    """Coefficient of s^d in f evaluated at the assigned truncated series.

    ``f`` is a Poly in plain (jet=None) variables and ``assignments`` maps
    each of its variables to a coefficient list of Polys.  Raises if some
    assignment is truncated below order d.
    """
    total = Poly.zero()
    for mono, c in f.terms.items():
        prod = [Poly.constant(1)] + [Poly.zero()] * d
        for v, e in mono:
            if v not in assignments:
                raise KeyError("no series assigned to variable %r" % (v,))
            s = assignments[v]
            if len(s) < d + 1:
                raise ValueError("series for %r truncated below order %d" % (v, d))
            prod = series_mul(prod, series_pow(s, e, d), d)
        total = total + c * prod[d]
    return total


# ----------------------------------------------------------------------
# derivation actions on jet polynomials

def apply_dk(p, k):
    """Action of the Lie derivation d_k on a jet polynomial.

    On a single jet variable it is r^{(i)} |-> (i-k) r^{(i-k)}, with
    r^{(j)} = 0 for j < 0, extended to products by the Leibniz rule.  The
    result is homogeneous of q-degree shift -k.  Requires k >= -1.
    """
    if k < -1:
        raise ValueError("d_k is only defined for k >= -1")
    out = Poly.zero()
    for mono, c in p.terms.items():
        for pos, ((fam, idx, jet), e) in enumerate(mono):
            if jet is None:
                raise ValueError("d_k acts on jet variables only")
            if jet - k < 0:
                continue
            factor = Fraction(jet - k) * e
            if not factor:
                continue
            rest = _replace_in_monomial(mono, pos, (fam, idx, jet), e, (fam, idx, jet - k))
            out = out + Poly({rest: c * factor})
    return out


def apply_h_current(p, k, weights):
    """Action of the current-algebra derivation h s^k on a jet polynomial.

    ``weights`` maps a base generator to its h-eigenvalue; keys may be
    either ``(family, index)`` pairs or bare family strings.  On a jet
    variable the action is Y^{(j)} |-> weight(Y) * Y^{(j-k)} (zero when
    j < k), extended by the Leibniz rule.
    """
    if k < 0:
        raise ValueError("h s^k requires k >= 0")
    out = Poly.zero()
    for mono, c in p.terms.items():
        for pos, ((fam, idx, jet), e) in enumerate(mono):
            if jet is None:
                raise ValueError("h s^k acts on jet variables only")
            w = weights.get((fam, idx), weights.get(fam, 0))
            if not w or jet - k < 0:
                continue
            rest = _replace_in_monomial(mono, pos, (fam, idx, jet), e, (fam, idx, jet - k))
            out = out + Poly({rest: c * w * e})
    return out


def _replace_in_monomial(mono, pos, old_var, old_exp, new_var):
    acc = dict(mono)
    if old_exp == 1:
        del acc[old_var]
    else:
        acc[old_var] = old_exp - 1
    acc[new_var] = acc.get(new_var, 0) + 1
    return tuple(sorted(acc.items()))
