"""Exact linear algebra over the rationals.

Everything in this package that computes a dimension ultimately lands here.
Matrices are small (desk scale) but must be handled exactly: all entries are
`fractions.Fraction` and elimination is ordinary Gauss reduction with
deterministic pivoting (smallest column key first), so repeated runs produce
identical echelon bases.
"""

from fractions import Fraction


class RowReducer:
    """Incremental row-echelon accumulator for sparse rational vectors.

    Vectors are dicts mapping a comparable column key (typically a monomial)
    to a nonzero Fraction.  `add` reduces the vector against the rows seen so
    far and either absorbs it (rank grows by one, returns True) or discards
    it (linearly dependent, returns False).  Rows are kept fully reduced, so
    the reducer doubles as a membership test for the accumulated span.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> reduced row (dict col -> Fraction)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return the residue of `vec` modulo the current row space."""
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for pivot in sorted(k for k in self.rows if k in v):
            c = v.get(pivot)
            if not c:
                continue
            row = self.rows[pivot]
            for k, rc in row.items():
                nc = v.get(k, Fraction(0)) - c * rc
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = Fraction(1) / v[pivot]
        v = {k: c * inv for k, c in v.items()}
        # keep existing rows reduced against the new pivot
        for p, row in self.rows.items():
            c = row.get(pivot)
            if c:
                for k, nc in v.items():
                    upd = row.get(k, Fraction(0)) - c * nc
                    if upd:
                        row[k] = upd
                    else:
                        row.pop(k, None)
        self.rows[pivot] = v
        return True

    def add_all(self, vecs):
        for v in vecs:
            self.add(v)
        return self.rank


def rank_of(vectors):
    """Rank of an iterable of sparse vectors (dicts keyed by column)."""
    red = RowReducer()
    return red.add_all(vectors)


def rref_dense(rows, ncols):
    """Reduced row echelon form of a dense rational matrix.

    Returns (pivots, reduced_rows) where `pivots` lists the pivot column of
    each surviving row, in increasing order.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return pivots, mat[:r]


def nullspace_dense(rows, ncols):
    """Basis of the right kernel of a dense rational matrix.

    The basis vectors are the classical ones obtained from the RREF, one per
    free column, each normalized with a 1 in its free coordinate.
    """
    pivots, mat = rref_dense(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            vec[p] = -mat[row_idx][f]
        basis.append(vec)
    return basis
