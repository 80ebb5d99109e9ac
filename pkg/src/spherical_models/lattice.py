"""Exact integer linear algebra and finitely generated abelian groups.

Everything here is arbitrary-precision integer arithmetic; no floats ever.
Vectors are rows, linear maps act on the right (``v -> v @ M``), and the rows
of a matrix are the images of the standard basis vectors.  Lattices are
sublattices of some ZZ^n, canonically represented by their row-style Hermite
normal form, so lattice equality is just equality of canonical bases.
Finitely generated abelian groups are presented by integer relation matrices
and normalized through Smith normal form; their elements are coordinate
tuples reduced modulo the invariant factors (0 encodes a free ZZ factor).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd


def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class IntMatrix:
    """An immutable matrix over ZZ."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else (0 if cols is None else cols)
        if any(len(row) != self.cols for row in data):
            raise ValueError("ragged rows")
        self.data = data

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self):
        if not self.rows:
            return IntMatrix([[] for _ in range(self.cols)], cols=0)
        return IntMatrix(tuple(zip(*self.data)), cols=self.rows)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[x * other for x in row] for row in self.data])
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = tuple(zip(*other.data))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data],
            cols=other.cols,
        )

    def __add__(self, other):
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self.data])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.data)),)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def apply_row(v, m):
    """Image of the row vector ``v`` under the matrix ``m`` (v @ m)."""
    if len(v) != m.rows:
        raise ValueError("dimension mismatch")
    return tuple(sum(v[i] * m.data[i][j] for i in range(m.rows)) for j in range(m.cols))


def hnf(m):
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular, u*m = h, pivots positive, entries above
    each pivot reduced to [0, pivot), zero rows at the bottom.  The row space
    of h equals the row space of m, so h is the canonical basis of it.
    """
    a = [list(row) for row in m.data]
    rows, cols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    pivot_row = 0
    for col in range(cols):
        # gcd out the entries at/below pivot_row in this column
        piv = None
        for i in range(pivot_row, rows):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != pivot_row:
            a[pivot_row], a[piv] = a[piv], a[pivot_row]
            u[pivot_row], u[piv] = u[piv], u[pivot_row]
        for i in range(pivot_row + 1, rows):
            while a[i][col] != 0:
                p, q = a[pivot_row][col], a[i][col]
                if q % p == 0:
                    f = q // p
                    for j in range(cols):
                        a[i][j] -= f * a[pivot_row][j]
                    for j in range(rows):
                        u[i][j] -= f * u[pivot_row][j]
                else:
                    g, x, y = _xgcd(p, q)
                    p_, q_ = p // g, q // g
                    # unimodular 2x2 combination of the two rows
                    r1 = [x * a[pivot_row][j] + y * a[i][j] for j in range(cols)]
                    r2 = [-q_ * a[pivot_row][j] + p_ * a[i][j] for j in range(cols)]
                    a[pivot_row], a[i] = r1, r2
                    s1 = [x * u[pivot_row][j] + y * u[i][j] for j in range(rows)]
                    s2 = [-q_ * u[pivot_row][j] + p_ * u[i][j] for j in range(rows)]
                    u[pivot_row], u[i] = s1, s2
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = a[pivot_row][col]
        for i in range(pivot_row):
            f = a[i][col] // p
            if f:
                for j in range(cols):
                    a[i][j] -= f * a[pivot_row][j]
                for j in range(rows):
                    u[i][j] -= f * u[pivot_row][j]
        pivot_row += 1
        if pivot_row == rows:
            break
    return IntMatrix(a, cols=cols), IntMatrix(u, cols=rows)


def snf(m):
    """Smith normal form: (d, p, q) with p*m*q = d diagonal, d_i | d_{i+1}.

    Pivot selection is by minimal absolute value, which keeps coefficient
    growth tame at the sizes this engine deals with (rank <= 16).
    """
    a = [list(row) for row in m.data]
    rows, cols = m.rows, m.cols
    p = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    q = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_op(i, f, k):  # row_i -= f * row_k
        for j in range(cols):
            a[i][j] -= f * a[k][j]
        for j in range(rows):
            p[i][j] -= f * p[k][j]

    def col_op(j, f, k):  # col_j -= f * col_k
        for i in range(rows):
            a[i][j] -= f * a[i][k]
        for i in range(cols):
            q[i][j] -= f * q[i][k]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        p[i], p[k] = p[k], p[i]

    def swap_cols(j, k):
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            q[i][j], q[i][k] = q[i][k], q[i][j]

    t = 0
    while True:
        # locate the nonzero entry of minimal absolute value in a[t:, t:]
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    f = a[i][t] // a[t][t]
                    row_op(i, f, t)
                    if a[i][t]:  # remainder became the smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    f = a[t][j] // a[t][t]
                    col_op(j, f, t)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            culprit = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_op(t, -1, culprit)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            p[t] = [-x for x in p[t]]
        t += 1
        if t == min(rows, cols):
            break
    return IntMatrix(a, cols=cols), IntMatrix(p, cols=rows), IntMatrix(q, cols=cols)


def kernel_basis(m):
    """Basis (list of rows) of {x : x @ m = 0}; the kernel is saturated."""
    h, u = hnf(m)
    out = []
    for i in range(m.rows):
        if all(x == 0 for x in h.data[i]):
            out.append(u.data[i])
    return out


def solve_row(m, v):
    """One integer solution x of x @ m = v, or None.

    Works through the HNF of m: with u*m = h, solve y @ h = v by back
    substitution on the pivots and set x = y @ u.
    """
    h, u = hnf(m)
    pivots = []
    for i in range(m.rows):
        row = h.data[i]
        j = next((k for k, x in enumerate(row) if x != 0), None)
        if j is not None:
            pivots.append((i, j))
    y = [0] * m.rows
    rest = list(v)
    for i, j in pivots:
        if rest[j] % h.data[i][j]:
            return None
        c = rest[j] // h.data[i][j]
        y[i] = c
        for k in range(m.cols):
            rest[k] -= c * h.data[i][k]
    if any(rest):
        return None
    return apply_row(tuple(y), u)


def preimage_lattice(m, target):
    """Basis of the lattice {x in ZZ^r : x @ m lies in ``target``}.

    ``m`` is r x s and ``target`` a Lattice in ZZ^s (or None for {0}).
    """
    r = m.rows
    if target is None or target.basis.rows == 0:
        return kernel_basis(m)
    t = target.basis.rows
    stacked = IntMatrix(list(m.data) + [[-x for x in row] for row in target.basis.data])
    ker = kernel_basis(stacked)
    return [row[:r] for row in ker]


class Lattice:
    """A sublattice of ZZ^n, stored by its canonical (HNF) basis."""

    __slots__ = ("ambient_rank", "basis")

    def __init__(self, ambient_rank, rows=()):
        rows = [tuple(int(x) for x in r) for r in rows]
        for r in rows:
            if len(r) != ambient_rank:
                raise ValueError("row length != ambient rank")
        h, _ = hnf(IntMatrix(rows) if rows else IntMatrix.zero(0, ambient_rank))
        keep = [row for row in h.data if any(row)]
        self.ambient_rank = ambient_rank
        self.basis = IntMatrix(keep, cols=ambient_rank)

    @classmethod
    def full(cls, n):
        return cls(n, IntMatrix.identity(n).data)

    @property
    def rank(self):
        return self.basis.rows

    def member(self, v):
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        return self.coords_of(v) is not None

    def coords_of(self, v):
        """Integer coordinates of v in the canonical basis, or None."""
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        # back substitution on the HNF pivot structure
        rest = list(v)
        coeffs = []
        for row in self.basis.data:
            j = next((k for k, x in enumerate(row) if x != 0), None)
            if rest[j] % row[j]:
                return None
            c = rest[j] // row[j]
            coeffs.append(c)
            for k in range(self.ambient_rank):
                rest[k] -= c * row[k]
        if any(rest):
            return None
        return tuple(coeffs)

    def contains(self, other):
        return all(self.member(row) for row in other.basis.data)

    def sum(self, other):
        if self.ambient_rank != other.ambient_rank:
            raise ValueError("ambient mismatch")
        return Lattice(self.ambient_rank, list(self.basis.data) + list(other.basis.data))

    def intersection(self, other):
        if self.ambient_rank != other.ambient_rank:
            raise ValueError("ambient mismatch")
        rows_a = list(self.basis.data)
        rows_b = list(other.basis.data)
        if not rows_a or not rows_b:
            return Lattice(self.ambient_rank)
        stacked = IntMatrix(rows_a + [[-x for x in r] for r in rows_b])
        ker = kernel_basis(stacked)
        mixed = [apply_row(row[: len(rows_a)], IntMatrix(rows_a)) for row in ker]
        return Lattice(self.ambient_rank, mixed)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_rank == other.ambient_rank
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def __repr__(self):
        return "Lattice(%d, %r)" % (self.ambient_rank, list(map(list, self.basis.data)))


def lattice_membership(v, lattice):
    """True iff v is an integral combination of the basis rows of ``lattice``."""
    return lattice.member(tuple(v))


def stabilizes(lattice, mats):
    """True iff every matrix maps the lattice into itself."""
    return all(
        lattice.member(apply_row(row, g)) for g in mats for row in lattice.basis.data
    )


def fixed_sublattice(lattice, mats):
    """The sublattice of points of ``lattice`` fixed by every matrix.

    ``lattice`` may be a Lattice or an integer n (meaning all of ZZ^n).  The
    matrices must stabilize the lattice; that is checked, not assumed.
    """
    if isinstance(lattice, int):
        lattice = Lattice.full(lattice)
    n = lattice.ambient_rank
    for g in mats:
        if g.rows != n or g.cols != n:
            raise ValueError("action matrix has wrong size")
    if not stabilizes(lattice, mats):
        raise ValueError("action does not stabilize the lattice")
    if not mats:
        return Lattice(n, lattice.basis.data)
    b = lattice.basis
    if b.rows == 0:
        return Lattice(n)
    # condition on coefficient rows c:  c @ (B g - B) = 0 for all g
    blocks = []
    for g in mats:
        diff = b * g - b
        blocks.append(diff)
    stacked = IntMatrix(
        [sum((list(blk.data[i]) for blk in blocks), []) for i in range(b.rows)]
    )
    coeff_rows = kernel_basis(stacked)
    return Lattice(n, [apply_row(c, b) for c in coeff_rows])


class FgAbelianGroup:
    """A finitely generated abelian group in Smith normal form coordinates.

    Built as ZZ^n modulo the row space of a relation matrix.  Elements are
    tuples in the reduced SNF coordinates: one coordinate per invariant
    factor d (taken mod d when d > 0, a free integer when d == 0); factors
    d == 1 are dropped.  ``action`` optionally carries endomorphism matrices
    (in reduced coordinates) for a group acting on this group.
    """

    __slots__ = (
        "n_gens",
        "q",
        "q_inv",
        "moduli",
        "keep",
        "invariant_factors",
        "action",
    )

    def __init__(self, n_gens, relation_rows, action=None):
        rel = IntMatrix(relation_rows) if relation_rows else IntMatrix.zero(0, n_gens)
        if rel.cols != n_gens:
            raise ValueError("relation width != generator count")
        d, p, q = snf(rel)
        self.n_gens = n_gens
        self.q = q
        self.q_inv = _unimodular_inverse(q)
        moduli = []
        for j in range(n_gens):
            moduli.append(d.data[j][j] if j < rel.rows else 0)
        self.moduli = tuple(moduli)
        self.keep = tuple(j for j, m in enumerate(moduli) if m != 1)
        self.invariant_factors = tuple(moduli[j] for j in self.keep)
        self.action = None
        if action is not None:
            self.action = tuple(self._reduce_endomorphism(m) for m in action)
            for m in self.action:
                self._check_endomorphism(m)

    # -- element plumbing ------------------------------------------------

    @property
    def rank(self):
        return len(self.keep)

    def zero(self):
        return (0,) * self.rank

    def is_trivial(self):
        return self.rank == 0

    def order(self):
        """Group order; 0 means infinite."""
        total = 1
        for d in self.invariant_factors:
            if d == 0:
                return 0
            total *= d
        return total

    def reduce(self, coords):
        out = []
        for j in self.keep:
            d = self.moduli[j]
            out.append(coords[j] % d if d > 0 else coords[j])
        return tuple(out)

    def from_ambient(self, x):
        """Class of a vector given in the original generator coordinates."""
        if len(x) != self.n_gens:
            raise ValueError("dimension mismatch")
        y = apply_row(tuple(x), self.q)
        return self.reduce(y)

    def lift(self, element):
        """Some preimage in the original generator coordinates."""
        y = [0] * self.n_gens
        for idx, j in enumerate(self.keep):
            y[j] = element[idx]
        return apply_row(tuple(y), self.q_inv)

    def add(self, a, b):
        return tuple(
            (x + y) % d if d > 0 else x + y
            for x, y, d in zip(a, b, self.invariant_factors)
        )

    def neg(self, a):
        return tuple((-x) % d if d > 0 else -x for x, d in zip(a, self.invariant_factors))

    def scale(self, a, k):
        return tuple((x * k) % d if d > 0 else x * k for x, d in zip(a, self.invariant_factors))

    def element_order(self, a):
        """Order of an element; 0 means infinite order."""
        out = 1
        for x, d in zip(a, self.invariant_factors):
            if d == 0:
                if x != 0:
                    return 0
                continue
            if x:
                o = d // gcd(d, x)
                out = out * o // gcd(out, o)
        return out

    def elements(self):
        if self.order() == 0:
            raise ValueError("infinite group")
        ranges = [range(d) for d in self.invariant_factors]
        return (tuple(t) for t in product(*ranges))

    def is_isomorphic_to(self, other):
        return _normalized_factors(self.invariant_factors) == _normalized_factors(
            other.invariant_factors
        )

    def __repr__(self):
        if not self.invariant_factors:
            return "FgAbelianGroup(trivial)"
        parts = ["Z" if d == 0 else "Z/%d" % d for d in self.invariant_factors]
        return "FgAbelianGroup(%s)" % " + ".join(parts)

    # -- induced endomorphisms --------------------------------------------

    def _reduce_endomorphism(self, m):
        """Conjugate an endomorphism on generator coordinates into reduced ones."""
        if m.rows != self.n_gens or m.cols != self.n_gens:
            raise ValueError("endomorphism has wrong size")
        full = self.q_inv * m * self.q
        return IntMatrix([[full.data[i][j] for j in self.keep] for i in self.keep])

    def _check_endomorphism(self, red):
        for i, di in enumerate(self.invariant_factors):
            for j, dj in enumerate(self.invariant_factors):
                v = di * red.data[i][j]
                if dj > 0:
                    if v % dj:
                        raise ValueError("action not well defined on the quotient")
                elif v != 0:
                    raise ValueError("action not well defined on the quotient")

    def apply_action(self, k, element):
        """Image of an element under the k-th action matrix."""
        if self.action is None:
            raise ValueError("group carries no action")
        return self.reduce_reduced(apply_row(element, self.action[k]))

    def reduce_reduced(self, coords):
        return tuple(
            x % d if d > 0 else x for x, d in zip(coords, self.invariant_factors)
        )


def _normalized_factors(factors):
    fin = sorted(d for d in factors if d > 1)
    free = sum(1 for d in factors if d == 0)
    return (tuple(fin), free)


def _unimodular_inverse(m):
    """Inverse of a unimodular integer matrix (via HNF, which must be I)."""
    h, u = hnf(m)
    if h != IntMatrix.identity(m.rows):
        raise ValueError("matrix is not unimodular")
    return u


class GroupHom:
    """A homomorphism between FgAbelianGroups, given on SNF generators.

    ``images[i]`` is the image (an element of ``target``) of the i-th reduced
    generator of ``source``.  Well-definedness (relations map to zero) is
    checked at construction.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        images = tuple(tuple(img) for img in images)
        if len(images) != source.rank:
            raise ValueError("one image per source generator required")
        for d, img in zip(source.invariant_factors, images):
            if d > 0 and any(target.scale(img, d)):
                raise ValueError("homomorphism not well defined")
        self.source = source
        self.target = target
        self.images = images

    def apply(self, element):
        out = self.target.zero()
        for x, img in zip(element, self.images):
            out = self.target.add(out, self.target.scale(img, x))
        return out

    def compose(self, inner):
        """self o inner (inner maps into self.source)."""
        return GroupHom(
            inner.source, self.target, [self.apply(img) for img in inner.images]
        )

    def preimage(self, element):
        """Some source element mapping to ``element``, or None."""
        k = self.source.rank
        img_rows = [list(img) for img in self.images]
        mod_rows = []
        for j, d in enumerate(self.target.invariant_factors):
            if d > 0:
                row = [0] * self.target.rank
                row[j] = d
                mod_rows.append(row)
        m = IntMatrix(img_rows + mod_rows)
        sol = solve_row(m, tuple(element))
        if sol is None:
            return None
        return self.source.reduce_reduced(sol[:k])

    def kernel(self):
        """Kernel as (subgroup, inclusion GroupHom into source)."""
        img_rows = [list(img) for img in self.images]
        target_rel = Lattice(
            self.target.rank,
            [
                [d if i == j else 0 for i in range(self.target.rank)]
                for j, d in enumerate(self.target.invariant_factors)
                if d > 0
            ],
        )
        m = IntMatrix(img_rows) if img_rows else IntMatrix.zero(0, self.target.rank)
        lat_rows = preimage_lattice(m, target_rel)
        return _subquotient(self.source, lat_rows)


def quotient_group(lattice, sub, action=None):
    """The quotient lattice/sub as an FgAbelianGroup, with induced action.

    Generators are the canonical basis rows of ``lattice``; relations are the
    coordinates of the basis of ``sub`` in that basis.  Optional ``action`` is
    a list of ambient matrices stabilizing both lattices; the induced
    endomorphisms are verified to be well defined.
    """
    if not lattice.contains(sub):
        raise ValueError("not a sublattice")
    rel = []
    for row in sub.basis.data:
        rel.append(list(lattice.coords_of(row)))
    induced = None
    if action is not None:
        if not stabilizes(sub, action):
            raise ValueError("action does not stabilize the subgroup of relations")
        induced = [_restriction_matrix(lattice, g) for g in action]
    return FgAbelianGroup(lattice.rank, rel, action=induced)


def _restriction_matrix(lattice, g):
    rows = []
    for row in lattice.basis.data:
        c = lattice.coords_of(apply_row(row, g))
        if c is None:
            raise ValueError("action does not stabilize the lattice")
        rows.append(list(c))
    return IntMatrix(rows)


def _subquotient(group, lat_rows, extra_relations=None):
    """Subgroup of ``group`` spanned (mod relations) by the rows ``lat_rows``.

    The rows live in the reduced coordinate space ZZ^rank of ``group``.
    Returns (subgroup, inclusion hom).  ``extra_relations`` (rows in the same
    space) are divided out on top of the ambient moduli, for quotients of one
    sublattice by another (e.g. fixed points modulo norms).
    """
    k = group.rank
    mod_rows = [
        [d if i == j else 0 for i in range(k)]
        for j, d in enumerate(group.invariant_factors)
        if d > 0
    ]
    span = Lattice(k, list(lat_rows) + mod_rows)
    rel_rows = list(mod_rows)
    if extra_relations:
        rel_rows += [list(r) for r in extra_relations]
    relations = []
    for row in rel_rows:
        c = span.coords_of(tuple(row))
        if c is None:
            raise ValueError("relations do not lie in the span")
        relations.append(list(c))
    sub = FgAbelianGroup(span.rank, relations)
    images = []
    for idx in range(sub.rank):
        amb = apply_row(sub.lift((0,) * idx + (1,) + (0,) * (sub.rank - idx - 1)), span.basis)
        images.append(group.reduce_reduced(amb))
    incl = GroupHom(sub, group, images)
    return sub, incl


def group_invariants(group):
    """Fixed points of the action carried by ``group``.

    Returns (subgroup, inclusion GroupHom).  The subgroup is presented in its
    own SNF coordinates; the inclusion records generator images in ``group``.
    """
    if group.action is None:
        raise ValueError("group carries no action")
    k = group.rank
    if k == 0:
        sub = FgAbelianGroup(0, [])
        return sub, GroupHom(sub, group, [])
    blocks = []
    ident = IntMatrix.identity(k)
    for m in group.action:
        blocks.append(m - ident)
    stacked = IntMatrix([sum((list(b.data[i]) for b in blocks), []) for i in range(k)])
    mod_target_rows = []
    nblocks = len(blocks)
    for bi in range(nblocks):
        for j, d in enumerate(group.invariant_factors):
            if d > 0:
                row = [0] * (k * nblocks)
                row[bi * k + j] = d
                mod_target_rows.append(row)
    target = Lattice(k * nblocks, mod_target_rows)
    lat_rows = preimage_lattice(stacked, target)
    return _subquotient(group, lat_rows)
