"""Exact linear algebra over cyclotomic scalars.

Dense vectors are plain lists of CycloNum; matrices are lists of rows.
Sparse rows (dicts column -> CycloNum) feed an incremental row reducer
used for nullspaces, affine solves and subspace membership.  Everything
is exact; pivoting is deterministic (smallest column first).
"""

from __future__ import annotations

from .cyclo import CycloNum


class LinAlgError(Exception):
    pass


class SingularMap(LinAlgError):
    pass


def czero(conductor: int = 1) -> CycloNum:
    return CycloNum.zero(conductor)


def cone(conductor: int = 1) -> CycloNum:
    return CycloNum.one(conductor)


def zeros_vec(n: int, conductor: int = 1):
    z = czero(conductor)
    return [z] * n


def basis_vec(n: int, i: int, conductor: int = 1):
    v = zeros_vec(n, conductor)
    v[i] = cone(conductor)
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v) -> bool:
    return all(a.is_zero() for a in v)


def vec_eq(u, v) -> bool:
    return all(a == b for a, b in zip(u, v))


def dot(u, v) -> CycloNum:
    acc = None
    for a, b in zip(u, v):
        if a.is_zero() or b.is_zero():
            continue
        t = a * b
        acc = t if acc is None else acc + t
    return acc if acc is not None else czero(u[0].conductor if u else 1)


def identity_mat(n: int, conductor: int = 1):
    return [basis_vec(n, i, conductor) for i in range(n)]


def mat_vec(m, v):
    return [dot(row, v) for row in m]


def mat_mul(a, b):
    n, k = len(a), len(b)
    p = len(b[0]) if b else 0
    bt = [[b[i][j] for i in range(k)] for j in range(p)]
    return [[dot(row, col) for col in bt] for row in a]


def mat_eq(a, b) -> bool:
    return all(vec_eq(ra, rb) for ra, rb in zip(a, b))


def mat_transpose(m):
    return [list(col) for col in zip(*m)]


def mat_is_identity(m) -> bool:
    one = cone()
    for i, row in enumerate(m):
        for j, c in enumerate(row):
            if i == j:
                if c != one:
                    return False
            elif not c.is_zero():
                return False
    return True


def mat_inverse(m):
    """Gauss-Jordan inverse; raises SingularMap when singular."""
    n = len(m)
    aug = [list(row) + basis_vec(n, i) for i, row in enumerate(m)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise SingularMap("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * c for c in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [c - f * p for c, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def is_permutation_like(m) -> bool:
    """True when every row and column has exactly one nonzero entry."""
    n = len(m)
    col_seen = [False] * n
    for row in m:
        nz = [j for j, c in enumerate(row) if not c.is_zero()]
        if len(nz) != 1:
            return False
        if col_seen[nz[0]]:
            return False
        col_seen[nz[0]] = True
    return True


class RowReducer:
    """Incremental sparse Gaussian elimination with unit pivots."""

    def __init__(self):
        self.pivots = {}  # col -> sparse row (dict col -> CycloNum), pivot coeff 1

    def reduce(self, row: dict) -> dict:
        # eliminate every pivot column present, not just the leading one,
        # so returned rows are supported on pivot-free columns only
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while True:
            pcols = [c for c in row if c in self.pivots]
            if not pcols:
                return row
            c0 = min(pcols)
            f = row.pop(c0)
            for c, v in self.pivots[c0].items():
                if c == c0:
                    continue
                nv = row.get(c)
                nv = (nv - f * v) if nv is not None else (-f) * v
                if nv.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = nv

    def add(self, row: dict) -> bool:
        """Reduce row and install it as a new pivot; False if dependent."""
        rem = self.reduce(row)
        if not rem:
            return False
        lead = min(rem)
        inv = rem[lead].inverse()
        norm = {c: inv * v for c, v in rem.items()}
        # back-substitute into existing pivot rows
        for pcol, prow in self.pivots.items():
            f = prow.get(lead)
            if f is not None and not f.is_zero():
                for c, v in norm.items():
                    nv = prow.get(c)
                    nv = (nv - f * v) if nv is not None else (-f) * v
                    if nv.is_zero():
                        prow.pop(c, None)
                    else:
                        prow[c] = nv
        self.pivots[lead] = norm
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparsify(v, offset: int = 0) -> dict:
    return {offset + i: c for i, c in enumerate(v) if not c.is_zero()}


def nullspace(rows, ncols: int, conductor: int = 1):
    """Basis of {x : R x = 0} from sparse constraint rows."""
    red = RowReducer()
    for row in rows:
        red.add(row)
    free = [c for c in range(ncols) if c not in red.pivots]
    basis = []
    for f in free:
        v = zeros_vec(ncols, conductor)
        v[f] = cone(conductor)
        for pcol, prow in red.pivots.items():
            c = prow.get(f)
            if c is not None:
                v[pcol] = -c
        basis.append(v)
    return basis


def solve_affine(rows, ncols: int, conductor: int = 1):
    """Solve a sparse affine system.

    ``rows`` is an iterable of (sparse_row, rhs CycloNum).  Returns
    (particular, homogeneous_basis) or None when inconsistent.  The
    right-hand side is carried in an extra augmented column.
    """
    aug_col = ncols
    red = RowReducer()
    for row, rhs in rows:
        r = dict(row)
        if not rhs.is_zero():
            r[aug_col] = -rhs
        red.add(r)
        if aug_col in red.pivots:
            return None
    particular = zeros_vec(ncols, conductor)
    for pcol, prow in red.pivots.items():
        c = prow.get(aug_col)
        if c is not None:
            particular[pcol] = -c
    free = [c for c in range(ncols) if c not in red.pivots]
    basis = []
    for f in free:
        v = zeros_vec(ncols, conductor)
        v[f] = cone(conductor)
        for pcol, prow in red.pivots.items():
            c = prow.get(f)
            if c is not None:
                v[pcol] = -c
        basis.append(v)
    return particular, basis


class Subspace:
    """Row space of a list of vectors, with exact membership tests."""

    def __init__(self, vectors, ncols: int, conductor: int = 1):
        self.ncols = ncols
        self.conductor = conductor
        self._red = RowReducer()
        for v in vectors:
            self._red.add(sparsify(v))

    @property
    def dim(self) -> int:
        return self._red.rank

    def contains(self, v) -> bool:
        return not self._red.reduce(sparsify(v))

    def reduce(self, v) -> dict:
        return self._red.reduce(sparsify(v))

    def annihilator_rows(self):
        """Functionals phi (sparse rows) with phi(w) = 0 for all w here."""
        rows = [dict(r) for r in self._red.pivots.values()]
        sol = nullspace(rows, self.ncols, self.conductor)
        return [sparsify(v) for v in sol]
