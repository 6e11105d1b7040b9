"""Principal sl2-triples in sl_k and the adjoint decomposition.

The triple here is the standard one attached to the regular nilpotent: x has
ones on the superdiagonal, h = diag(k-1, k-3, ..., -(k-1)), and y has
subdiagonal entries i(k-i).  Sign convention: [x, y] = +h, so that the
displayed structure constants ([x^r, ad(y)x^s] = 2rs x^(r+s-1), ad(h)x^r =
2r x^r) hold literally.  Under the adjoint action of this sl2, the traceless
matrices decompose into irreducible pieces U_r of highest weight 2r, r = 1..k-1,
with basis {ad(y)^i x^r | 0 <= i <= 2r}; cf. Bourbaki LIE VIII.11 or Kostant.
"""

from fractions import Fraction
from dataclasses import dataclass

from .linalg import Matrix, bracket, rank, solve_homogeneous, solve_linear, nilpotency_data


@dataclass(frozen=True)
class Sl2Triple:
    """An sl2-triple (x, h, y) in sl_k with [h,x]=2x, [h,y]=-2y, [x,y]=h."""
    k: int
    x: Matrix
    h: Matrix
    y: Matrix

    def validate(self):
        assert bracket(self.h, self.x) == self.x.scale(2)
        assert bracket(self.h, self.y) == self.y.scale(-2)
        assert bracket(self.x, self.y) == self.h
        assert self.x.trace() == 0 and self.h.trace() == 0 and self.y.trace() == 0
        assert nilpotency_data(self.x).single_block
        return self


@dataclass(frozen=True)
class IrrepBlock:
    """The irreducible summand U_r generated by x^r, basis ad(y)^i x^r."""
    r: int
    basis: tuple  # 2r+1 matrices, index i = number of ad(y) applications


@dataclass(frozen=True)
class AdjointDecomposition:
    """sl_k = U_1 + ... + U_(k-1) together with the change of basis from the
    block basis to the elementary basis of traceless matrices."""
    k: int
    blocks: tuple  # IrrepBlock for r = 1..k-1
    change_of_basis: Matrix  # columns: block basis vectors in elementary coordinates

    def block(self, r):
        return self.blocks[r - 1]


def principal_triple(k):
    """The principal sl2-triple in sl_k.

    x is the superdiagonal-ones nilpotent (one Jordan block), h the integer
    diagonal diag(k-1, k-3, ..., -(k-1)), and y the subdiagonal matrix with
    y[i+1][i] = (i+1)(k-1-i) in 0-based indexing.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    x = Matrix.zeros(k)
    y = Matrix.zeros(k)
    xd, yd = list(x.entries), list(y.entries)
    for i in range(k - 1):
        xd[i * k + i + 1] = Fraction(1)
        yd[(i + 1) * k + i] = Fraction((i + 1) * (k - 1 - i))
    x = Matrix(k, k, xd)
    y = Matrix(k, k, yd)
    h = Matrix.diagonal([k - 1 - 2 * i for i in range(k)])
    return Sl2Triple(k, x, h, y)


@dataclass(frozen=True)
class SymPowerModel:
    """Images of the sl2 basis under Sym^(k-1), plus the diagonal matrix D
    conjugating this model onto principal_triple(k): D m D^-1 maps x,h,y
    of the symmetric-power model to those of the principal model."""
    triple: Sl2Triple
    witness: Matrix


def sym_power_rep(k):
    """The (k-1)-st symmetric power of the defining sl2 representation.

    In the monomial basis X^(k-1-i) Y^i the standard generators act by
    e: superdiagonal (1, 2, ..., k-1), f: subdiagonal (k-1, ..., 1), and
    h: diag(k-1, k-3, ..., -(k-1)).  The conjugating witness is the diagonal
    of factorials D = diag(0!, 1!, ..., (k-1)!).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    x = Matrix.zeros(k)
    y = Matrix.zeros(k)
    xd, yd = list(x.entries), list(y.entries)
    for i in range(k - 1):
        xd[i * k + i + 1] = Fraction(i + 1)       # e . X^(k-1-j) Y^j = j X^(k-j) Y^(j-1)
        yd[(i + 1) * k + i] = Fraction(k - 1 - i)  # f . X^(k-1-j) Y^j = (k-1-j) X^(k-2-j) Y^(j+1)
    x = Matrix(k, k, xd)
    y = Matrix(k, k, yd)
    h = Matrix.diagonal([k - 1 - 2 * i for i in range(k)])
    fact = [1]
    for i in range(1, k):
        fact.append(fact[-1] * i)
    witness = Matrix.diagonal(fact)
    return SymPowerModel(Sl2Triple(k, x, h, y), witness)


def _elementary_coordinates(m):
    """Coordinates of a traceless k x k matrix in the elementary basis of sl_k:
    E_ij for i != j, followed by H_i = E_ii - E_(i+1)(i+1) for i = 0..k-2.

    A diagonal traceless matrix diag(d_0..d_(k-1)) has H-coordinates the
    partial sums d_0 + ... + d_i.
    """
    k = m.rows
    coords = []
    for i in range(k):
        for j in range(k):
            if i != j:
                coords.append(m[i, j])
    partial = Fraction(0)
    for i in range(k - 1):
        partial += m[i, i]
        coords.append(partial)
    return coords


def decompose_adjoint(t):
    """Decompose sl_k into the blocks U_r under ad of the given triple.

    Returns the blocks with bases {ad(y)^i x^r} and the square change-of-basis
    matrix whose columns express the block basis in elementary coordinates.
    Raises if the change of basis fails to be invertible (it never does for a
    valid triple; the check guards the decomposition's directness).
    """
    k = t.k
    blocks = []
    for r in range(1, k):
        v = t.x ** r
        basis = [v]
        for _ in range(2 * r):
            v = bracket(t.y, v)
            basis.append(v)
        blocks.append(IrrepBlock(r, tuple(basis)))
    columns = [_elementary_coordinates(m) for b in blocks for m in b.basis]
    n = k * k - 1
    cob = Matrix(n, n, [columns[j][i] for i in range(n) for j in range(n)])
    if rank(cob) != n:
        raise RuntimeError("adjoint decomposition is not direct: change of basis singular")
    return AdjointDecomposition(k, tuple(blocks), cob)


def _diagonal_strip(m, d):
    """Entries of the d-th diagonal (j - i = d) of a k x k matrix."""
    k = m.rows
    return [m[i, i + d] for i in range(max(0, -d), min(k, k - d))]


def project_to_blocks(dec, m):
    """Write a traceless matrix as a sum of components, one in each U_r.

    The change of basis is block diagonal over the ad(h)-weight spaces (the
    block basis vector ad(y)^i x^r lives on the single diagonal j - i = r - i),
    so the defining linear system is solved one diagonal strip at a time.
    Returns a dict r -> component matrix, r = 1..k-1, components summing to m.
    """
    k = dec.k
    if m.rows != k or m.cols != k:
        raise ValueError(f"expected a {k}x{k} matrix")
    if m.trace() != 0:
        raise ValueError("matrix must be traceless")
    coeffs = {r: [Fraction(0)] * (2 * r + 1) for r in range(1, k)}
    for d in range(-(k - 1), k):
        strip = _diagonal_strip(m, d)
        if not any(strip):
            continue
        rs = list(range(max(abs(d), 1), k))
        strips = [_diagonal_strip(dec.block(r).basis[r - d], d) for r in rs]
        cols = Matrix(len(strip), len(rs),
                      [strips[j][i] for i in range(len(strip)) for j in range(len(rs))])
        sol = solve_linear(cols, strip)
        if sol is None:
            raise RuntimeError("projection system inconsistent; decomposition corrupt")
        for r, c in zip(rs, sol):
            coeffs[r][r - d] = c
    out = {}
    for r in range(1, k):
        comp = Matrix.zeros(k)
        for i, c in enumerate(coeffs[r]):
            if c:
                comp = comp + dec.block(r).basis[i].scale(c)
        out[r] = comp
    return out


def bracket_support(dec, r, s):
    """The set T of blocks hit by [U_r, U_s], by exhaustive bracketing.

    Brackets every pair of basis elements of U_r and U_s and records which
    blocks receive a nonzero component.  Always lands inside
    {max(r-s,1), ..., min(r+s, k-1)}, never contains r+s, and contains r+s-1
    whenever r+s <= k.
    """
    k = dec.k
    if not (1 <= s <= r <= k - 1):
        raise ValueError(f"need 1 <= s <= r <= k-1, got r={r}, s={s}")
    support = set()
    for a in dec.block(r).basis:
        for b in dec.block(s).basis:
            w = bracket(a, b)
            if w.is_zero():
                continue
            for t_, comp in project_to_blocks(dec, w).items():
                if not comp.is_zero():
                    support.add(t_)
    return support


def verify_bracket_identity(t, r, s):
    """Check [x^r, ad(y) x^s] == 2rs x^(r+s-1) exactly."""
    if r < 1 or s < 1:
        raise ValueError("need r, s >= 1")
    if r + s > t.k:
        raise ValueError(f"need r + s <= k = {t.k}, got {r + s}")
    lhs = bracket(t.x ** r, bracket(t.y, t.x ** s))
    rhs = (t.x ** (r + s - 1)).scale(2 * r * s)
    return lhs == rhs


def form_kernel(mats, k):
    """Basis of { B : m^T B + B m = 0 for all m in mats }, as k x k matrices.

    Solved by refining the kernel one matrix at a time: the current solution
    space is kept as a list of basis forms, and each new condition becomes a
    small linear system in the basis coefficients.  The invariance condition
    propagates to Lie brackets, so imposing it on a generating set imposes it
    on the whole generated algebra.
    """
    zero = Fraction(0)
    one = Fraction(1)
    basis = []
    for e in range(k * k):
        ent = [zero] * (k * k)
        ent[e] = one
        basis.append(Matrix(k, k, ent))
    for m in mats:
        if not basis:
            return []
        mt = m.transpose()
        image_entries = [list((mt * bmat + bmat * m).entries) for bmat in basis]
        cond = Matrix(k * k, len(basis),
                      [image_entries[j][e] for e in range(k * k) for j in range(len(basis))])
        kernel = solve_homogeneous(cond)
        basis = [
            _combine(basis, [v[i, 0] for i in range(len(basis))])
            for v in kernel
        ]
    return basis


def _combine(mats, coeffs):
    out = Matrix.zeros(mats[0].rows, mats[0].cols)
    for m, c in zip(mats, coeffs):
        if c:
            out = out + m.scale(c)
    return out


@dataclass(frozen=True)
class BilinearForm:
    form: Matrix
    symmetric: bool


def invariant_bilinear_form(t):
    """The invariant bilinear form of the triple: the unique (up to scalar)
    B with m^T B + B m = 0 for m in {x, h, y}.

    Symmetric exactly when k is odd; antisymmetric when k is even (Sym^(k-1)
    of sl2 is orthogonal or symplectic accordingly).  Raises if the solution
    space is not 1-dimensional.
    """
    kernel = form_kernel([t.h, t.x, t.y], t.k)
    if len(kernel) != 1:
        raise RuntimeError(f"invariant form space has dimension {len(kernel)}, expected 1")
    b = kernel[0]
    sym = b == b.transpose()
    anti = b == -b.transpose()
    if not (sym or anti):
        raise RuntimeError("invariant form neither symmetric nor antisymmetric")
    return BilinearForm(b, sym)


def clebsch_gordan(a, b):
    """Highest weights in Sym^a (x) Sym^b: {a+b, a+b-2, ..., |a-b|}."""
    if a < 0 or b < 0:
        raise ValueError("highest weights must be nonnegative")
    return [a + b - 2 * i for i in range(min(a, b) + 1)]
