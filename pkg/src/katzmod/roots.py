"""Root systems of the simple types, exponents, and the Weyl dimension formula.

Positive roots are generated from the Cartan matrix by root-string closure,
with no Euclidean coordinates: a candidate alpha + alpha_i is a root exactly
when q = p - <alpha, alpha_i^vee> is positive, where p is the depth of the
alpha_i-string below alpha.  Exponents are read off as the dual partition of
the height distribution of the positive roots (the number of exponents >= h
equals the number of positive roots of height h); see Bourbaki LIE VI and
Kostant.  Dimensions of irreducibles come from the Weyl dimension formula
evaluated in exact rational arithmetic.
"""

from fractions import Fraction
from functools import lru_cache
from collections import Counter, deque
from dataclasses import dataclass
from math import gcd

SIMPLE_TYPES = ("A", "B", "C", "D", "E", "F", "G")


def _valid_type(type_label, rank):
    if type_label == "A":
        return rank >= 1
    if type_label in ("B", "C"):
        return rank >= 2
    if type_label == "D":
        return rank >= 3  # D_3 permitted; isomorphic to A_3
    if type_label == "E":
        return rank in (6, 7, 8)
    if type_label == "F":
        return rank == 4
    if type_label == "G":
        return rank == 2
    return False


def cartan_matrix(type_label, rank):
    """Cartan matrix with A[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if type_label == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif type_label == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # last simple root short
    elif type_label == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # last simple root long
    elif type_label == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif type_label == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][:n - 1]
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)  # node 2 hangs off node 4
    elif type_label == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(2, 3)
    elif type_label == "G":
        link(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    return a


def _symmetrizers(cartan):
    """Coprime positive integers d_i with d_i * A[i][j] = d_j * A[j][i]."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    den = 1
    for v in d:
        den = den * v.denominator // gcd(den, v.denominator)
    out = [int(v * den) for v in d]
    g = 0
    for v in out:
        g = gcd(g, v)
    return tuple(v // g for v in out)


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple            # rows of the Cartan matrix
    positive_roots: tuple    # coordinate tuples in the simple-root basis
    symmetrizers: tuple      # d_i, proportional to half the squared root lengths

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    @property
    def a3_isomorphic(self):
        # D_3 carries the same root system as A_3
        return self.type_label == "D" and self.rank == 3


@lru_cache(maxsize=None)
def build_root_system(type_label, rank):
    """Root system for one simple type, positive roots by string closure."""
    if not _valid_type(type_label, rank):
        raise ValueError(f"not a simple type: {type_label}{rank}")
    cartan = cartan_matrix(type_label, rank)
    n = rank
    roots = set()
    layer = []
    for i in range(n):
        v = tuple(1 if j == i else 0 for j in range(n))
        roots.add(v)
        layer.append(v)
    while layer:
        nxt = []
        for alpha in layer:
            for i in range(n):
                # depth of the alpha_i-string below alpha
                p = 0
                probe = list(alpha)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * alpha[j] for j in range(n))
                if p - pairing >= 1:
                    up = list(alpha)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        layer = nxt
    positive = tuple(sorted(roots, key=lambda v: (sum(v), v)))
    return RootSystem(type_label, rank, tuple(tuple(r) for r in cartan),
                      positive, _symmetrizers(cartan))


def exponents(rs):
    """Exponents as the dual partition of the positive-root height distribution."""
    heights = Counter(sum(r) for r in rs.positive_roots)
    maxh = max(heights)
    out = []
    for h in range(1, maxh + 1):
        exact = heights.get(h, 0) - heights.get(h + 1, 0)
        out.extend([h] * exact)
    out.sort()
    assert len(out) == rs.rank
    return tuple(out)


def algebra_dimension(rs):
    """dim g = 2 * (number of positive roots) + rank."""
    return 2 * len(rs.positive_roots) + rs.rank


def weyl_dimension(rs, weight):
    """Dimension of the irreducible with the given fundamental-weight coordinates.

    dim = prod over positive roots of <w + rho, alpha^vee> / <rho, alpha^vee>;
    with alpha = sum c_j alpha_j this is
    sum(c_j (w_j + 1) d_j) / sum(c_j d_j), all exact integers and fractions.
    """
    weight = tuple(weight)
    if len(weight) != rs.rank:
        raise ValueError(f"weight needs {rs.rank} coordinates")
    if any(w < 0 for w in weight):
        raise ValueError("weight must be dominant (nonnegative coordinates)")
    d = rs.symmetrizers
    num = 1
    den = 1
    for c in rs.positive_roots:
        num *= sum(cj * (wj + 1) * dj for cj, wj, dj in zip(c, weight, d))
        den *= sum(cj * dj for cj, dj in zip(c, d))
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension failed to be an integer"
    return q


def irreps_up_to(rs, bound):
    """All dominant weights of dimension <= bound, with their dimensions.

    Breadth-first search from the zero weight along single-coordinate
    increments; the Weyl dimension is strictly increasing in each coordinate,
    so the region dim <= bound is downward closed and the search is complete.
    """
    n = rs.rank
    start = (0,) * n
    found = {start: 1}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n):
            up = w[:i] + (w[i] + 1,) + w[i + 1:]
            if up in found:
                continue
            dim = weyl_dimension(rs, up)
            if dim <= bound:
                found[up] = dim
                queue.append(up)
    return sorted(found.items())


def irreps_of_dimension(rs, k):
    """All dominant weights whose irreducible has dimension exactly k."""
    if k < 1:
        raise ValueError("dimension must be positive")
    return [w for w, d in irreps_up_to(rs, k) if d == k]
