"""Finite-index subgroups of PSL2(Z) from generator matrices.

PSL2(Z) is the free product C2 * C3 on s = S and u = ST, where
S = (0 -1; 1 0) and T = (1 1; 0 1).  Generator matrices are rewritten as
words in S, T by the Euclidean algorithm, translated to the s, u alphabet,
and fed to Todd-Coxeter coset enumeration over the presentation
< s, u | s^2 = u^3 = 1 >.  The resulting pair of permutations (of S and of T
acting on the cosets) carries everything else: cusp widths are the T-cycles,
elliptic point counts are fixed points of S and of ST, the genus comes from
Riemann-Hurwitz, the level is the lcm of the widths (Wohlfahrt), and the
congruence test is Hsu's criterion [Hsu, Proc. AMS 124 (1996)] applied to the
permutations of T and of S T^-1 S.

Three subgroups ship as named presets ("gamma43", "gamma52", "gamma711");
user-defined subgroups load from a small JSON document with fields "name"
and "generators" (rows [a, b, c, d] for the matrix (a b; c d), determinant 1).
"""

import json
import os
from dataclasses import dataclass
from math import lcm

COSET_CAP_ENV = "KATZMOD_COSET_CAP"
DEFAULT_COSET_CAP = 100_000

S_MAT = (0, -1, 1, 0)
T_MAT = (1, 1, 0, 1)
T_INV_MAT = (1, -1, 0, 1)
IDENTITY = (1, 0, 0, 1)


class CosetCapExceeded(RuntimeError):
    """Coset table grew past the configured capacity (index bound exceeded)."""


def mat_mul(a, b):
    return (a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3])


def mat_det(a):
    return a[0] * a[3] - a[1] * a[2]


def psl2_canonical(m):
    """Representative of {m, -m} with the first nonzero entry positive."""
    for x in m:
        if x > 0:
            return tuple(m)
        if x < 0:
            return tuple(-e for e in m)
    raise ValueError("zero matrix is not in PSL2(Z)")


@dataclass(frozen=True)
class GeneratorSet:
    """A named list of determinant-1 integer matrices, taken modulo +-1."""
    name: str
    generators: tuple

    def __init__(self, name, generators):
        gens = []
        for m in generators:
            m = tuple(int(x) for x in m)
            if len(m) != 4:
                raise ValueError(f"generator must have four entries, got {m}")
            if mat_det(m) != 1:
                raise ValueError(f"generator {m} has determinant {mat_det(m)}, not 1")
            gens.append(psl2_canonical(m))
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "generators", tuple(gens))


PRESETS = {
    "gamma43": GeneratorSet("gamma43", [(1, 4, 0, 1), (2, 1, 1, 1), (1, -1, 2, -1)]),
    "gamma52": GeneratorSet("gamma52", [(1, 5, 0, 1), (0, -1, 1, 0), (2, 3, 1, 2)]),
    "gamma711": GeneratorSet("gamma711", [(1, 7, 0, 1), (0, -1, 1, 0),
                                          (3, -4, 1, -1), (-1, -4, 1, 3)]),
}

FULL_GROUP = GeneratorSet("psl2z", [S_MAT, T_MAT])


def load_generator_file(path):
    """Read a GeneratorSet from a JSON document {"name": ..., "generators": [[a,b,c,d], ...]}."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "name" not in doc or "generators" not in doc:
        raise ValueError(f"{path}: expected an object with fields 'name' and 'generators'")
    return GeneratorSet(doc["name"], doc["generators"])


def resolve_subgroup(spec):
    """A preset name, or a path to a generator file."""
    if spec in PRESETS:
        return PRESETS[spec]
    if os.path.exists(spec):
        return load_generator_file(spec)
    raise ValueError(f"unknown subgroup {spec!r}: not a preset name "
                     f"({', '.join(sorted(PRESETS))}) and not a readable file")


# ---------------------------------------------------------------------------
# words in S, T


@dataclass(frozen=True)
class Word:
    """A word over the alphabet S, T, T^-1."""
    letters: tuple

    def evaluate(self):
        m = IDENTITY
        table = {"S": S_MAT, "T": T_MAT, "T^-1": T_INV_MAT}
        for letter in self.letters:
            m = mat_mul(m, table[letter])
        return m

    def __len__(self):
        return len(self.letters)


def matrix_to_word(m):
    """Rewrite a determinant-1 matrix as a word in S, T by column reduction.

    Repeatedly peels T^q S from the left while the lower-left entry is
    nonzero; evaluation of the word recovers the input up to overall sign.
    """
    m = tuple(int(x) for x in m)
    if mat_det(m) != 1:
        raise ValueError(f"matrix {m} has determinant {mat_det(m)}, not 1")
    letters = []
    a, b, c, d = m
    while c != 0:
        q = a // c
        letters.extend(["T"] * q if q >= 0 else ["T^-1"] * (-q))
        letters.append("S")
        # m <- S^-1 T^-q m, with S^-1 = (0 1; -1 0)
        a, b = a - q * c, b - q * d
        a, b, c, d = c, d, -a, -b
    n = b if a == 1 else -b
    letters.extend(["T"] * n if n >= 0 else ["T^-1"] * (-n))
    return Word(tuple(letters))


# letters of the coset machine: s = 0, u = 1, u^-1 = 2, where u = ST
_TC_RELATORS = ((0, 0), (1, 2), (2, 1), (1, 1, 1))
_TC_TRANSLATION = {"S": (0,), "T": (0, 1), "T^-1": (2, 0)}


def word_to_letters(word):
    """Translate a Word over S, T to the s, u alphabet (T = s u)."""
    out = []
    for letter in word.letters:
        out.extend(_TC_TRANSLATION[letter])
    return tuple(out)


# ---------------------------------------------------------------------------
# Todd-Coxeter enumeration (HLT-style scan with union-find coincidences)


class _CosetGraph:
    def __init__(self, ngens, cap):
        self.ngens = ngens
        self.cap = cap
        self.labels = []
        self.neighbors = []
        self.start = self.add_vertex()

    def add_vertex(self):
        if len(self.labels) >= self.cap:
            raise CosetCapExceeded(
                f"index bound exceeded: coset table grew past {self.cap} entries "
                "(the subgroup may have infinite index)")
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append([None] * self.ngens)
        return c

    def find(self, c):
        labels = self.labels
        while labels[c] != c:
            labels[c] = labels[labels[c]]
            c = labels[c]
        return c

    def unify(self, c1, c2):
        stack = [(c1, c2)]
        while stack:
            c1, c2 = stack.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            if c2 < c1:
                c1, c2 = c2, c1
            self.labels[c2] = c1
            row1, row2 = self.neighbors[c1], self.neighbors[c2]
            for d in range(self.ngens):
                n1, n2 = row1[d], row2[d]
                if n1 is None:
                    row1[d] = n2
                elif n2 is not None:
                    stack.append((n1, n2))

    def step(self, c, d):
        c = self.find(c)
        row = self.neighbors[c]
        if row[d] is None:
            row[d] = self.add_vertex()
        return self.find(row[d])

    def path(self, c, word):
        for d in word:
            c = self.step(c, d)
        return c

    def build(self, relators, subgroup_words):
        for w in subgroup_words:
            self.unify(self.path(self.start, w), self.start)
        visit = 0
        while visit < len(self.labels):
            c = self.find(visit)
            if c == visit:
                for rel in relators:
                    self.unify(self.path(c, rel), c)
            visit += 1

    def permutations(self):
        live = [c for i, c in enumerate(self.labels) if i == c]
        index_of = {c: i for i, c in enumerate(live)}
        perms = []
        for d in range(self.ngens):
            perms.append(tuple(index_of[self.find(self.neighbors[c][d])] for c in live))
        return perms


def _compose(p, q):
    """Apply p, then q; with this composition the coset action is a homomorphism."""
    return tuple(q[i] for i in p)


@dataclass(frozen=True)
class CosetTable:
    """Permutation action of PSL2(Z) on the cosets of a finite-index subgroup."""
    index: int
    perm_S: tuple
    perm_T: tuple

    def validate(self):
        n = self.index
        identity = tuple(range(n))
        assert _compose(self.perm_S, self.perm_S) == identity
        st = _compose(self.perm_S, self.perm_T)
        assert _compose(_compose(st, st), st) == identity
        # transitivity of the joint action
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for c in frontier:
                for p in (self.perm_S, self.perm_T):
                    if p[c] not in seen:
                        seen.add(p[c])
                        nxt.append(p[c])
            frontier = nxt
        assert len(seen) == n
        return self


def coset_enumerate(gens, cap=None):
    """Todd-Coxeter enumeration of the subgroup generated by a GeneratorSet.

    Raises CosetCapExceeded when the intermediate table would grow past the
    cap (default 100000, overridable via the KATZMOD_COSET_CAP environment
    variable), which signals possible infinite index.
    """
    if cap is None:
        cap = int(os.environ.get(COSET_CAP_ENV, DEFAULT_COSET_CAP))
    words = [word_to_letters(matrix_to_word(m)) for m in gens.generators]
    graph = _CosetGraph(3, cap)
    graph.build(_TC_RELATORS, words)
    perm_s, perm_u, _ = graph.permutations()
    perm_T = _compose(perm_s, perm_u)  # T = s u
    table = CosetTable(len(perm_s), perm_s, perm_T).validate()
    for w, m in zip(words, gens.generators):
        assert graph.path(graph.start, w) == graph.find(graph.start), \
            f"generator {m} does not fix the base coset"
    return table


# ---------------------------------------------------------------------------
# invariants


def _cycle_lengths(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            out.append(n)
    out.sort(reverse=True)
    return tuple(out)


def _perm_inverse(p):
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def _perm_power(p, e):
    if e < 0:
        p = _perm_inverse(p)
        e = -e
    result = tuple(range(len(p)))
    base = p
    while e:
        if e & 1:
            result = _compose(result, base)
        base = _compose(base, base)
        e >>= 1
    return result


def _perm_order(p):
    o = 1
    for c in _cycle_lengths(p):
        o = lcm(o, c)
    return o


def _is_identity(p):
    return all(i == j for i, j in enumerate(p))


@dataclass(frozen=True)
class SubgroupInvariants:
    index: int
    cusp_widths: tuple      # multiset, sorted decreasing
    nu2: int                # elliptic points of order 2
    nu3: int                # elliptic points of order 3
    genus: int
    level: int              # lcm of the cusp widths
    congruence: bool

    @property
    def cusp_count(self):
        return len(self.cusp_widths)


def invariants(table):
    """All standard invariants of the subgroup from its coset permutations.

    Cusp widths are the cycle lengths of the T-permutation; nu2 and nu3 count
    fixed points of S and of ST; the genus solves
    12 g = 12 + index - 3 nu2 - 4 nu3 - 6 (#cusps).
    """
    widths = _cycle_lengths(table.perm_T)
    mu = table.index
    nu2 = sum(1 for i, j in enumerate(table.perm_S) if i == j)
    st = _compose(table.perm_S, table.perm_T)
    nu3 = sum(1 for i, j in enumerate(st) if i == j)
    twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * len(widths)
    if twelve_g % 12 != 0 or twelve_g < 0:
        raise RuntimeError(f"Riemann-Hurwitz failed: 12g = {twelve_g}")
    level = 1
    for w in widths:
        level = lcm(level, w)
    return SubgroupInvariants(mu, widths, nu2, nu3, twelve_g // 12, level,
                              congruence_test(table))


def congruence_test(table):
    """Hsu's congruence criterion from the coset permutations.

    Tests whether specific words in the permutations of L = T and
    R = S T^-1 S are trivial; which words depends on the 2-part and odd part
    of the level N = order of L.  True exactly for congruence subgroups.
    """
    if table.index == 1:
        return True
    L = table.perm_T
    R = _compose(_compose(table.perm_S, _perm_inverse(table.perm_T)), table.perm_S)
    N = _perm_order(L)
    m = N
    e = 1
    while m % 2 == 0:
        m //= 2
        e *= 2

    def word(*perms):
        out = tuple(range(table.index))
        for p in perms:
            out = _compose(out, p)
        return out

    if e == 1:  # N odd
        half = pow(2, -1, N)
        rel = _perm_power(word(R, R, _perm_power(L, -half)), 3)
        return _is_identity(rel)

    if m == 1:  # N a power of 2
        fifth = pow(5, -1, N)
        s = word(_perm_power(L, 20), _perm_power(R, fifth), _perm_power(L, -4), _perm_inverse(R))
        rels = [
            word(_perm_inverse(L), R, _perm_inverse(L), s, L, _perm_inverse(R), L, s),
            word(_perm_inverse(s), R, s, _perm_power(R, -25)),
            _perm_power(word(s, _perm_power(R, 5), L, _perm_inverse(R), L), 3),
        ]
        return all(_is_identity(r) for r in rels)

    # general case: split N = e * m by the Chinese remainder theorem
    c = e * pow(e, -1, m) % N       # 1 mod m, 0 mod e
    d = m * pow(m, -1, e) % N       # 1 mod e, 0 mod m
    a = _perm_power(L, c)
    b = _perm_power(R, c)
    l = _perm_power(L, d)
    r = _perm_power(R, d)
    half = pow(2, -1, m)
    fifth = pow(5, -1, e)
    s = word(_perm_power(l, 20), _perm_power(r, fifth), _perm_power(l, -4), _perm_inverse(r))
    rels = [
        word(_perm_inverse(a), _perm_inverse(r), a, r),
        _perm_power(word(a, _perm_inverse(b), a), 4),
        word(_perm_power(word(a, _perm_inverse(b), a), 2), _perm_power(word(_perm_inverse(a), b), 3)),
        word(_perm_power(word(a, _perm_inverse(b), a), 2),
             _perm_power(word(b, b, _perm_power(a, -half)), -3)),
        word(_perm_inverse(l), r, _perm_inverse(l), s, l, _perm_inverse(r), l, s),
        word(_perm_inverse(s), r, s, _perm_power(r, -25)),
        word(_perm_power(word(l, _perm_inverse(r), l), 2),
             _perm_power(word(s, _perm_power(r, 5), l, _perm_inverse(r), l), 3)),
    ]
    return all(_is_identity(r) for r in rels)


# ---------------------------------------------------------------------------
# dimension formulas


def dim_cusp_forms(inv, w):
    """dim S_w for even weight w >= 2, from genus, cusps, and elliptic counts.

    For w >= 4: (w-1)(g-1) + (w/2 - 1) t + nu2 floor(w/4) + nu3 floor(w/3);
    for w = 2 the dimension is the genus.  Odd weights are rejected (fields
    of definition are ambiguous there and no formula is offered).
    """
    if w % 2 != 0 or w < 2:
        raise ValueError(f"weight must be even and >= 2, got {w}")
    if w == 2:
        return inv.genus
    return ((w - 1) * (inv.genus - 1) + (w // 2 - 1) * inv.cusp_count
            + inv.nu2 * (w // 4) + inv.nu3 * (w // 3))


def _is_preset(gens):
    target = frozenset(gens.generators)
    return any(frozenset(p.generators) == target for p in PRESETS.values())


_INVARIANTS_CACHE = {}


def subgroup_invariants(gens, cap=None):
    """Enumerate and compute invariants, memoized on the generator list."""
    key = gens.generators
    if key not in _INVARIANTS_CACHE:
        _INVARIANTS_CACHE[key] = invariants(coset_enumerate(gens, cap))
    return _INVARIANTS_CACHE[key]


def dim_rho_prim(gens, k):
    """Twice the excess of cusp-form dimensions over the full modular group,
    in weight k + 2: the dimension of the primitive part of the attached
    parabolic-cohomology representation.

    Only defined for the three shipped presets, whose congruence closure is
    the full modular group (their generator images fill PSL2(Z/level)); for
    any other input the closure is not computed and a ValueError is raised
    rather than guessing.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError(f"need even k >= 2, got {k}")
    if not _is_preset(gens):
        raise ValueError(f"congruence closure unknown for subgroup {gens.name!r}: "
                         "dim_rho_prim is only defined for the shipped presets")
    inv = subgroup_invariants(gens)
    full = subgroup_invariants(FULL_GROUP)
    return 2 * (dim_cusp_forms(inv, k + 2) - dim_cusp_forms(full, k + 2))
