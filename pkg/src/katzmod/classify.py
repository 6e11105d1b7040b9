"""Classification of simple subalgebras of sl_k containing a one-block nilpotent.

The scan follows the exponent criteria: a simple algebra g inside sl(V) whose
principal sl2 is the principal sl2 of sl(V) has distinct exponents bounded by
k-1, closed under (r, s) -> r+s-1 for r+s <= k, and must admit an irreducible
representation of dimension k.  Running these tests over all simple types of
rank < k leaves exactly: sl2 acting by Sym^(k-1); sl_k itself; sp_k for even
k; so_k for odd k; and G_2 at k = 7.

Two extra filters reproduce the arithmetic endgame for even k: a two-weight
Hodge-Tate constraint kills the Sym^(k-1) case (its nonzero semisimple
elements have k distinct eigenvalues), and the invariant alternating form
singles out the symplectic algebra, so the connected monodromy group is the
full group of symplectic similitudes GSp_k.
"""

from fractions import Fraction
from dataclasses import dataclass

from .linalg import Matrix
from .sl2 import principal_triple, sym_power_rep, invariant_bilinear_form, form_kernel
from .roots import build_root_system, exponents, weyl_dimension, irreps_of_dimension

LABEL_SYM_POWER = "sym_power_sl2"
LABEL_FULL_SL = "full_sl"
LABEL_SYMPLECTIC = "symplectic"
LABEL_ORTHOGONAL = "orthogonal"
LABEL_G2 = "g2"


@dataclass(frozen=True)
class ExponentCriteria:
    distinct: bool
    bounded: bool
    closed: bool

    def all_pass(self):
        return self.distinct and self.bounded and self.closed


def exponent_criteria(exps, k):
    """The exponent criteria against dimension k.

    distinct: exponents pairwise distinct; bounded: all <= k-1; closed: for
    every pair r, s of exponents (repetition allowed) with r + s <= k, the
    integer r + s - 1 is again an exponent.
    """
    exps = tuple(exps)
    if not exps:
        raise ValueError("empty exponent list")
    eset = set(exps)
    distinct = len(eset) == len(exps)
    bounded = max(exps) <= k - 1
    closed = all(r + s - 1 in eset
                 for i, r in enumerate(exps) for s in exps[i:] if r + s <= k)
    return ExponentCriteria(distinct, bounded, closed)


@dataclass(frozen=True)
class CandidateAlgebra:
    type_label: str
    rank: int
    exponents: tuple
    realizing_weights: tuple

    @property
    def name(self):
        return f"{self.type_label}_{self.rank}"


@dataclass(frozen=True)
class ClassificationCase:
    label: str
    candidate: CandidateAlgebra

    @property
    def name(self):
        return self.candidate.name

    def describe(self, k):
        return {
            LABEL_SYM_POWER: f"A_1 acting by Sym^{k - 1}",
            LABEL_FULL_SL: f"A_{k - 1} = sl_{k}",
            LABEL_SYMPLECTIC: f"C_{k // 2} = sp_{k}",
            LABEL_ORTHOGONAL: f"B_{(k - 1) // 2} = so_{k}",
            LABEL_G2: "G_2 in its 7-dimensional representation",
        }[self.label]


@dataclass(frozen=True)
class HodgeTateData:
    """A bare set of integer weights standing in for the Hodge-Tate cocharacter."""
    weights: frozenset

    def __init__(self, weights):
        object.__setattr__(self, "weights", frozenset(int(w) for w in weights))

    @property
    def weight_count(self):
        return len(self.weights)


@dataclass(frozen=True)
class FormFilterResult:
    cases: tuple
    conclusion: str | None


@dataclass(frozen=True)
class ClassificationReport:
    k: int
    raw_cases: tuple
    after_ht_filter: tuple
    after_form_filter: tuple
    conclusion: str | None


def _candidate_types(k):
    """Isomorphism classes of simple types with rank at most k-1.

    B_1, C_1, D_1..D_3 and D_2 are excluded as duplicates or non-simple
    (B_1 = C_1 = A_1, D_2 = A_1 x A_1, D_3 = A_3); B_2 and C_2 are both
    emitted and merged later by the caller.
    """
    bound = k - 1
    for n in range(1, bound + 1):
        yield ("A", n)
    for n in range(2, bound + 1):
        yield ("B", n)
    for n in range(2, bound + 1):
        yield ("C", n)
    for n in range(4, bound + 1):
        yield ("D", n)
    for n in (6, 7, 8):
        if n <= bound:
            yield ("E", n)
    if 4 <= bound:
        yield ("F", 4)
    if 2 <= bound:
        yield ("G", 2)


def _realizing_weights(rs, k):
    """Dominant weights of dimension exactly k, nonempty only if one exists.

    For A_(k-1) the defining weight and its dual are verified directly by the
    Weyl dimension formula instead of searching the weight lattice.
    """
    n = rs.rank
    if rs.type_label == "A" and n == k - 1 and n >= 2:
        first = (1,) + (0,) * (n - 1)
        last = (0,) * (n - 1) + (1,)
        out = [w for w in (first, last) if weyl_dimension(rs, w) == k]
        assert out, "defining representation of A_(k-1) must have dimension k"
        return tuple(out)
    return tuple(irreps_of_dimension(rs, k))


def _label_for(type_label, rank, k):
    if type_label == "A" and rank == 1:
        return LABEL_SYM_POWER
    if type_label == "A" and rank == k - 1:
        return LABEL_FULL_SL
    if type_label == "C" and 2 * rank == k:
        return LABEL_SYMPLECTIC
    if type_label == "B" and 2 * rank + 1 == k:
        return LABEL_ORTHOGONAL
    if type_label == "G":
        return LABEL_G2
    return None


def classify(k):
    """All simple algebras passing the exponent criteria with a k-dim irreducible.

    Returns ClassificationCase values in a fixed order: Sym-power sl2, full
    sl_k, the symplectic/orthogonal case, then G_2 (when k = 7).  For k = 2
    the cases collapse and the single canonical A_1 is reported.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    passing = {}
    for type_label, rank in _candidate_types(k):
        rs = build_root_system(type_label, rank)
        if not exponent_criteria(exponents(rs), k).all_pass():
            continue
        weights = _realizing_weights(rs, k)
        if not weights:
            continue
        passing[(type_label, rank)] = CandidateAlgebra(
            type_label, rank, exponents(rs), weights)

    # B_2 and C_2 are the same algebra; when both pass, report the one whose
    # standard k-dimensional model matches the parity of k.
    if ("B", 2) in passing and ("C", 2) in passing:
        del passing[("B", 2) if k % 2 == 0 else ("C", 2)]

    cases = []
    for key, cand in passing.items():
        label = _label_for(cand.type_label, cand.rank, k)
        assert label is not None, f"unexpected classification case {cand.name} at k={k}"
        cases.append(ClassificationCase(label, cand))
    order = [LABEL_SYM_POWER, LABEL_FULL_SL, LABEL_SYMPLECTIC, LABEL_ORTHOGONAL, LABEL_G2]
    cases.sort(key=lambda c: order.index(c.label))
    return cases


def ht_filter(cases, k, ht):
    """Remove the Sym-power case when exactly two Hodge-Tate weights are given.

    The exclusion is recomputed, not assumed: the diagonal semisimple element
    of the Sym^(k-1) model has k distinct eigenvalues, so for k > 2 it cannot
    have only two.
    """
    if ht.weight_count < 1:
        raise ValueError("need at least one Hodge-Tate weight")
    if ht.weight_count != 2 or k <= 2:
        return list(cases)
    model = sym_power_rep(k)
    diag = [model.triple.h[i, i] for i in range(k)]
    eigenvalue_count = len(set(diag))
    assert eigenvalue_count == k, "Sym^(k-1) semisimple element must have k distinct eigenvalues"
    if eigenvalue_count == ht.weight_count:
        # a semisimple element with the required eigenvalue count exists
        return list(cases)
    return [c for c in cases if c.label != LABEL_SYM_POWER]


def _sl_preserves_no_form(k):
    """Solvability check: sl_k leaves no nonzero bilinear form invariant (k > 2).

    The invariance condition m^T B + B m = 0 propagates to Lie brackets, so it
    is imposed on a generating set: the principal x, h, y together with
    E_00 - E_11, which generate sl_k for k >= 3.
    """
    t = principal_triple(k)
    extra = Matrix.zeros(k)
    d = list(extra.entries)
    d[0] = Fraction(1)
    d[k + 1] = Fraction(-1)
    extra = Matrix(k, k, d)
    return not form_kernel([t.h, t.x, t.y, extra], k)


def form_filter(cases, k):
    """Keep the cases preserving an alternating form; conclude GSp_k if unique.

    Only defined for even k.  The full sl_k case is discarded by computing
    that it preserves no nonzero form at all; the Sym-power case (if still
    present) is kept or dropped according to the parity of its computed
    invariant form; the symplectic case preserves its defining form.
    """
    if k % 2 != 0:
        raise ValueError("form filter applies to even k only")
    kept = []
    for case in cases:
        if case.label == LABEL_SYMPLECTIC:
            kept.append(case)
        elif case.label == LABEL_SYM_POWER:
            form = invariant_bilinear_form(principal_triple(k))
            if not form.symmetric:
                kept.append(case)
        elif case.label == LABEL_FULL_SL:
            if not _sl_preserves_no_form(k):
                kept.append(case)
        # orthogonal and G_2 cases preserve only symmetric forms and cannot
        # arise for even k; they are dropped.
    conclusion = None
    if len(kept) == 1:
        sole = kept[0]
        if sole.label == LABEL_SYMPLECTIC or (k == 2 and sole.label == LABEL_SYM_POWER):
            conclusion = f"GSp_{k}"
    return FormFilterResult(tuple(kept), conclusion)


def classification_report(k, ht_weights=None, apply_form_filter=False):
    """Run classify and the optional filters, collecting every stage."""
    raw = classify(k)
    after_ht = list(raw)
    if ht_weights is not None:
        after_ht = ht_filter(raw, k, HodgeTateData(ht_weights))
    after_form = list(after_ht)
    conclusion = None
    if apply_form_filter:
        result = form_filter(after_ht, k)
        after_form = list(result.cases)
        conclusion = result.conclusion
    return ClassificationReport(k, tuple(raw), tuple(after_ht), tuple(after_form), conclusion)


def frobenius_dimension_check(w, k):
    """Admissible invariant-subspace dimensions from the Frobenius eigenvalues.

    The scalar on the one-dimensional inertia-invariant line has magnitude
    exponent e = (w - k + 1)/2; a k'-dimensional invariant subspace would
    force e = (w - k' + 1)/2, so only k' = k survives.  Returned as the full
    filtered list, which is always exactly [k].
    """
    if k < 1:
        raise ValueError("need k >= 1")
    e = Fraction(w - k + 1, 2)
    return [kp for kp in range(1, k + 1) if Fraction(w - kp + 1, 2) == e]
