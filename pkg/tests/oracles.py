"""Independent oracles for the test suite.

Everything here deliberately avoids the library's completion
machinery: the rank-one Weyl algebra acts on honest polynomials in
one variable, degree slices are enumerated by brute force, and kernel
dimensions come from exact row reduction over the coefficient field.
Tests pit library answers against these.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from solvpoly.algebra import Poly, SolvableAlgebra
from solvpoly.modfree import FreeModule, Vect


# ---------------------------------------------------------------------------
# the Weyl algebra acting on Q[t]
# ---------------------------------------------------------------------------

def differentiate(p: List[Fraction]) -> List[Fraction]:
    return [Fraction(k) * p[k] for k in range(1, len(p))]


def mult_t(p: List[Fraction]) -> List[Fraction]:
    return [Fraction(0)] + list(p)


def weyl_act(f: Poly, p: Sequence[Fraction]) -> List[Fraction]:
    """Apply an element of the rank-one Weyl algebra to p(t).

    The generators are read as x = multiplication by t and
    y = d/dt, so the basis monomial x^a y^b acts by
    p |-> t^a * p^(b).
    """
    acc: Dict[int, Fraction] = {}
    for (a, b), c in f.terms:
        q = [Fraction(v) for v in p]
        for _ in range(b):
            q = differentiate(q)
        for _ in range(a):
            q = mult_t(q)
        for k, v in enumerate(q):
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c.value) * v
    top = max((k for k, v in acc.items() if v != 0), default=-1)
    return [acc.get(k, Fraction(0)) for k in range(top + 1)]


def t_power(k: int) -> List[Fraction]:
    return [Fraction(0)] * k + [Fraction(1)]


# ---------------------------------------------------------------------------
# degree slices by brute enumeration
# ---------------------------------------------------------------------------

def exponents_of_degree(weights: Sequence[int], q: int) -> List[Tuple[int, ...]]:
    """All exponent tuples with weighted degree exactly q."""
    n = len(weights)
    out: List[Tuple[int, ...]] = []

    def rec(i: int, left: int, prefix: Tuple[int, ...]) -> None:
        if i == n:
            if left == 0:
                out.append(prefix)
            return
        w = weights[i]
        for e in range(left // w + 1):
            rec(i + 1, left - e * w, prefix + (e,))

    rec(0, q, ())
    return out


def algebra_weights(A: SolvableAlgebra) -> Tuple[int, ...]:
    d = A.degree_function
    if d is None:
        raise ValueError("the oracle needs a positive degree function")
    return tuple(d(tuple(1 if j == i else 0 for j in range(A.n)))
                 for i in range(A.n))


def module_slice(L: FreeModule, q: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Module monomials (exp, comp) of shifted degree exactly q."""
    weights = algebra_weights(L.algebra)
    out = []
    for comp in range(L.rank):
        rest = q - L.shifts[comp]
        if rest < 0:
            continue
        for exp in exponents_of_degree(weights, rest):
            out.append((exp, comp))
    return out


# ---------------------------------------------------------------------------
# exact linear algebra over the coefficient field
# ---------------------------------------------------------------------------

def echelon_rank(rows: Iterable[Dict]) -> int:
    """Rank of a family of sparse vectors keyed by sortable labels."""
    pivots: Dict = {}
    rank = 0
    for raw in rows:
        row = {k: c for k, c in raw.items() if not c.is_zero()}
        while row:
            key = max(row)
            if key not in pivots:
                inv = row[key].inverse()
                pivots[key] = {k: c * inv for k, c in row.items()}
                rank += 1
                break
            factor = row[key]
            for k, c in pivots[key].items():
                s = row.get(k)
                s = (-(factor * c)) if s is None else s - factor * c
                if s.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = s
        # an emptied row is dependent; move on
    return rank


def vect_row(v: Vect) -> Dict:
    return {(comp, exp): c for (exp, comp), c in v.data.items()}


def span_slice_rank(gens: Sequence[Vect], q: int) -> int:
    """Dimension of the degree-q slice of the left span of gens.

    Only meaningful when every generator is homogeneous; the slice is
    spanned by monomial multiples landing in degree q.
    """
    if not gens:
        return 0
    L = gens[0].module
    A = L.algebra
    weights = algebra_weights(A)
    rows = []
    for g in gens:
        d = L.degree(g)
        if d > q:
            continue
        for exp in exponents_of_degree(weights, q - d):
            rows.append(vect_row(g.lmul(A.monomial(exp))))
    return echelon_rank(rows)


def kernel_slice_dim(gens: Sequence[Vect], q: int) -> int:
    """dim of the degree-q slice of the syzygy module of gens.

    The source is the free module with one slot per generator,
    shifted by the generator degrees; the kernel dimension is the
    slice dimension of the source minus the rank of the image.
    """
    if not gens:
        return 0
    L = gens[0].module
    A = L.algebra
    weights = algebra_weights(A)
    degrees = [L.degree(g) for g in gens]
    source_dim = 0
    rows = []
    for i, g in enumerate(gens):
        rest = q - degrees[i]
        if rest < 0:
            continue
        for exp in exponents_of_degree(weights, rest):
            source_dim += 1
            rows.append(vect_row(g.lmul(A.monomial(exp))))
    return source_dim - echelon_rank(rows)


def quotient_slice_dim(L: FreeModule, gens: Sequence[Vect], q: int) -> int:
    """dim of the degree-q slice of L / <gens> for homogeneous gens."""
    return len(module_slice(L, q)) - span_slice_rank(list(gens), q)


def euler_characteristic_ok(ranks: Sequence[int],
                            shift_lists: Sequence[Sequence[int]],
                            L0: FreeModule,
                            gens: Sequence[Vect],
                            q_max: int) -> bool:
    """Degreewise alternating-sum check of a graded resolution.

    For an exact complex resolving L0/<gens>, the alternating sum of
    the slice dimensions of the free stages must equal the quotient
    slice dimension in every degree.
    """
    A = L0.algebra
    for q in range(q_max + 1):
        total = 0
        sign = 1
        for shifts in shift_lists:
            stage = FreeModule(A, max(1, len(shifts)),
                               tuple(shifts) if shifts else (0,))
            dim = len(module_slice(stage, q)) if shifts else 0
            total += sign * dim
            sign = -sign
        if total != quotient_slice_dim(L0, gens, q):
            return False
    return True
