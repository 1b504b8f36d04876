"""Syzygies, free resolutions, projectivity and projective dimension.

Syzygy generators come from the S-vector calculus: for a left
Groebner basis ``g_1..g_t``, each same-component pair contributes

    s_ij = sum_k q_k eps_k - c_i a^(gamma-alpha_i) eps_i
                           + c_j a^(gamma-alpha_j) eps_j

where the q_k are the division quotients of the S-vector.  Under the
Schreyer order induced by the basis, these rows are themselves a left
Groebner basis of the syzygy module, with leading monomial
``a^(gamma-alpha_j) eps_j``.  Iterating with fresh Schreyer orders
yields a free resolution whose length never exceeds the number of
algebra generators, provided each stage is sorted so that leading
exponents ascend lexicographically within each component.

Matrices follow the row convention: row i of the matrix of a map is
the coordinate vector of the image of the i-th source basis vector,
and composition in application order is the ordinary matrix product.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .algebra import Poly, SolvableAlgebra, exp_sub, zero_exp
from .modfree import (
    FreeModule,
    ModOrder,
    NotAGroebnerBasis,
    Vect,
    left_divide_module,
    right_divide_module,
)
from .groebner import (
    GroebnerBasis,
    _spair_data,
    buchberger,
    minimalize,
    right_buchberger,
)

__all__ = [
    "PresentationMatrix",
    "Resolution",
    "SyzygyGenerators",
    "syzygy_of_gb",
    "syzygy_of_generators",
    "free_resolution",
    "is_projective",
    "projective_dimension",
    "stably_free_rank",
]


class PresentationMatrix:
    """A matrix over the algebra presenting a module map.

    ``entries[i][j]`` is the e_j-coordinate of the image of the i-th
    basis vector of the source; the map sends a coordinate row
    ``(f_1..f_t)`` to ``(f)Q`` with coefficients kept on the left.
    """

    def __init__(self, algebra: SolvableAlgebra, entries: Sequence[Sequence[Poly]]):
        self.algebra = algebra
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_vects(cls, vects: Sequence[Vect], module: FreeModule):
        return cls(module.algebra, [v.to_polys() for v in vects])

    def row_vect(self, i: int, target: FreeModule) -> Vect:
        return target.from_polys(self.entries[i])

    def apply(self, coeffs: Sequence[Poly]) -> List[Poly]:
        """Image coordinates of the element with the given coordinates."""
        A = self.algebra
        out = [A.zero() for _ in range(self.cols)]
        for i, f in enumerate(coeffs):
            if f.is_zero():
                continue
            for j, q in enumerate(self.entries[i]):
                if not q.is_zero():
                    out[j] = out[j] + A.multiply(f, q)
        return out

    def compose_with(self, nxt: "PresentationMatrix") -> "PresentationMatrix":
        """Matrix of (self then nxt): the ordinary product self * nxt."""
        if self.cols != nxt.rows:
            raise ValueError("dimension mismatch in composition")
        A = self.algebra
        return PresentationMatrix(
            A, [nxt.apply(row) for row in self.entries]
        )

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def to_strings(self) -> List[List[str]]:
        return [[str(p) for p in row] for row in self.entries]

    def __repr__(self):
        return "PresentationMatrix(%dx%d)" % (self.rows, self.cols)


class Resolution:
    """A finite chain of free modules resolving M = L0 / N.

    ``modules`` is ascending ``[L_0, L_1, .., L_q]`` and ``maps[i]``
    is the matrix of L_{i+1} -> L_i.  A resolution of the zero module
    is stored with ``zero_module=True`` and empty chains.
    """

    def __init__(
        self,
        modules: List[FreeModule],
        maps: List[PresentationMatrix],
        flavor: str = "Plain",
        basis_provenance: Optional[List[str]] = None,
        presented_by: Optional[List[Vect]] = None,
        zero_module: bool = False,
    ):
        self.modules = modules
        self.maps = maps
        self.flavor = flavor
        self.basis_provenance = basis_provenance or []
        self.presented_by = presented_by or []
        self.zero_module = zero_module

    def length(self) -> int:
        return len(self.maps)

    def ranks(self) -> List[int]:
        if self.zero_module:
            return [0]
        return [m.rank for m in self.modules]

    def shift_lists(self) -> List[List[int]]:
        if self.zero_module:
            return [[]]
        return [list(m.shifts) for m in self.modules]

    def composition_is_zero(self) -> bool:
        """Exactness witness: consecutive maps compose to zero."""
        for i in range(len(self.maps) - 1):
            if not self.maps[i + 1].compose_with(self.maps[i]).is_zero():
                return False
        return True

    def __repr__(self):
        return "Resolution(%s, ranks=%r)" % (self.flavor, self.ranks())


class SyzygyGenerators:
    """Generators of the relations among a fixed tuple of elements."""

    def __init__(
        self,
        elements: List[Vect],
        origin: str,
        targets: List[Vect],
        module: FreeModule,
        order: Optional[ModOrder] = None,
    ):
        self.elements = elements
        self.origin = origin
        self.targets = targets
        self.module = module
        self.order = order

    def annihilates(self) -> bool:
        """Every generator evaluates to exactly zero on the targets."""
        if not self.targets:
            return all(s.is_zero() for s in self.elements)
        ambient = self.targets[0].module
        for s in self.elements:
            acc = ambient.zero()
            for k, h in enumerate(s.to_polys()):
                if not h.is_zero():
                    acc = acc + self.targets[k].lmul(h)
            if not acc.is_zero():
                return False
        return True

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "SyzygyGenerators(%d, %s)" % (len(self.elements), self.origin)


# ---------------------------------------------------------------------------
# Schreyer syzygies
# ---------------------------------------------------------------------------


def schreyer_order_for(G: Sequence[Vect], order: ModOrder) -> ModOrder:
    """Module order on the syzygy coordinates induced by the basis."""
    return ModOrder(
        "schreyer",
        order.base,
        len(G),
        shifts=[order.degree_of(g.lm(order)) for g in G],
        schreyer_images=[g.lm(order) for g in G],
        schreyer_target=order,
    )


def _spair_rows(
    elements: Sequence[Vect], order: ModOrder, syz_module: FreeModule
) -> List[Vect]:
    """One syzygy row per same-leading-component pair (i < j)."""
    A = syz_module.algebra
    rows: List[Vect] = []
    t = len(elements)
    for i in range(t):
        for j in range(i + 1, t):
            data = _spair_data(elements[i], elements[j], order)
            if data is None:
                continue
            S, ci, expi, cj, expj, _, _ = data
            if S.is_zero():
                quotients: List[Poly] = [A.zero()] * t
            else:
                quotients, rem = left_divide_module(S, list(elements), order)
                if not rem.is_zero():
                    raise NotAGroebnerBasis(
                        "an S-vector does not reduce to zero; the input "
                        "is not a left Groebner basis"
                    )
            coords = list(quotients) + [A.zero()] * (t - len(quotients))
            coords[i] = coords[i] - A.monomial(expi, ci)
            coords[j] = coords[j] + A.monomial(expj, cj)
            row = syz_module.from_polys(coords)
            if not row.is_zero():
                rows.append(row)
    return rows


def syzygy_of_gb(G: GroebnerBasis) -> SyzygyGenerators:
    """Schreyer generators of the syzygies of a left Groebner basis.

    The returned elements are a left Groebner basis of the syzygy
    module under the returned Schreyer order.
    """
    t = len(G.elements)
    shifts = [G.order.degree_of(g.lm(G.order)) for g in G.elements]
    syz_module = FreeModule(G.module.algebra, max(t, 1), shifts=shifts or None)
    order = schreyer_order_for(G.elements, G.order) if t else None
    rows = _spair_rows(G.elements, G.order, syz_module) if t else []
    return SyzygyGenerators(
        rows, "SchreyerOfGB", list(G.elements), syz_module, order
    )


def syzygy_of_generators(U_in: Sequence[Vect], order: ModOrder) -> SyzygyGenerators:
    """Syzygy generators of an arbitrary generating tuple.

    Runs the tracked Buchberger completion, takes the Schreyer
    generators of the computed basis, pushes them through the
    basis-to-input matrix V, and adjoins the rows of UV - E.
    """
    U_in = [v for v in U_in]
    if not U_in:
        raise ValueError("syzygy_of_generators needs at least one element")
    G = buchberger(U_in, order)
    A = G.module.algebra
    m = len(U_in)
    syz = syzygy_of_gb(G)
    out_module = FreeModule(
        A,
        m,
        shifts=[
            0 if v.is_zero() else order.degree_of(v.lm(order)) for v in U_in
        ],
    )
    out: List[Vect] = []
    for s in syz.elements:
        coords = [A.zero()] * m
        for k, h in enumerate(s.to_polys()):
            if h.is_zero():
                continue
            for j in range(m):
                vkj = G.V[k][j]
                if not vkj.is_zero():
                    coords[j] = coords[j] + A.multiply(h, vkj)
        row = out_module.from_polys(coords)
        if not row.is_zero():
            out.append(row)
    t = len(G.elements)
    for i in range(m):
        coords = [A.zero()] * m
        for j in range(m):
            acc = A.zero()
            for k in range(t):
                uik = G.U[i][k]
                vkj = G.V[k][j]
                if not uik.is_zero() and not vkj.is_zero():
                    acc = acc + A.multiply(uik, vkj)
            if i == j:
                acc = acc - A.one()
            coords[j] = acc
        row = out_module.from_polys(coords)
        if not row.is_zero():
            out.append(row)
    return SyzygyGenerators(
        out, "OfOriginalGenerators", list(U_in), out_module, None
    )


# ---------------------------------------------------------------------------
# free resolutions
# ---------------------------------------------------------------------------


def _ascending_exponent_sort(elements: List[Vect], order: ModOrder) -> List[Vect]:
    """Arrange a basis so leading exponents ascend lexicographically
    within each leading component (first generator most significant);
    this is what bounds the resolution length by the generator count.
    """
    return sorted(elements, key=lambda g: (g.lm(order)[0], g.lm(order)[1]))


def free_resolution(
    L0: FreeModule,
    N_gens: Sequence[Vect],
    order: Optional[ModOrder] = None,
) -> Resolution:
    """Finite free resolution of M = L0 / <N_gens>.

    Each stage appends the matrix of the current minimal Groebner
    basis and replaces the basis by its Schreyer syzygies; the chain
    stops when no relations remain.  When the submodule is all of L0,
    the zero module is reported as a rank-0 chain.
    """
    A = L0.algebra
    if order is None:
        order = ModOrder("top", A.order, L0.rank, shifts=L0.shifts)
    gens = [v for v in N_gens if not v.is_zero()]
    provenance = ["input generators"]
    if not gens:
        return Resolution([L0], [], "Plain", provenance, list(N_gens))
    G = minimalize(buchberger(gens, order))
    if all(
        is_mem
        for is_mem in (
            left_divide_module(L0.basis(i), G.elements, order)[1].is_zero()
            for i in range(L0.rank)
        )
    ):
        return Resolution(
            [], [], "Plain", provenance, list(N_gens), zero_module=True
        )
    modules = [L0]
    maps: List[PresentationMatrix] = []
    cur_module = L0
    cur_order = order
    elements = _ascending_exponent_sort(G.elements, cur_order)
    n = A.n
    for _ in range(n + 2):
        if all(all(x == 0 for x in g.lm(cur_order)[0]) for g in elements):
            # distinct pure basis-vector leads: the kernel one step up
            # is free on the leftover components, so splice instead of
            # appending another stage (this is what keeps length <= n)
            pivot = {g.lm(cur_order)[1] for g in elements}
            nonpivot = [c for c in range(cur_module.rank) if c not in pivot]
            F = FreeModule(
                A,
                max(len(nonpivot), 1),
                shifts=[cur_module.shifts[c] for c in nonpivot] or None,
            )
            if not maps:
                # M itself is free on the leftover components
                modules = [F]
                provenance = ["free split-off"]
            else:
                prev = maps.pop()
                modules.pop()
                maps.append(
                    PresentationMatrix(
                        A, [prev.entries[c] for c in nonpivot]
                    )
                )
                modules.append(F)
                provenance[-1] = "free split-off"
            break
        t = len(elements)
        shifts = [cur_order.degree_of(g.lm(cur_order)) for g in elements]
        nxt_module = FreeModule(A, t, shifts=shifts)
        maps.append(PresentationMatrix.from_vects(elements, cur_module))
        modules.append(nxt_module)
        provenance.append("minimal left Groebner basis")
        nxt_order = schreyer_order_for(elements, cur_order)
        rows = _spair_rows(elements, cur_order, nxt_module)
        if not rows:
            break
        syz_gb = GroebnerBasis(
            nxt_module,
            nxt_order,
            rows,
            rows,
            [
                [A.one() if a == b else A.zero() for b in range(len(rows))]
                for a in range(len(rows))
            ],
            None,
        )
        elements = _ascending_exponent_sort(
            minimalize(syz_gb).elements, nxt_order
        )
        cur_module, cur_order = nxt_module, nxt_order
    else:
        raise RuntimeError(
            "resolution exceeded the generator-count bound; this "
            "contradicts the syzygy termination argument"
        )
    return Resolution(modules, maps, "Plain", provenance, list(N_gens))


# ---------------------------------------------------------------------------
# projectivity and projective dimension
# ---------------------------------------------------------------------------


def is_projective(
    Q: PresentationMatrix,
) -> Tuple[bool, Optional[List[List[Poly]]]]:
    """Right-invertibility test of a presentation matrix.

    ``Q`` (t x s) presents M as the cokernel of an injective map.  M
    is projective exactly when the right submodule generated by the
    columns of Q contains every basis vector; in that case a right
    inverse V (s x t) with Q V = E is assembled from the right
    division quotients and returned.
    """
    A = Q.algebra
    t, s = Q.rows, Q.cols
    if t == 0:
        return True, []
    module = FreeModule(A, t)
    order = ModOrder("top", A.order, t)
    columns: List[Vect] = []
    col_index: List[int] = []
    for j in range(s):
        v = module.from_polys([Q.entries[i][j] for i in range(t)])
        if not v.is_zero():
            columns.append(v)
            col_index.append(j)
    if not columns:
        return False, None
    rgb = right_buchberger(columns, order)
    V = [[A.zero() for _ in range(t)] for _ in range(s)]
    for k in range(t):
        eps = module.basis(k)
        quotients, rem = right_divide_module(eps, rgb.elements, order)
        if not rem.is_zero():
            return False, None
        for g_idx, q in enumerate(quotients):
            if q.is_zero():
                continue
            for c_idx, j in enumerate(col_index):
                vrow = rgb.V[g_idx][c_idx]
                if not vrow.is_zero():
                    V[j][k] = V[j][k] + A.multiply(vrow, q)
    return True, V


def _right_inverse_matrix(A: SolvableAlgebra, V: List[List[Poly]]) -> PresentationMatrix:
    return PresentationMatrix(A, V)


def projective_dimension(R: Resolution) -> int:
    """Least resolution length over the shortening procedure.

    Walks from the tail: while the last matrix is right invertible,
    splice the last module into the one two steps down (the spliced
    map pairs the right inverse with the previous boundary) and
    retry; the first non-invertible tail fixes the dimension.
    """
    if R.zero_module or not R.maps:
        return 0
    A = R.modules[0].algebra
    ms: List[PresentationMatrix] = list(R.maps)
    while ms:
        last = ms[-1]
        ok, V = is_projective(last)
        if not ok:
            return len(ms)
        if len(ms) == 1:
            return 0
        inv = _right_inverse_matrix(A, V)
        prev = ms[-2]
        psi_entries = [
            list(inv.entries[r]) + list(prev.entries[r])
            for r in range(prev.rows)
        ]
        psi = PresentationMatrix(A, psi_entries)
        if len(ms) >= 3:
            below = ms[-3]
            zero_rows = [
                [A.zero() for _ in range(below.cols)] for _ in range(last.rows)
            ]
            ms[-3] = PresentationMatrix(A, zero_rows + below.entries)
        ms = ms[:-2] + [psi]
    return 0


def stably_free_rank(R: Resolution) -> int:
    """Alternating rank sum of a resolution of a projective module."""
    if R.zero_module:
        return 0
    total = 0
    for i, m in enumerate(R.modules):
        total += m.rank if i % 2 == 0 else -m.rank
    return total
