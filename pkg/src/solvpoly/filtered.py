"""Filtration layer: associated graded and Rees transfers.

The base algebra must carry a weighted-degree (grlex) order, so the
filtration degree of an element can be read off its leading monomial.
Two companion algebras are materialized as ordinary solvable algebras:
the associated graded algebra keeps only the top-degree tail terms of
each commutation relation, and the Rees algebra pads every tail with a
central degree-one homogenizing generator, making all relations
homogeneous.  The maps between the three worlds (top-degree part,
homogenization, the two dehomogenizations) are plain exponent
rewrites, so Groebner computations transfer back and forth exactly.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .coeff import SolvpolyError
from .algebra import (
    DegreeFunction,
    ExpVec,
    MonomialOrder,
    Poly,
    Relation,
    SolvableAlgebra,
    exp_divides,
)
from .modfree import (
    FreeModule,
    IncompatibleModules,
    ModMonomial,
    ModOrder,
    Vect,
    left_divide_module,
    mono_divides,
)
from .groebner import (
    GroebnerBasis,
    NonGradedOrder,
    buchberger,
    degree_driven_completion,
)
from .graded import check_graded
from .syzres import PresentationMatrix, Resolution, syzygy_of_generators

__all__ = [
    "NotGradedOrder",
    "ZeroElement",
    "DegreeTooSmall",
    "NotStandardBasis",
    "FiltrationContext",
    "AssociatedGraded",
    "ReesAlgebra",
    "ReesModOrder",
    "fil_degree",
    "associated_graded",
    "rees",
    "sigma",
    "tilde",
    "homogenize_to",
    "dehomogenize",
    "z_zero_image",
    "TransferReport",
    "transfer_check",
    "standard_basis",
    "MinimalFBasis",
    "minimal_F_basis",
    "minimal_standard_basis",
    "minimal_filtered_resolution",
    "sigma_resolution",
]

Element = Union[Poly, Vect]


class NotGradedOrder(NonGradedOrder):
    """Filtration machinery requires a weighted-degree ring order."""


class ZeroElement(SolvpolyError):
    """The zero element has no filtration degree or top part."""


class DegreeTooSmall(SolvpolyError):
    """Homogenization target degree below the filtration degree."""


class NotStandardBasis(SolvpolyError):
    """An operation requiring a standard basis got an uncertified set."""


# ---------------------------------------------------------------------------
# context and degree bookkeeping
# ---------------------------------------------------------------------------


class FiltrationContext:
    """Filtration of an algebra by its weighted-degree function.

    F_p A is the span of monomials of weighted degree at most p; free
    modules carry the shifted variant through their ``shifts``.  The
    context caches the associated graded algebra and the Rees algebra
    so module elements mapped over land in compatible parents.
    """

    def __init__(self, algebra: SolvableAlgebra):
        if algebra.order.kind != "grlex" or algebra.degree_function is None:
            raise NotGradedOrder(
                "filtration requires a weighted-degree (grlex) ring order"
            )
        self.algebra = algebra
        self.degree = algebra.degree_function
        self._graded: Optional[AssociatedGraded] = None
        self._rees: Optional[ReesAlgebra] = None

    def graded(self) -> "AssociatedGraded":
        if self._graded is None:
            self._graded = _build_associated_graded(self)
        return self._graded

    def rees(self) -> "ReesAlgebra":
        if self._rees is None:
            self._rees = _build_rees(self)
        return self._rees

    def graded_module(self, module: FreeModule) -> FreeModule:
        """The free module over the associated graded algebra with the
        same rank and shifts."""
        return FreeModule(self.graded().algebra, module.rank, module.shifts)

    def rees_module(self, module: FreeModule) -> FreeModule:
        return FreeModule(self.rees().algebra, module.rank, module.shifts)

    def fil_degree(self, xi: Element) -> int:
        return fil_degree(self, xi)

    def __repr__(self):
        return "FiltrationContext(%r)" % (list(self.degree.weights),)


def fil_degree(ctx: FiltrationContext, xi: Element) -> int:
    """Filtration degree: the largest shifted weighted degree of a
    monomial occurring in a nonzero element."""
    if isinstance(xi, Poly):
        if xi.is_zero():
            raise ZeroElement("the zero element has no filtration degree")
        return max(ctx.degree(exp) for exp, _c in xi.terms)
    if xi.is_zero():
        raise ZeroElement("the zero element has no filtration degree")
    return xi.module.degree(xi)


# ---------------------------------------------------------------------------
# the two companion algebras
# ---------------------------------------------------------------------------


class AssociatedGraded:
    """The associated graded algebra of a filtered solvable algebra.

    Generators mirror the source generators; each relation keeps only
    the tail terms of full degree d(a_i) + d(a_j).
    """

    def __init__(self, algebra: SolvableAlgebra, source: SolvableAlgebra):
        self.algebra = algebra
        self.source = source

    def __repr__(self):
        return "AssociatedGraded(%s)" % (", ".join(self.algebra.names),)


class ReesAlgebra:
    """The Rees algebra: one extra central generator of degree one.

    Relation tails are padded with powers of the homogenizing
    generator so every relation becomes homogeneous under the extended
    degree function.
    """

    def __init__(
        self, algebra: SolvableAlgebra, source: SolvableAlgebra, z_name: str
    ):
        self.algebra = algebra
        self.source = source
        self.z_name = z_name
        self.z_index = algebra.n - 1

    def z(self) -> Poly:
        """The central homogenizing generator as a ring element."""
        return self.algebra.gen(self.z_index)

    def __repr__(self):
        return "ReesAlgebra(%s)" % (", ".join(self.algebra.names),)


def associated_graded(ctx: FiltrationContext) -> AssociatedGraded:
    """The associated graded algebra of the context's filtration.

    Cached on the context: repeated calls return the same companion,
    so elements produced by the symbol maps stay comparable.
    """
    return ctx.graded()


def rees(ctx: FiltrationContext) -> ReesAlgebra:
    """The Rees algebra of the context's filtration (cached alike)."""
    return ctx.rees()


def _build_associated_graded(ctx: FiltrationContext) -> AssociatedGraded:
    A = ctx.algebra
    d = ctx.degree
    shell = SolvableAlgebra(A.field, A.names, A.order, (), A.degree_function)
    rels = []
    for (j, i), rel in sorted(A.relations.items()):
        q = d.weights[i] + d.weights[j]
        top = [(exp, c) for exp, c in rel.tail.terms if d(exp) == q]
        rels.append(Relation(j, i, rel.lam, Poly(shell, top)))
    G = SolvableAlgebra(A.field, A.names, A.order, rels, A.degree_function)
    ok, violations = check_graded(G)
    if not ok:
        raise SolvpolyError(
            "internal: associated graded algebra is not graded: %r"
            % (violations,)
        )
    return AssociatedGraded(G, A)


def _build_rees(ctx: FiltrationContext) -> ReesAlgebra:
    A = ctx.algebra
    d = ctx.degree
    n = A.n
    z_name = "Z"
    while z_name in A.names:
        z_name = z_name + "_"
    names = tuple(A.names) + (z_name,)
    order = MonomialOrder(
        "grlexz", n + 1, priority=tuple(A.order.priority) + (n,), degree=d
    )
    extended = DegreeFunction(tuple(d.weights) + (1,))
    shell = SolvableAlgebra(A.field, names, order, (), extended)
    rels = []
    for (j, i), rel in sorted(A.relations.items()):
        q = d.weights[i] + d.weights[j]
        tail = Poly(
            shell,
            [(exp + (q - d(exp),), c) for exp, c in rel.tail.terms],
        )
        rels.append(Relation(j, i, rel.lam, tail))
    # the homogenizing generator commutes with everything (constructor
    # default for the unlisted pairs)
    R = SolvableAlgebra(A.field, names, order, rels, extended)
    ok, violations = check_graded(R)
    if not ok:
        raise SolvpolyError(
            "internal: Rees algebra is not graded: %r" % (violations,)
        )
    return ReesAlgebra(R, A, z_name)


# ---------------------------------------------------------------------------
# the maps between the three worlds
# ---------------------------------------------------------------------------


def sigma(ctx: FiltrationContext, xi: Element) -> Element:
    """Top filtration-degree part, as an element over the associated
    graded algebra (or its free module)."""
    G = ctx.graded().algebra
    if isinstance(xi, Poly):
        p = fil_degree(ctx, xi)
        return Poly(G, [(exp, c) for exp, c in xi.terms if ctx.degree(exp) == p])
    if xi.is_zero():
        raise ZeroElement("the zero element has no top part")
    module = xi.module
    p = module.degree(xi)
    target = ctx.graded_module(module)
    data = {
        m: c for m, c in xi.data.items() if module.mono_degree(m) == p
    }
    return Vect(target, data)


def _homogenized(ctx: FiltrationContext, xi: Element, q: int) -> Element:
    R = ctx.rees().algebra
    if isinstance(xi, Poly):
        return Poly(
            R, [(exp + (q - ctx.degree(exp),), c) for exp, c in xi.terms]
        )
    module = xi.module
    target = ctx.rees_module(module)
    data = {}
    for (exp, comp), c in xi.data.items():
        data[(exp + (q - module.mono_degree((exp, comp)),), comp)] = c
    return Vect(target, data)


def tilde(ctx: FiltrationContext, xi: Element) -> Element:
    """Homogenization into the Rees algebra at the element's own
    filtration degree; setting the homogenizing generator to one
    recovers the element exactly."""
    return _homogenized(ctx, xi, fil_degree(ctx, xi))


def homogenize_to(ctx: FiltrationContext, xi: Element, q: int) -> Element:
    """Homogenization into degree q >= fil_degree(xi)."""
    p = fil_degree(ctx, xi)
    if q < p:
        raise DegreeTooSmall(
            "target degree %d below filtration degree %d" % (q, p)
        )
    return _homogenized(ctx, xi, q)


def dehomogenize(ctx: FiltrationContext, h: Element) -> Element:
    """Set the homogenizing generator to one, landing back in the
    filtered algebra (or its free module)."""
    A = ctx.algebra
    if isinstance(h, Poly):
        return Poly(A, [(exp[:-1], c) for exp, c in h.terms])
    target = FreeModule(A, h.module.rank, h.module.shifts)
    items = [((exp[:-1], comp), c) for (exp, comp), c in h.data.items()]
    return Vect(target, items)


def z_zero_image(ctx: FiltrationContext, h: Element) -> Element:
    """Set the homogenizing generator to zero: the canonical image in
    the associated graded world."""
    G = ctx.graded().algebra
    if isinstance(h, Poly):
        return Poly(
            G, [(exp[:-1], c) for exp, c in h.terms if exp[-1] == 0]
        )
    target = FreeModule(G, h.module.rank, h.module.shifts)
    items = [
        ((exp[:-1], comp), c)
        for (exp, comp), c in h.data.items()
        if exp[-1] == 0
    ]
    return Vect(target, items)


# ---------------------------------------------------------------------------
# module orders
# ---------------------------------------------------------------------------


def _e_gr_order(module: FreeModule) -> ModOrder:
    """The shifted-degree-first TOP order on a filtered free module."""
    return ModOrder(
        "top",
        module.algebra.order,
        module.rank,
        graded=True,
        shifts=module.shifts,
    )


class ReesModOrder(ModOrder):
    """Module order on a Rees free module.

    Compares the dehomogenized bodies first (shifted degree, then the
    ring order, then the component) and breaks remaining ties by the
    homogenizing exponent, smaller power smaller.  Not a graded order,
    but a left monomial order compatible with homogenization: the
    leading monomial of a homogenized element is the homogenized
    leading monomial.
    """

    def __init__(
        self,
        base: MonomialOrder,
        rank: int,
        shifts: Optional[Sequence[int]] = None,
        component_priority: Optional[Sequence[int]] = None,
    ):
        if base.kind != "grlexz":
            raise ValueError("ReesModOrder needs a homogenized ring order")
        ModOrder.__init__(
            self,
            "top",
            base,
            rank,
            component_priority=component_priority,
            shifts=shifts,
        )

    def key(self, mono: ModMonomial):
        exp, comp = mono
        body_degree, body_sig, z = self.base.key(exp)
        return (
            body_degree + self.shifts[comp],
            body_degree,
            body_sig,
            self._comp_rank[comp],
            z,
        )


def _rees_order(ctx: FiltrationContext, module: FreeModule) -> ReesModOrder:
    return ReesModOrder(
        ctx.rees().algebra.order, module.rank, shifts=module.shifts
    )


# ---------------------------------------------------------------------------
# transfer of the Groebner property
# ---------------------------------------------------------------------------


class TransferReport:
    """Verdicts of the three-world Groebner-basis test."""

    def __init__(self, in_algebra: bool, in_graded: bool, in_rees: bool):
        self.in_algebra = in_algebra
        self.in_graded = in_graded
        self.in_rees = in_rees

    def as_tuple(self) -> Tuple[bool, bool, bool]:
        return (self.in_algebra, self.in_graded, self.in_rees)

    def agree(self) -> bool:
        return self.in_algebra == self.in_graded == self.in_rees

    def __repr__(self):
        return "TransferReport%r" % (self.as_tuple(),)


def _covered(lms, elements: Sequence[Vect], order: ModOrder) -> bool:
    """Every element's leading monomial is a multiple of an input's."""
    for g in elements:
        m = g.lm(order)
        if not any(mono_divides(lead, m) for lead in lms):
            return False
    return True


def _all_reduce_to_zero(
    members: Sequence[Vect], basis: Sequence[Vect], order: ModOrder
) -> bool:
    for xi in members:
        _q, rem = left_divide_module(xi, list(basis), order)
        if not rem.is_zero():
            return False
    return True


def transfer_check(
    ctx: FiltrationContext, gens: Sequence[Vect]
) -> TransferReport:
    """Test the Groebner property in the algebra, in its associated
    graded algebra, and in its Rees algebra.

    The three runs are independent completions.  The submodule on the
    graded (resp. Rees) side is generated by the top parts (resp.
    homogenizations) of a completed basis from the filtered side, so
    each verdict asserts the basis property against the full
    associated module, not merely the span of the mapped generators.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return TransferReport(True, True, True)
    module = gens[0].module
    if module.algebra is not ctx.algebra:
        raise IncompatibleModules(
            "generators live over a different algebra than the context"
        )
    order = _e_gr_order(module)
    completed = buchberger(gens, order)
    lms = [g.lm(order) for g in gens]
    in_algebra = _covered(lms, completed.elements, order)

    graded_gens = [sigma(ctx, g) for g in gens]
    graded_full = [sigma(ctx, h) for h in completed.elements]
    gorder = _e_gr_order(graded_gens[0].module)
    graded_completed = buchberger(graded_gens, gorder)
    glms = [g.lm(gorder) for g in graded_gens]
    in_graded = _covered(
        glms, graded_completed.elements, gorder
    ) and _all_reduce_to_zero(graded_full, graded_completed.elements, gorder)

    rees_gens = [tilde(ctx, g) for g in gens]
    rees_full = [tilde(ctx, h) for h in completed.elements]
    rorder = _rees_order(ctx, module)
    rees_completed = buchberger(rees_gens, rorder)
    rlms = [g.lm(rorder) for g in rees_gens]
    in_rees = _covered(
        rlms, rees_completed.elements, rorder
    ) and _all_reduce_to_zero(rees_full, rees_completed.elements, rorder)

    return TransferReport(in_algebra, in_graded, in_rees)


# ---------------------------------------------------------------------------
# standard bases
# ---------------------------------------------------------------------------


def _monomials_within(
    module: FreeModule, q: int, cap: int = 20000
) -> Optional[List[ModMonomial]]:
    """All module monomials of shifted degree <= q; None if more than
    the cap would have to be enumerated."""
    weights = module.algebra.degree_function.weights
    out: List[ModMonomial] = []
    total = 0
    for comp in range(module.rank):
        budget = q - module.shifts[comp]
        if budget < 0:
            continue
        box = 1
        for w in weights:
            box *= budget // w + 1
            if box > cap:
                return None
        total += box
        if total > cap:
            return None
        stack: List[tuple] = [()]
        for w in weights:
            stack = [
                pre + (v,) for pre in stack for v in range(budget // w + 1)
            ]
        for exp in stack:
            if sum(e * w for e, w in zip(exp, weights)) <= budget:
                out.append((exp, comp))
    return out


def _filtered_quotient_dims(
    module: FreeModule,
    lms: Sequence[ModMonomial],
    qs: Sequence[int],
    cap: int = 20000,
) -> Optional[List[int]]:
    """dim_K F_q(L/N) for each q, with N read off its leading
    monomials (valid because the order is graded)."""
    if not qs:
        return []
    monos = _monomials_within(module, max(qs), cap)
    if monos is None:
        return None
    by_comp: List[List[ExpVec]] = [[] for _ in range(module.rank)]
    for exp, comp in lms:
        by_comp[comp].append(exp)
    dims = []
    for q in qs:
        count = 0
        for exp, comp in monos:
            if module.mono_degree((exp, comp)) > q:
                continue
            if any(exp_divides(s, exp) for s in by_comp[comp]):
                continue
            count += 1
        dims.append(count)
    return dims


def _row_subtract(row, pivot, c):
    out = dict(row)
    for m, v in pivot.items():
        cur = out.get(m)
        if cur is None:
            out[m] = -(c * v)
        else:
            s = cur - c * v
            if s.is_zero():
                del out[m]
            else:
                out[m] = s
    return out


def _span_rank(rows, order: ModOrder) -> int:
    """Rank of a list of sparse module-coefficient rows, by exact
    elimination on leading monomials."""
    pivots: Dict[ModMonomial, dict] = {}
    rank = 0
    for data in rows:
        row = dict(data)
        while row:
            m = max(row, key=order.key)
            piv = pivots.get(m)
            if piv is None:
                inv = row[m].inverse()
                pivots[m] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            row = _row_subtract(row, piv, row[m])
    return rank


def _standard_property_holds(
    G: GroebnerBasis, order: ModOrder, cap: int = 20000
) -> Optional[bool]:
    """Check F_qN = sum_j F_(q - d_fil(g_j))A g_j on a sampled window
    by comparing an exact span rank against the staircase count."""
    module = G.module
    weights = module.algebra.degree_function.weights
    A = module.algebra
    degrees = [order.degree_of(g.lm(order)) for g in G.elements]
    qmax = max(degrees)
    for q in (qmax, qmax + 1):
        monos = _monomials_within(module, q, cap)
        if monos is None:
            return None
        led = 0
        lms = [g.lm(order) for g in G.elements]
        for m in monos:
            if any(mono_divides(lead, m) for lead in lms):
                led += 1
        rows = []
        for g, qg in zip(G.elements, degrees):
            budget = q - qg
            if budget < 0:
                continue
            stack: List[tuple] = [()]
            for w in weights:
                stack = [
                    pre + (v,)
                    for pre in stack
                    for v in range(budget // w + 1)
                ]
            for alpha in stack:
                if sum(e * w for e, w in zip(alpha, weights)) > budget:
                    continue
                rows.append(g.lmul(A.monomial(alpha)).data)
            if len(rows) > cap:
                return None
        if _span_rank(rows, order) != led:
            return False
    return True


def standard_basis(
    ctx: FiltrationContext, gens: Sequence[Vect], certify: bool = True
) -> GroebnerBasis:
    """Complete a generating set into a standard basis.

    Under a shifted-degree-first order every left Groebner basis is a
    standard basis for the induced filtration; the returned basis is
    tagged accordingly, and (when feasible) the filtration-level
    generation property is certified on a sampled degree window by
    exact linear algebra.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("standard_basis needs at least one nonzero element")
    module = gens[0].module
    if module.algebra is not ctx.algebra:
        raise IncompatibleModules(
            "generators live over a different algebra than the context"
        )
    order = _e_gr_order(module)
    G = buchberger(gens, order)
    G.flags["standard_basis"] = True
    G.flags["standard_basis_certified"] = False
    if certify:
        verdict = _standard_property_holds(G, order)
        if verdict is False:
            raise SolvpolyError(
                "internal: completed basis failed the filtration-level "
                "generation check"
            )
        G.flags["standard_basis_certified"] = bool(verdict)
    return G


# ---------------------------------------------------------------------------
# minimal F-bases
# ---------------------------------------------------------------------------


class MinimalFBasis:
    """Result of eliminating unit pivots from a filtered presentation.

    ``kept`` lists the surviving components of the original free
    module, ``new_module``/``gens`` give the pruned presentation, and
    ``eliminations`` records, per dropped component, the relation (in
    original coordinates) used to remove it.  Iterating yields
    ``(kept, gens)``.  ``certified`` reports the degree-window
    dimension comparison: True when it ran and agreed, None when the
    window was too large to enumerate.
    """

    def __init__(
        self,
        module: FreeModule,
        kept: List[int],
        new_module: Optional[FreeModule],
        gens: List[Vect],
        eliminations: List[Tuple[int, Vect]],
        certified: Optional[bool] = None,
    ):
        self.module = module
        self.kept = kept
        self.new_module = new_module
        self.gens = gens
        self.eliminations = eliminations
        self.certified = certified

    def __iter__(self):
        yield self.kept
        yield self.gens

    def __repr__(self):
        return "MinimalFBasis(kept=%r, %d gens)" % (
            self.kept,
            len(self.gens),
        )


def _coords_fil_degree(L: FreeModule, coords: Dict[int, Poly]) -> int:
    d = L.algebra.degree_function
    return max(
        d(exp) + L.shifts[c] for c, f in coords.items() for exp, _x in f.terms
    )


def minimal_F_basis(
    ctx: FiltrationContext,
    L: FreeModule,
    U: Sequence[Vect],
    certify: bool = True,
    assume_standard: bool = False,
) -> MinimalFBasis:
    """Prune basis vectors reachable through unit pivots of a standard
    basis, keeping the quotient strictly filtered-isomorphic.

    A pivot qualifies only when its coordinate is a nonzero scalar
    whose component shift equals the element's filtration degree; a
    unit sitting strictly below the filtration degree does not allow
    elimination.  ``U`` must be a standard basis of the submodule it
    generates; this is certified through the Groebner property unless
    ``assume_standard`` is set.
    """
    if L.algebra is not ctx.algebra:
        raise IncompatibleModules(
            "module lives over a different algebra than the context"
        )
    gens = [v for v in U if not v.is_zero()]
    order = _e_gr_order(L)
    if gens and not assume_standard:
        completed = buchberger(gens, order)
        lms = [g.lm(order) for g in gens]
        if not _covered(lms, completed.elements, order):
            raise NotStandardBasis(
                "completion found new leading monomials; the input does "
                "not generate its submodule's leading terms"
            )

    work: List[Dict[int, Poly]] = []
    for v in gens:
        work.append(
            {
                c: v.component(c)
                for c in range(L.rank)
                if not v.component(c).is_zero()
            }
        )
    alive = list(range(L.rank))
    eliminations: List[Tuple[int, Vect]] = []
    A = L.algebra

    def find_pivot() -> Optional[Tuple[int, int]]:
        for j, coords in enumerate(work):
            qj = _coords_fil_degree(L, coords)
            for i in sorted(coords):
                f = coords[i]
                if (
                    len(f.terms) == 1
                    and all(x == 0 for x in f.terms[0][0])
                    and L.shifts[i] == qj
                ):
                    return i, j
        return None

    while True:
        hit = find_pivot()
        if hit is None:
            break
        i, j = hit
        pivot = work[j]
        inv = pivot[i].coeff(tuple([0] * A.n)).inverse()
        eliminations.append(
            (i, L.from_polys([pivot.get(c, A.zero()) for c in range(L.rank)]))
        )
        new_work: List[Dict[int, Poly]] = []
        for l, coords in enumerate(work):
            if l == j:
                continue
            f_il = coords.get(i)
            if f_il is None:
                new_work.append(coords)
                continue
            factor = f_il.scale(inv)
            out: Dict[int, Poly] = {}
            for c in set(coords) | set(pivot):
                if c == i:
                    continue
                cur = coords.get(c, A.zero())
                sub = pivot.get(c)
                if sub is not None:
                    cur = cur - A.multiply(factor, sub)
                if not cur.is_zero():
                    out[c] = cur
            if out:
                new_work.append(out)
        work = new_work
        alive.remove(i)

    if not alive:
        result = MinimalFBasis(L, [], None, [], eliminations)
    else:
        new_module = FreeModule(
            A, len(alive), shifts=[L.shifts[c] for c in alive]
        )
        reindex = {c: pos for pos, c in enumerate(alive)}
        new_gens: List[Vect] = []
        for coords in work:
            polys = [A.zero()] * len(alive)
            for c, f in coords.items():
                polys[reindex[c]] = f
            new_gens.append(new_module.from_polys(polys))
        result = MinimalFBasis(L, alive, new_module, new_gens, eliminations)

    if certify:
        result.certified = _certify_strict_iso(ctx, L, gens, result)
    return result


def _certify_strict_iso(
    ctx: FiltrationContext,
    L: FreeModule,
    gens: List[Vect],
    result: MinimalFBasis,
) -> Optional[bool]:
    """Compare dim_K F_q(L/N) with dim_K F_q(L'/N') on a window."""
    qmax = max(list(L.shifts) + [0])
    if gens:
        qmax = max(qmax, max(fil_degree(ctx, v) for v in gens))
    qs = list(range(qmax + 2))
    order = _e_gr_order(L)
    lms = [g.lm(order) for g in gens]
    left = _filtered_quotient_dims(L, lms, qs)
    if left is None:
        return None
    if result.new_module is None:
        right = [0] * len(qs)
    else:
        new_gens = [v for v in result.gens if not v.is_zero()]
        new_order = _e_gr_order(result.new_module)
        if new_gens:
            completed = buchberger(new_gens, new_order)
            new_lms = [g.lm(new_order) for g in completed.elements]
        else:
            new_lms = []
        right = _filtered_quotient_dims(result.new_module, new_lms, qs)
        if right is None:
            return None
    if left != right:
        raise SolvpolyError(
            "internal: unit-pivot pruning changed filtration dimensions "
            "%r -> %r over window %r" % (left, right, qs)
        )
    return True


# ---------------------------------------------------------------------------
# minimal standard bases
# ---------------------------------------------------------------------------


def minimal_standard_basis(
    ctx: FiltrationContext, gens: Sequence[Vect]
) -> List[Vect]:
    """A minimal standard basis of the submodule generated by ``gens``.

    Completes to a left Groebner basis under the shifted-degree-first
    order, maps the basis to the associated graded module, keeps the
    members surviving the degree-driven minimal-generator selection
    there, and pulls the kept indices back.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    module = gens[0].module
    if module.algebra is not ctx.algebra:
        raise IncompatibleModules(
            "generators live over a different algebra than the context"
        )
    order = _e_gr_order(module)
    completed = buchberger(gens, order)
    U = completed.elements
    graded_U = [sigma(ctx, u) for u in U]
    gorder = _e_gr_order(graded_U[0].module)
    bound = max(
        gorder.degree_of(m) for v in graded_U for m in v.data
    )
    _basis, _vrows, kept = degree_driven_completion(
        graded_U, gorder, cap=None, early_stop=bound
    )
    return [U[j] for j in kept]


# ---------------------------------------------------------------------------
# minimal filtered free resolutions
# ---------------------------------------------------------------------------


def minimal_filtered_resolution(
    ctx: FiltrationContext, L0: FreeModule, N_gens: Sequence[Vect]
) -> Resolution:
    """Minimal filtered free resolution of M = L0 / <N_gens>.

    Stage zero prunes the presentation through unit pivots (after
    completing the generators to a standard basis); every deeper stage
    maps a minimal standard basis of the current kernel and passes its
    syzygy generators down, the new basis vectors inheriting the
    filtration degrees of the elements they map onto.
    """
    A = ctx.algebra
    if L0.algebra is not A:
        raise IncompatibleModules(
            "module lives over a different algebra than the context"
        )
    gens = [v for v in N_gens if not v.is_zero()]
    provenance = ["minimal F-basis of the quotient"]
    if not gens:
        return Resolution([L0], [], "Filtered", provenance, list(N_gens))
    order0 = _e_gr_order(L0)
    completed = buchberger(gens, order0)
    pruned = minimal_F_basis(
        ctx, L0, completed.elements, assume_standard=True
    )
    if not pruned.kept:
        return Resolution(
            [], [], "Filtered", provenance, list(N_gens), zero_module=True
        )
    cur_module = pruned.new_module
    U = [v for v in pruned.gens if not v.is_zero()]
    modules = [cur_module]
    maps: List[PresentationMatrix] = []
    if not U:
        return Resolution(modules, maps, "Filtered", provenance, list(N_gens))
    for _ in range(A.n + 2):
        W = minimal_standard_basis(ctx, U)
        order = _e_gr_order(cur_module)
        maps.append(PresentationMatrix.from_vects(W, cur_module))
        provenance.append("minimal standard basis of the kernel")
        syz = syzygy_of_generators(W, order)
        modules.append(syz.module)
        if not syz.elements:
            break
        U = syz.elements
        cur_module = syz.module
    else:
        raise RuntimeError(
            "filtered resolution exceeded the generator-count bound"
        )
    return Resolution(modules, maps, "Filtered", provenance, list(N_gens))


def sigma_resolution(ctx: FiltrationContext, R: Resolution) -> Resolution:
    """Apply the top-degree-part map to a filtered chain, giving the
    induced chain of associated graded modules."""
    if R.zero_module:
        return Resolution(
            [], [], "Graded", list(R.basis_provenance), [], zero_module=True
        )
    graded_modules = [ctx.graded_module(m) for m in R.modules]
    graded_maps = []
    for i, mat in enumerate(R.maps):
        target = R.modules[i]
        rows = [
            sigma(ctx, mat.row_vect(k, target)) for k in range(mat.rows)
        ]
        graded_maps.append(
            PresentationMatrix.from_vects(rows, graded_modules[i])
        )
    return Resolution(
        graded_modules,
        graded_maps,
        "Graded",
        list(R.basis_provenance),
        [],
    )
