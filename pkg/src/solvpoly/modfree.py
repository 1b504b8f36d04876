"""Free left modules over a solvable algebra and left division.

A free module L = A e_1 + ... + A e_s carries optional degree shifts
b_i on its basis vectors.  Elements (:class:`Vect`) are sparse maps
from module monomials ``(exponent, component)`` to scalars.  Monomial
orders on L come in TOP ("term over position"), POT ("position over
term"), graded variants of both, and Schreyer orders induced by a
list of module elements.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coeff import Scalar, SolvpolyError
from .algebra import (
    ExpVec,
    LengthMismatch,
    MonomialOrder,
    Poly,
    SolvableAlgebra,
    ZeroPolynomial,
    exp_add,
    exp_divides,
    exp_sub,
    zero_exp,
)

__all__ = [
    "IncompatibleModules",
    "EmptyDivisorList",
    "NotAGroebnerBasis",
    "InfiniteMarker",
    "FreeModule",
    "ModMonomial",
    "Vect",
    "ModOrder",
    "module_compare",
    "left_divide_module",
    "right_divide_module",
    "normal_monomials",
]

ModMonomial = Tuple[ExpVec, int]


class IncompatibleModules(SolvpolyError):
    """Elements of different free modules were combined."""


class EmptyDivisorList(SolvpolyError):
    """Division requested against an empty divisor list."""


class NotAGroebnerBasis(SolvpolyError):
    """An operation requiring a certified Groebner basis got raw data."""


class InfiniteMarker:
    """Returned when the set of normal monomials is infinite."""

    def __repr__(self):
        return "InfiniteMarker()"

    def __eq__(self, other):
        return isinstance(other, InfiniteMarker)

    def __hash__(self):
        return hash("InfiniteMarker")


class FreeModule:
    """A free left module over a solvable algebra, with degree shifts."""

    def __init__(
        self,
        algebra: SolvableAlgebra,
        rank: int,
        shifts: Optional[Sequence[int]] = None,
    ):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        if shifts is None:
            shifts = (0,) * rank
        shifts = tuple(int(b) for b in shifts)
        if len(shifts) != rank:
            raise LengthMismatch(
                "%d shifts for rank %d" % (len(shifts), rank)
            )
        if any(b < 0 for b in shifts):
            raise ValueError("shifts must be natural numbers")
        self.algebra = algebra
        self.rank = rank
        self.shifts = shifts

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.algebra is other.algebra
            and self.rank == other.rank
            and self.shifts == other.shifts
        )

    def __repr__(self):
        return "FreeModule(rank=%d, shifts=%r)" % (self.rank, list(self.shifts))

    # -- constructors ---------------------------------------------------------

    def zero(self) -> "Vect":
        return Vect(self, {})

    def basis(self, i: int) -> "Vect":
        """The basis vector e_i (0-based component index)."""
        if not 0 <= i < self.rank:
            raise IndexError("component %d out of range" % i)
        return Vect(
            self, {(zero_exp(self.algebra.n), i): self.algebra.field.one}
        )

    def from_polys(self, polys: Sequence[Poly]) -> "Vect":
        """Assemble a vector from one polynomial per component."""
        if len(polys) != self.rank:
            raise IncompatibleModules(
                "%d component polynomials for rank %d" % (len(polys), self.rank)
            )
        data = {}
        for comp, f in enumerate(polys):
            for exp, c in f.terms:
                data[(exp, comp)] = c
        return Vect(self, data)

    def parse(self, strings: Sequence[str]) -> "Vect":
        """Parse a JSON-style array of polynomial strings, one per slot."""
        return self.from_polys([self.algebra.parse(s) for s in strings])

    def mono_degree(self, m: ModMonomial) -> int:
        """Shifted weighted degree d(exp) + b_comp of a module monomial."""
        d = self.algebra.degree_function
        if d is None:
            return sum(m[0]) + self.shifts[m[1]]
        return d(m[0]) + self.shifts[m[1]]

    def degree(self, v: "Vect") -> int:
        """Max shifted degree over the terms of a nonzero vector."""
        if v.is_zero():
            raise ZeroPolynomial("zero vector has no degree")
        return max(self.mono_degree(m) for m in v.data)


class Vect:
    """A sparse element of a free module; immutable by convention."""

    __slots__ = ("module", "data")

    def __init__(self, module: FreeModule, data):
        clean: Dict[ModMonomial, Scalar] = {}
        items = data.items() if isinstance(data, dict) else data
        for mono, c in items:
            if c.is_zero():
                continue
            exp, comp = mono
            if not 0 <= comp < module.rank:
                raise IncompatibleModules("component %d out of range" % comp)
            key = (tuple(exp), comp)
            cur = clean.get(key)
            if cur is None:
                clean[key] = c
            else:
                s = cur + c
                if s.is_zero():
                    del clean[key]
                else:
                    clean[key] = s
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "data", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Vect is immutable")

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def coeff(self, mono: ModMonomial) -> Scalar:
        c = self.data.get(mono)
        return c if c is not None else self.module.algebra.field.zero

    def component(self, comp: int) -> Poly:
        return Poly(
            self.module.algebra,
            [(exp, c) for (exp, cc), c in self.data.items() if cc == comp],
        )

    def to_polys(self) -> List[Poly]:
        return [self.component(i) for i in range(self.module.rank)]

    def lm(self, order: "ModOrder") -> ModMonomial:
        if not self.data:
            raise ZeroPolynomial("zero vector has no leading monomial")
        return max(self.data, key=order.key)

    def lc(self, order: "ModOrder") -> Scalar:
        return self.data[self.lm(order)]

    def lt(self, order: "ModOrder") -> "Vect":
        m = self.lm(order)
        return Vect(self.module, {m: self.data[m]})

    def terms_descending(self, order: "ModOrder"):
        return sorted(self.data.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Vect") -> None:
        if other.module != self.module:
            raise IncompatibleModules("vectors from different modules")

    def __add__(self, other: "Vect") -> "Vect":
        self._check(other)
        merged = dict(self.data)
        for mono, c in other.data.items():
            cur = merged.get(mono)
            if cur is None:
                merged[mono] = c
            else:
                s = cur + c
                if s.is_zero():
                    del merged[mono]
                else:
                    merged[mono] = s
        return Vect(self.module, merged)

    def __sub__(self, other: "Vect") -> "Vect":
        return self + (-other)

    def __neg__(self) -> "Vect":
        return Vect(self.module, {m: -c for m, c in self.data.items()})

    def scale(self, c: Scalar) -> "Vect":
        if c.is_zero():
            return self.module.zero()
        return Vect(self.module, {m: x * c for m, x in self.data.items()})

    def monic(self, order: "ModOrder") -> "Vect":
        c = self.lc(order)
        if c.is_one():
            return self
        return self.scale(c.inverse())

    def lmul(self, f: Poly) -> "Vect":
        """Left multiplication by a ring element."""
        A = self.module.algebra
        acc: Dict[ModMonomial, Scalar] = {}
        for (exp, comp), c in self.data.items():
            for ea, ca in f.terms:
                s = ca * c
                for e2, c2 in A.mono_mul(ea, exp).terms:
                    key = (e2, comp)
                    add = s * c2
                    cur = acc.get(key)
                    if cur is None:
                        acc[key] = add
                    else:
                        tot = cur + add
                        if tot.is_zero():
                            del acc[key]
                        else:
                            acc[key] = tot
        return Vect(self.module, acc)

    def rmul(self, f: Poly) -> "Vect":
        """Right multiplication by a ring element (right-module view)."""
        A = self.module.algebra
        acc: Dict[ModMonomial, Scalar] = {}
        for (exp, comp), c in self.data.items():
            for ea, ca in f.terms:
                s = c * ca
                for e2, c2 in A.mono_mul(exp, ea).terms:
                    key = (e2, comp)
                    add = s * c2
                    cur = acc.get(key)
                    if cur is None:
                        acc[key] = add
                    else:
                        tot = cur + add
                        if tot.is_zero():
                            del acc[key]
                        else:
                            acc[key] = tot
        return Vect(self.module, acc)

    # -- comparison / display -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Vect):
            return NotImplemented
        return self.module == other.module and self.data == other.data

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.to_polys()) + "]"

    def __repr__(self):
        return "Vect(%s)" % (self,)


class ModOrder:
    """A left monomial order on a free module.

    kind 'top'      : ring order first, component index breaks ties;
    kind 'pot'      : component index first, then ring order;
    kind 'schreyer' : induced by module elements g_1..g_t sitting in a
                      target module with its own order -- compares the
                      leading monomials of a^alpha * g_i, ties broken
                      by the epsilon-index.

    With ``graded=True`` (top/pot only) the shifted weighted degree
    d(a^alpha) + b_i is compared before everything else.
    """

    KINDS = ("top", "pot", "schreyer")

    def __init__(
        self,
        kind: str,
        base: MonomialOrder,
        rank: int,
        component_priority: Optional[Sequence[int]] = None,
        graded: bool = False,
        shifts: Optional[Sequence[int]] = None,
        schreyer_images: Optional[Sequence[Vect]] = None,
        schreyer_target: Optional["ModOrder"] = None,
    ):
        kind = kind.lower()
        if kind not in self.KINDS:
            raise ValueError("unknown module order kind %r" % (kind,))
        if component_priority is None:
            prio = tuple(range(rank))
        else:
            prio = tuple(int(x) for x in component_priority)
            if sorted(prio) != list(range(rank)):
                raise ValueError("component priority must permute 0..rank-1")
        self.kind = kind
        self.base = base
        self.rank = rank
        self.component_priority = prio
        self._comp_rank = {comp: pos for pos, comp in enumerate(prio)}
        self.graded = bool(graded)
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if self.graded:
            if kind == "schreyer":
                raise ValueError("the graded variant applies to top/pot only")
            if base.degree is None:
                raise ValueError("a graded module order needs degree weights")
        self.schreyer_lms: Optional[List[ModMonomial]] = None
        self.schreyer_target = schreyer_target
        if kind == "schreyer":
            if not schreyer_images or schreyer_target is None:
                raise ValueError(
                    "schreyer orders need inducing images and a target order"
                )
            if len(schreyer_images) != rank:
                raise LengthMismatch(
                    "%d inducing images for rank %d"
                    % (len(schreyer_images), rank)
                )
            self.schreyer_lms = [
                g if isinstance(g, tuple) else g.lm(schreyer_target)
                for g in schreyer_images
            ]

    def degree_of(self, mono: ModMonomial) -> int:
        """Shifted weighted degree of a module monomial."""
        exp, comp = mono
        if self.base.kind == "grlexz":
            # the homogenizing generator carries weight 1
            return self.base.degree(exp[:-1]) + exp[-1] + self.shifts[comp]
        if self.base.degree is not None:
            return self.base.degree(exp) + self.shifts[comp]
        return sum(exp) + self.shifts[comp]

    def key(self, mono: ModMonomial):
        exp, comp = mono
        if self.kind == "schreyer":
            delta, target_comp = self.schreyer_lms[comp]
            image = (exp_add(exp, delta), target_comp)
            return (
                self.schreyer_target.key(image),
                self._comp_rank[comp],
            )
        if self.kind == "top":
            body = (self.base.key(exp), self._comp_rank[comp])
        else:
            body = (self._comp_rank[comp], self.base.key(exp))
        if self.graded:
            return (self.degree_of(mono),) + body
        return body

    def compare(self, m1: ModMonomial, m2: ModMonomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def __repr__(self):
        tags = [self.kind]
        if self.graded:
            tags.append("graded")
        return "ModOrder(%s, rank=%d)" % ("+".join(tags), self.rank)


def module_compare(order: ModOrder, m1: ModMonomial, m2: ModMonomial) -> str:
    """Compare two module monomials: 'Less', 'Equal' or 'Greater'."""
    for exp, comp in (m1, m2):
        if not 0 <= comp < order.rank:
            raise IncompatibleModules("component %d out of range" % comp)
    if len(m1[0]) != len(m2[0]):
        raise IncompatibleModules("exponent lengths differ")
    c = order.compare(m1, m2)
    return "Less" if c < 0 else ("Greater" if c > 0 else "Equal")


def mono_divides(a: ModMonomial, b: ModMonomial) -> bool:
    """Left (equivalently right) divisibility of module monomials."""
    return a[1] == b[1] and exp_divides(a[0], b[0])


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------


def left_divide_module(
    xi: Vect, divisors: Sequence[Vect], order: ModOrder
) -> Tuple[List[Poly], Vect]:
    """Left division of xi by an ordered divisor list.

    Returns (quotients, remainder) with
    ``xi = sum_i quotients[i] * divisors[i] + remainder``; no monomial
    of the remainder is left-divisible by any divisor's leading
    monomial.  Ties go to the least divisor index.
    """
    if not divisors:
        raise EmptyDivisorList("no divisors given")
    if any(d.is_zero() for d in divisors):
        raise ZeroPolynomial("zero divisor in division")
    module = xi.module
    A = module.algebra
    lms = [d.lm(order) for d in divisors]
    lcs = [d.data[m] for d, m in zip(divisors, lms)]
    quotients = [A.zero() for _ in divisors]
    remainder = module.zero()
    work = xi
    while not work.is_zero():
        wm = work.lm(order)
        wc = work.data[wm]
        hit = -1
        for i, dm in enumerate(lms):
            if mono_divides(dm, wm):
                hit = i
                break
        if hit < 0:
            t = Vect(module, {wm: wc})
            remainder = remainder + t
            work = work - t
            continue
        alpha = exp_sub(wm[0], lms[hit][0])
        prod = divisors[hit].lmul(A.monomial(alpha))
        c = wc / prod.data[wm]
        quotients[hit] = quotients[hit] + A.monomial(alpha, c)
        work = work - prod.scale(c)
    return quotients, remainder


def right_divide_module(
    xi: Vect, divisors: Sequence[Vect], order: ModOrder
) -> Tuple[List[Poly], Vect]:
    """Right-sided mirror of :func:`left_divide_module`.

    Returns (quotients, remainder) with
    ``xi = sum_i divisors[i] * quotients[i] + remainder`` where the
    quotients multiply from the right.
    """
    if not divisors:
        raise EmptyDivisorList("no divisors given")
    if any(d.is_zero() for d in divisors):
        raise ZeroPolynomial("zero divisor in division")
    module = xi.module
    A = module.algebra
    lms = [d.lm(order) for d in divisors]
    quotients = [A.zero() for _ in divisors]
    remainder = module.zero()
    work = xi
    while not work.is_zero():
        wm = work.lm(order)
        wc = work.data[wm]
        hit = -1
        for i, dm in enumerate(lms):
            if mono_divides(dm, wm):
                hit = i
                break
        if hit < 0:
            t = Vect(module, {wm: wc})
            remainder = remainder + t
            work = work - t
            continue
        alpha = exp_sub(wm[0], lms[hit][0])
        prod = divisors[hit].rmul(A.monomial(alpha))
        c = wc / prod.data[wm]
        quotients[hit] = quotients[hit] + A.monomial(alpha, c)
        work = work - prod.scale(c)
    return quotients, remainder


# ---------------------------------------------------------------------------
# normal monomials
# ---------------------------------------------------------------------------


def _component_staircase(lms: Iterable[ModMonomial], rank: int):
    by_comp: List[List[ExpVec]] = [[] for _ in range(rank)]
    for exp, comp in lms:
        by_comp[comp].append(exp)
    return by_comp


def normal_monomials(G, bound: Optional[int] = None):
    """Monomials of the free module not led by the submodule.

    ``G`` must be a certified Groebner basis object (with ``elements``,
    ``order`` and ``module`` attributes, as produced by the groebner
    module).  When every component's staircase contains a pure power
    of every generator the list is finite and returned in full
    (ascending order); otherwise an :class:`InfiniteMarker` is
    returned, or the list capped at shifted degree ``bound`` when a
    bound is given.
    """
    elements = getattr(G, "elements", None)
    order = getattr(G, "order", None)
    module = getattr(G, "module", None)
    if elements is None or order is None or module is None:
        raise NotAGroebnerBasis(
            "normal_monomials needs a GroebnerBasis object"
        )
    n = module.algebra.n
    zero = zero_exp(n)
    lms = [g.lm(order) for g in elements]
    by_comp = _component_staircase(lms, module.rank)

    # caps[comp] is None when the whole component lies in the
    # submodule; caps[comp][j] is the least exponent m with a pure
    # power a_j^m in the component's staircase, or None if there is
    # none (which makes the set of normal monomials infinite).
    finite = True
    caps: List[Optional[List[Optional[int]]]] = []
    for comp in range(module.rank):
        if any(exp == zero for exp in by_comp[comp]):
            caps.append(None)
            continue
        comp_caps: List[Optional[int]] = []
        for j in range(n):
            pures = [
                exp[j]
                for exp in by_comp[comp]
                if exp[j] > 0
                and all(v == 0 for k, v in enumerate(exp) if k != j)
            ]
            if pures:
                comp_caps.append(min(pures))
            else:
                comp_caps.append(None)
                finite = False
        caps.append(comp_caps)

    def is_normal(exp: ExpVec, comp: int) -> bool:
        return not any(exp_divides(s, exp) for s in by_comp[comp])

    out: List[ModMonomial] = []
    if finite:
        for comp in range(module.rank):
            if caps[comp] is None:
                continue
            stack: List[tuple] = [()]
            for j in range(n):
                stack = [
                    pre + (v,) for pre in stack for v in range(caps[comp][j])
                ]
            for exp in stack:
                if is_normal(exp, comp):
                    out.append((exp, comp))
        out.sort(key=order.key)
        return out
    if bound is None:
        return InfiniteMarker()
    # capped enumeration by shifted degree
    d = module.algebra.degree_function
    weights = d.weights if d is not None else (1,) * n
    for comp in range(module.rank):
        budget = bound - module.shifts[comp]
        if budget < 0:
            continue
        stack = [()]
        for j in range(n):
            stack = [
                pre + (v,)
                for pre in stack
                for v in range(
                    budget // weights[j] + 1
                    if weights[j] > 0
                    else budget + 1
                )
            ]
        for exp in stack:
            if sum(e * w for e, w in zip(exp, weights)) <= budget and is_normal(
                exp, comp
            ):
                out.append((exp, comp))
    out.sort(key=order.key)
    return out
