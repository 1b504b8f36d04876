"""PBW monomials, monomial orders, and solvable polynomial algebras.

An algebra here is K<a_1,...,a_n> subject to relations

    a_j * a_i = lambda_ji * a_i a_j + f_ji        (i < j)

with lambda_ji a nonzero scalar and, when f_ji is nonzero,
LM(f_ji) strictly below the monomial a_i a_j in the chosen order.
Under these conditions the ordered monomials a_1^k1 ... a_n^kn form a
K-basis and every product normalizes onto that basis; the rewriting
engine in :class:`SolvableAlgebra` performs that normalization with a
memoized monomial-product cache.
"""

from __future__ import annotations

import os
import re
from typing import Iterable, Optional, Sequence, Tuple

from .coeff import (
    BadScalarLiteral,
    FieldSpec,
    Scalar,
    SolvpolyError,
)

__all__ = [
    "ExpVec",
    "LengthMismatch",
    "ExponentOverflow",
    "ZeroPolynomial",
    "ZeroLambda",
    "TailOrderViolation",
    "MalformedRelation",
    "UnknownGenerator",
    "ExprSyntaxError",
    "DegreeFunction",
    "MonomialOrder",
    "Relation",
    "Poly",
    "SolvableAlgebra",
    "build_algebra",
    "compare_monomials",
    "multiply_monomials",
    "multiply",
    "leading_data",
    "weighted_degree",
    "exp_add",
    "exp_sub",
    "exp_max",
    "exp_divides",
]

ExpVec = Tuple[int, ...]

EXP_LIMIT = 2 ** 32


class LengthMismatch(SolvpolyError):
    """Exponent vectors of different lengths were combined."""


class ExponentOverflow(SolvpolyError):
    """An exponent reached the 2^32 hard limit."""


class ZeroPolynomial(SolvpolyError):
    """Leading data of the zero polynomial was requested."""


class ZeroLambda(SolvpolyError):
    """A relation has a vanishing leading scalar."""


class TailOrderViolation(SolvpolyError):
    """A relation tail is not strictly below a_i*a_j in the order."""


class MalformedRelation(SolvpolyError):
    """A relation equation does not have the solvable shape."""


class UnknownGenerator(SolvpolyError):
    """An expression uses an identifier that is not a generator."""


class ExprSyntaxError(SolvpolyError):
    """A polynomial expression does not match the grammar."""

    def __init__(self, message: str, column: int = 0):
        super().__init__(message)
        self.column = column


# ---------------------------------------------------------------------------
# exponent-vector helpers
# ---------------------------------------------------------------------------


def exp_add(a: ExpVec, b: ExpVec) -> ExpVec:
    if len(a) != len(b):
        raise LengthMismatch("exponent lengths %d and %d" % (len(a), len(b)))
    out = tuple(x + y for x, y in zip(a, b))
    if any(v >= EXP_LIMIT for v in out):
        raise ExponentOverflow("exponent exceeds 2^32")
    return out


def exp_sub(a: ExpVec, b: ExpVec) -> ExpVec:
    if len(a) != len(b):
        raise LengthMismatch("exponent lengths %d and %d" % (len(a), len(b)))
    out = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in out):
        raise ValueError("negative exponent in subtraction")
    return out


def exp_max(a: ExpVec, b: ExpVec) -> ExpVec:
    if len(a) != len(b):
        raise LengthMismatch("exponent lengths %d and %d" % (len(a), len(b)))
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_divides(a: ExpVec, b: ExpVec) -> bool:
    """True when a^a left-divides a^b, i.e. a <= b componentwise."""
    if len(a) != len(b):
        raise LengthMismatch("exponent lengths %d and %d" % (len(a), len(b)))
    return all(x <= y for x, y in zip(a, b))


def zero_exp(n: int) -> ExpVec:
    return (0,) * n


def unit_exp(n: int, i: int, power: int = 1) -> ExpVec:
    return tuple(power if k == i else 0 for k in range(n))


# ---------------------------------------------------------------------------
# degree functions and monomial orders
# ---------------------------------------------------------------------------


class DegreeFunction:
    """Positive weights (m_1,...,m_n); d(a^alpha) = sum alpha_i * m_i."""

    __slots__ = ("weights",)

    def __init__(self, weights: Sequence[int]):
        w = tuple(int(x) for x in weights)
        if not w or any(x < 1 for x in w):
            raise ValueError("degree weights must be positive integers")
        object.__setattr__(self, "weights", w)

    def __setattr__(self, name, value):
        raise AttributeError("DegreeFunction is immutable")

    def __call__(self, exp: ExpVec) -> int:
        if len(exp) != len(self.weights):
            raise LengthMismatch(
                "exponent length %d, weight length %d"
                % (len(exp), len(self.weights))
            )
        return sum(e * w for e, w in zip(exp, self.weights))

    def __eq__(self, other):
        return isinstance(other, DegreeFunction) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "DegreeFunction(%r)" % (list(self.weights),)


class MonomialOrder:
    """A monomial order on PBW monomials.

    kind 'lex'    : lexicographic along the priority permutation;
    kind 'grlex'  : weighted total degree first, then lex tiebreak;
    kind 'grlexz' : internal order used on Rees rings -- compares the
                    exponents of the first n-1 generators by grlex and
                    breaks ties with the final (central homogenizing)
                    generator's exponent.

    ``priority`` lists 0-based generator indices from least to
    greatest; the default is the input sequence, so the last generator
    dominates lex ties.
    """

    __slots__ = ("kind", "priority", "degree", "_significance")

    KINDS = ("lex", "grlex", "grlexz")

    def __init__(
        self,
        kind: str,
        n: int,
        priority: Optional[Sequence[int]] = None,
        degree: Optional[DegreeFunction] = None,
    ):
        kind = kind.lower()
        if kind not in self.KINDS:
            raise ValueError("unknown order kind %r" % (kind,))
        if priority is None:
            prio = tuple(range(n))
        else:
            prio = tuple(int(x) for x in priority)
        if sorted(prio) != list(range(n)):
            raise ValueError("priority must be a permutation of 0..n-1")
        if kind in ("grlex", "grlexz"):
            if degree is None:
                raise ValueError("%s requires a degree function" % kind)
            want = n - 1 if kind == "grlexz" else n
            if len(degree.weights) != want:
                raise LengthMismatch(
                    "degree function has %d weights, expected %d"
                    % (len(degree.weights), want)
                )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "priority", prio)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_significance", tuple(reversed(prio)))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    @property
    def n(self) -> int:
        return len(self.priority)

    @property
    def is_graded(self) -> bool:
        """True for plain weighted-degree-first orders on the algebra."""
        return self.kind == "grlex"

    def key(self, exp: ExpVec):
        """A sort key: exp a < exp b in the order iff key(a) < key(b)."""
        if len(exp) != self.n:
            raise LengthMismatch(
                "exponent length %d under an order on %d generators"
                % (len(exp), self.n)
            )
        if self.kind == "lex":
            return tuple(exp[i] for i in self._significance)
        if self.kind == "grlex":
            return (self.degree(exp), tuple(exp[i] for i in self._significance))
        # grlexz: the last exponent slot belongs to the homogenizing
        # generator; the leading block is compared by grlex first.
        body = exp[:-1]
        sig = [i for i in self._significance if i != self.n - 1]
        return (self.degree(body), tuple(body[i] for i in sig), exp[-1])

    def compare(self, a: ExpVec, b: ExpVec) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.priority == other.priority
            and self.degree == other.degree
        )

    def __hash__(self):
        return hash((self.kind, self.priority, self.degree))

    def __repr__(self):
        return "MonomialOrder(%r, n=%d, priority=%r, degree=%r)" % (
            self.kind,
            self.n,
            list(self.priority),
            self.degree,
        )


def compare_monomials(order: MonomialOrder, a: ExpVec, b: ExpVec) -> str:
    """Compare two exponent vectors; returns 'Less', 'Equal' or 'Greater'."""
    if len(a) != len(b):
        raise LengthMismatch("exponent lengths %d and %d" % (len(a), len(b)))
    c = order.compare(a, b)
    return "Less" if c < 0 else ("Greater" if c > 0 else "Equal")


# ---------------------------------------------------------------------------
# relations and polynomials
# ---------------------------------------------------------------------------


class Relation:
    """a_j * a_i = lam * a_i a_j + tail, for generator indices i < j."""

    __slots__ = ("j", "i", "lam", "tail")

    def __init__(self, j: int, i: int, lam: Scalar, tail: "Poly"):
        if not i < j:
            raise MalformedRelation("relation indices need i < j")
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")


class Poly:
    """An immutable element of a solvable polynomial algebra.

    Terms are held sorted descending in the algebra's order, so the
    leading term is ``terms[0]``.
    """

    __slots__ = ("algebra", "terms", "_data")

    def __init__(self, algebra: "SolvableAlgebra", terms):
        # terms: iterable of (ExpVec, Scalar); zeros dropped, sorted here.
        data = {}
        for exp, c in terms:
            if c.is_zero():
                continue
            if exp in data:
                c2 = data[exp] + c
                if c2.is_zero():
                    del data[exp]
                else:
                    data[exp] = c2
            else:
                data[exp] = c
        key = algebra.order.key
        ordered = tuple(
            sorted(data.items(), key=lambda t: key(t[0]), reverse=True)
        )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", ordered)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exp: ExpVec) -> Scalar:
        c = self._data.get(exp)
        return c if c is not None else self.algebra.field.zero

    def lm(self) -> ExpVec:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self) -> Scalar:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def lt(self) -> "Poly":
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return Poly(self.algebra, [self.terms[0]])

    def tail(self) -> "Poly":
        """Everything below the leading term."""
        return Poly(self.algebra, self.terms[1:])

    def monic(self) -> "Poly":
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        c = self.lc()
        if c.is_one():
            return self
        inv = c.inverse()
        return Poly(self.algebra, [(e, x * inv) for e, x in self.terms])

    def degree(self) -> int:
        """Weighted degree under the algebra's degree function."""
        d = self.algebra.degree_function
        if d is None:
            raise SolvpolyError("algebra has no degree function attached")
        return weighted_degree(d, self)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if other.algebra is not self.algebra:
            raise SolvpolyError("polynomials from different algebras")
        merged = dict(self._data)
        for exp, c in other.terms:
            cur = merged.get(exp)
            if cur is None:
                merged[exp] = c
            else:
                s = cur + c
                if s.is_zero():
                    del merged[exp]
                else:
                    merged[exp] = s
        return Poly(self.algebra, merged.items())

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.algebra, [(e, -c) for e, c in self.terms])

    def scale(self, c: Scalar) -> "Poly":
        if c.is_zero():
            return self.algebra.zero()
        return Poly(self.algebra, [(e, x * c) for e, x in self.terms])

    def __mul__(self, other: "Poly") -> "Poly":
        return self.algebra.multiply(self, other)

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.algebra is other.algebra and self._data == other._data

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        return self.algebra.poly_str(self)

    def __repr__(self):
        return "Poly(%s)" % (self,)


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

_CACHE_ENV = "SOLVPOLY_CACHE_LIMIT"


class SolvableAlgebra:
    """K<a_1,...,a_n> with a solvable-type relation table.

    Construct through :func:`build_algebra` for textual relations, or
    directly with Relation records.  The product cache memoizes PBW
    normal forms of monomial pairs; its size is capped by the
    SOLVPOLY_CACHE_LIMIT environment variable.
    """

    def __init__(
        self,
        field: FieldSpec,
        names: Sequence[str],
        order: MonomialOrder,
        relations: Iterable[Relation] = (),
        degree_function: Optional[DegreeFunction] = None,
    ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        if order.n != len(names):
            raise LengthMismatch(
                "order on %d generators, %d names" % (order.n, len(names))
            )
        self.field = field
        self.names = names
        self.order = order
        self.degree_function = degree_function or (
            order.degree if order.kind == "grlex" else None
        )
        self.n = len(names)
        self.relations = {}
        self.product_cache = {}
        try:
            self._cache_limit = int(os.environ.get(_CACHE_ENV, "1000000"))
        except ValueError:
            self._cache_limit = 1000000
        for rel in relations:
            self._install_relation(rel)
        # default all unspecified pairs to commuting
        one = field.one
        for j in range(self.n):
            for i in range(j):
                if (j, i) not in self.relations:
                    self.relations[(j, i)] = Relation(j, i, one, self.zero())
        self._validate_relations()

    def _install_relation(self, rel: Relation) -> None:
        if not (0 <= rel.i < rel.j < self.n):
            raise MalformedRelation(
                "relation indices (%d,%d) out of range" % (rel.j, rel.i)
            )
        if (rel.j, rel.i) in self.relations:
            raise MalformedRelation(
                "duplicate relation for pair (%s,%s)"
                % (self.names[rel.j], self.names[rel.i])
            )
        self.relations[(rel.j, rel.i)] = rel

    def _validate_relations(self) -> None:
        for (j, i), rel in self.relations.items():
            if rel.lam.is_zero():
                raise ZeroLambda(
                    "relation %s*%s has zero leading scalar"
                    % (self.names[j], self.names[i])
                )
            if rel.tail and not rel.tail.is_zero():
                lead = exp_add(unit_exp(self.n, i), unit_exp(self.n, j))
                if self.order.compare(rel.tail.lm(), lead) >= 0:
                    raise TailOrderViolation(
                        "tail of %s*%s relation is not below %s*%s"
                        % (
                            self.names[j],
                            self.names[i],
                            self.names[i],
                            self.names[j],
                        )
                    )

    # -- polynomial constructors ------------------------------------------------

    def zero(self) -> Poly:
        return Poly(self, [])

    def one(self) -> Poly:
        return Poly(self, [(zero_exp(self.n), self.field.one)])

    def monomial(self, exp: ExpVec, coeff: Optional[Scalar] = None) -> Poly:
        if coeff is None:
            coeff = self.field.one
        return Poly(self, [(tuple(exp), coeff)])

    def gen(self, i: int, power: int = 1) -> Poly:
        return self.monomial(unit_exp(self.n, i, power))

    def scalar_poly(self, c: Scalar) -> Poly:
        return Poly(self, [(zero_exp(self.n), c)])

    def from_terms(self, terms) -> Poly:
        return Poly(self, terms)

    def relation(self, j: int, i: int) -> Relation:
        return self.relations[(j, i)]

    # -- the rewriting product ----------------------------------------------------

    def mono_mul(self, a: ExpVec, b: ExpVec) -> Poly:
        """PBW normal form of a^a * a^b."""
        a = tuple(a)
        b = tuple(b)
        cached = self.product_cache.get((a, b))
        if cached is not None:
            return cached
        if not any(a):
            out = self.monomial(exp_add(a, b))
        elif not any(b):
            out = self.monomial(exp_add(a, b))
        else:
            k = max(idx for idx, v in enumerate(a) if v)
            ek = unit_exp(self.n, k)
            if a == ek:
                out = self._gen_times_mono(k, b)
            else:
                t = self.mono_mul(ek, b)
                out = self._mono_times_poly(exp_sub(a, ek), t)
        if len(self.product_cache) < self._cache_limit:
            self.product_cache[(a, b)] = out
        return out

    def _gen_times_mono(self, k: int, b: ExpVec) -> Poly:
        """Normal form of a_k * a^b with b nonzero."""
        i = min(idx for idx, v in enumerate(b) if v)
        if k <= i:
            return self.monomial(exp_add(unit_exp(self.n, k), b))
        rel = self.relations[(k, i)]
        rest = exp_sub(b, unit_exp(self.n, i))
        t = self.mono_mul(unit_exp(self.n, k), rest)
        swapped = self._mono_times_poly(unit_exp(self.n, i), t).scale(rel.lam)
        if rel.tail.is_zero():
            return swapped
        return swapped + self._poly_times_mono(rel.tail, rest)

    def _mono_times_poly(self, a: ExpVec, f: Poly) -> Poly:
        acc = {}
        for exp, c in f.terms:
            for e2, c2 in self.mono_mul(a, exp).terms:
                prod = c * c2
                cur = acc.get(e2)
                if cur is None:
                    acc[e2] = prod
                else:
                    s = cur + prod
                    if s.is_zero():
                        del acc[e2]
                    else:
                        acc[e2] = s
        return Poly(self, acc.items())

    def _poly_times_mono(self, f: Poly, b: ExpVec) -> Poly:
        acc = {}
        for exp, c in f.terms:
            for e2, c2 in self.mono_mul(exp, b).terms:
                prod = c * c2
                cur = acc.get(e2)
                if cur is None:
                    acc[e2] = prod
                else:
                    s = cur + prod
                    if s.is_zero():
                        del acc[e2]
                    else:
                        acc[e2] = s
        return Poly(self, acc.items())

    def multiply(self, f: Poly, g: Poly) -> Poly:
        """Product of two elements, normalized onto the PBW basis."""
        if f.algebra is not self or g.algebra is not self:
            raise SolvpolyError("operands built over a different algebra")
        acc = {}
        for ea, ca in f.terms:
            for eb, cb in g.terms:
                c = ca * cb
                for exp, cm in self.mono_mul(ea, eb).terms:
                    prod = c * cm
                    cur = acc.get(exp)
                    if cur is None:
                        acc[exp] = prod
                    else:
                        s = cur + prod
                        if s.is_zero():
                            del acc[exp]
                        else:
                            acc[exp] = s
        return Poly(self, acc.items())

    # -- parsing and printing -------------------------------------------------------

    def parse(self, text: str) -> Poly:
        """Parse an expression; factors multiply in written order."""
        terms = _parse_expression(text, self.names, self.field)
        result = self.zero()
        for coeff, factors in terms:
            part = self.scalar_poly(coeff)
            for gi, power in factors:
                part = self.multiply(part, self.gen(gi, power))
            result = result + part
        return result

    def poly_str(self, f: Poly) -> str:
        if f.is_zero():
            return "0"
        chunks = []
        for idx, (exp, c) in enumerate(f.terms):
            body = "*".join(
                self.names[i] + ("^%d" % e if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            cs = str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if body:
                piece = body if mag == "1" else "%s*%s" % (mag, body)
            else:
                piece = mag
            if idx == 0:
                chunks.append("-" + piece if neg else piece)
            else:
                chunks.append((" - " if neg else " + ") + piece)
        return "".join(chunks)

    def __repr__(self):
        return "SolvableAlgebra(%s)" % (", ".join(self.names))


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>-?[0-9]+(?:/[1-9][0-9]*)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ExprSyntaxError(
                "unexpected character %r" % rest[0], column=pos + 1
            )
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), pos))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), pos))
        else:
            tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    return tokens


def _parse_expression(text: str, names: Sequence[str], field: FieldSpec):
    """Parse into a list of (coefficient, [(gen index, power), ...])."""
    name_index = {nm: i for i, nm in enumerate(names)}
    tokens = _tokenize(text)
    if not tokens:
        raise ExprSyntaxError("empty expression", column=1)
    out = []
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    sign = 1
    tok = peek()
    if tok and tok[0] == "op" and tok[1] in "+-":
        sign = -1 if tok[1] == "-" else 1
        pos += 1

    while True:
        coeff = field.one if sign > 0 else -field.one
        factors = []
        saw_factor = False
        expect_factor = True
        while expect_factor:
            tok = peek()
            if tok is None:
                break
            kind, val, col = tok
            if kind == "num":
                try:
                    coeff = coeff * field.from_literal(val)
                except BadScalarLiteral as exc:
                    raise ExprSyntaxError(str(exc), column=col + 1)
                pos += 1
                saw_factor = True
            elif kind == "ident":
                if val not in name_index:
                    raise UnknownGenerator(
                        "unknown generator %r (declared: %s)"
                        % (val, ", ".join(names))
                    )
                gi = name_index[val]
                pos += 1
                power = 1
                nxt = peek()
                if nxt and nxt[0] == "op" and nxt[1] == "^":
                    pos += 1
                    ptok = peek()
                    if not ptok or ptok[0] != "num" or not ptok[1].isdigit():
                        raise ExprSyntaxError(
                            "expected a natural number after '^'",
                            column=(ptok[2] + 1 if ptok else len(tokens)),
                        )
                    power = int(ptok[1])
                    pos += 1
                factors.append((gi, power))
                saw_factor = True
            else:
                raise ExprSyntaxError(
                    "unexpected operator %r" % val, column=col + 1
                )
            nxt = peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                pos += 1
                expect_factor = True
            else:
                expect_factor = False
        if not saw_factor:
            raise ExprSyntaxError("expected a term", column=1)
        out.append((coeff, factors))
        tok = peek()
        if tok is None:
            break
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            pos += 1
        else:
            raise ExprSyntaxError(
                "expected '+' or '-' between terms", column=tok[2] + 1
            )
    return out


def _parse_normal_form(
    text: str, names: Sequence[str], field: FieldSpec, n: int
):
    """Parse an expression whose terms must already be PBW-ordered.

    Used for relation right-hand sides, where no product rewriting is
    available yet.  Returns a dict ExpVec -> Scalar.
    """
    data = {}
    for coeff, factors in _parse_expression(text, names, field):
        exp = [0] * n
        last = -1
        for gi, power in factors:
            if gi < last:
                raise MalformedRelation(
                    "term factors must appear in nondecreasing generator "
                    "order inside relation right-hand sides"
                )
            last = gi
            exp[gi] += power
        key = tuple(exp)
        cur = data.get(key)
        if cur is None:
            data[key] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del data[key]
            else:
                data[key] = s
    return data


_REL_LHS_RE = re.compile(
    r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)\s*\Z"
)


def build_algebra(
    field: FieldSpec,
    names: Sequence[str],
    order: MonomialOrder,
    relations: Iterable[str] = (),
    degree_function: Optional[DegreeFunction] = None,
) -> SolvableAlgebra:
    """Build and validate a solvable polynomial algebra.

    Each relation equation must read ``gen_j * gen_i = rhs`` with j
    after i in the declared generator sequence; the right-hand side
    must contain the monomial gen_i*gen_j with a nonzero scalar, and
    everything else must sit strictly below it in the order.
    Unspecified pairs commute.
    """
    names = tuple(names)
    n = len(names)
    name_index = {nm: i for i, nm in enumerate(names)}
    shell = SolvableAlgebra(field, names, order, (), degree_function)

    parsed = {}
    for eq in relations:
        if "=" not in eq:
            raise MalformedRelation("relation %r lacks '='" % (eq,))
        lhs_text, rhs_text = eq.split("=", 1)
        m = _REL_LHS_RE.match(lhs_text)
        if not m:
            raise MalformedRelation(
                "left side of %r must be a product of two generators" % (eq,)
            )
        left_name, right_name = m.group(1), m.group(2)
        for nm in (left_name, right_name):
            if nm not in name_index:
                raise UnknownGenerator("unknown generator %r" % (nm,))
        j, i = name_index[left_name], name_index[right_name]
        if not i < j:
            raise MalformedRelation(
                "relation %r must rewrite a later generator past an "
                "earlier one (got %s*%s)" % (eq, left_name, right_name)
            )
        if (j, i) in parsed:
            raise MalformedRelation(
                "duplicate relation for pair %s*%s" % (left_name, right_name)
            )
        try:
            rhs = _parse_normal_form(rhs_text, names, field, n)
        except ExprSyntaxError as exc:
            raise MalformedRelation(
                "bad right-hand side in %r: %s" % (eq, exc)
            )
        lead = exp_add(unit_exp(n, i), unit_exp(n, j))
        lam = rhs.pop(lead, field.zero)
        if lam.is_zero():
            raise ZeroLambda(
                "relation %r needs a nonzero multiple of %s*%s"
                % (eq, names[i], names[j])
            )
        tail = Poly(shell, rhs.items())
        parsed[(j, i)] = Relation(j, i, lam, tail)

    return SolvableAlgebra(
        field, names, order, parsed.values(), degree_function
    )


# ---------------------------------------------------------------------------
# free functions mirroring the contract
# ---------------------------------------------------------------------------


def multiply_monomials(A: SolvableAlgebra, a: ExpVec, b: ExpVec) -> Poly:
    return A.mono_mul(a, b)


def multiply(A: SolvableAlgebra, f: Poly, g: Poly) -> Poly:
    return A.multiply(f, g)


def leading_data(A: SolvableAlgebra, f: Poly):
    """(LM, LC, LT) of a nonzero polynomial."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading data")
    exp, c = f.terms[0]
    return exp, c, (exp, c)


def weighted_degree(d: DegreeFunction, f: Poly) -> int:
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no degree")
    return max(d(exp) for exp, _ in f.terms)
