"""The ring of q-linearized polynomials over F_{q^m}.

A linearized polynomial f(x) = a_0 x + a_1 x^q + ... + a_s x^(q^s) is stored
by its coefficient list (a_0, ..., a_s).  The ring operations are ``+`` and
composition; ``f(g)`` composes when g is a :class:`LinPoly` and evaluates
when g is a field element.

>>> from gabidulin.field import FieldCtx
>>> F = FieldCtx(2, 3)
>>> a = F.alpha
>>> lam = LinPoly(F, [a**5, 0, a**2])
>>> lam(F.one) == a + 1
True
>>> h, r = left_divide(LinPoly.monomial(F, 3) + LinPoly.x(F), lam)
>>> h == LinPoly(F, [0, a**3]), r == LinPoly(F, [1, a**6])
(True, True)
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    DependentBasisError,
    DependentEvaluationPointsError,
    DivisorZeroError,
    FieldMismatchError,
    LengthMismatchError,
    SingularMatrixError,
    ZeroPolynomialError,
)
from .field import SUPERSCRIPTS, FieldCtx, FieldElement
from .linalg import moore_matrix, nullspace_q, solve

__all__ = [
    "BOTTOM",
    "LinPoly",
    "qdeg",
    "compose",
    "left_divide",
    "right_divide",
    "annihilator",
    "q_lagrange",
    "root_space",
]

#: q-degree of the zero polynomial: below every integer, absorbing under +.
BOTTOM = -math.inf


class LinPoly:
    """Immutable q-linearized polynomial over a :class:`FieldCtx`."""

    __slots__ = ("ctx", "_c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        codes = [ctx(c).value for c in coeffs]
        while codes and codes[-1] == 0:
            codes.pop()
        self.ctx = ctx
        self._c = tuple(codes)

    @classmethod
    def _from_codes(cls, ctx: FieldCtx, codes) -> "LinPoly":
        p = cls.__new__(cls)
        p.ctx = ctx
        p._c = tuple(codes)
        return p

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinPoly":
        return cls._from_codes(ctx, ())

    @classmethod
    def x(cls, ctx: FieldCtx) -> "LinPoly":
        return cls._from_codes(ctx, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, i: int, c=1) -> "LinPoly":
        """c * x^(q^i)."""
        return cls(ctx, [0] * i + [c])

    # -- accessors --------------------------------------------------------

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, c) for c in self._c]

    @property
    def qdeg(self):
        return len(self._c) - 1 if self._c else BOTTOM

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.ctx, self._c[i] if 0 <= i < len(self._c) else 0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def monic(self) -> "LinPoly":
        if not self._c:
            raise ZeroPolynomialError("the zero polynomial has no monic associate")
        return FieldElement(self.ctx, self._c[-1]).inv() * self

    # -- ring operations --------------------------------------------------

    def _check(self, other: "LinPoly"):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other):
        if not isinstance(other, LinPoly):
            return NotImplemented
        self._check(other)
        k = self.ctx._k
        return LinPoly._from_codes(self.ctx, k.poly_add(self.ctx._T, self._c, other._c))

    def __sub__(self, other):
        if not isinstance(other, LinPoly):
            return NotImplemented
        self._check(other)
        k = self.ctx._k
        return LinPoly._from_codes(self.ctx, k.poly_sub(self.ctx._T, self._c, other._c))

    def __neg__(self):
        return LinPoly._from_codes(self.ctx, [self.ctx._k.neg(self.ctx._T, c) for c in self._c])

    def __rmul__(self, c):
        """Scalar multiple c * f (c a field element or int)."""
        if isinstance(c, LinPoly):
            return NotImplemented
        code = self.ctx(c).value
        return LinPoly._from_codes(self.ctx, self.ctx._k.poly_scale(self.ctx._T, code, self._c))

    def __call__(self, arg):
        if isinstance(arg, LinPoly):
            return compose(self, arg)
        x = self.ctx(arg)
        return FieldElement(self.ctx, self.ctx._k.poly_eval(self.ctx._T, self._c, x.value))

    def evaluate(self, x) -> FieldElement:
        x = self.ctx(x)
        return FieldElement(self.ctx, self.ctx._k.poly_eval(self.ctx._T, self._c, x.value))

    def evaluate_many(self, xs: Sequence) -> list[FieldElement]:
        k, T = self.ctx._k, self.ctx._T
        return [FieldElement(self.ctx, k.poly_eval(T, self._c, self.ctx(x).value)) for x in xs]

    # -- identity / display -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LinPoly):
            return NotImplemented
        return self._c == other._c and (self.ctx is other.ctx or self.ctx == other.ctx)

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"LinPoly({[c.digits for c in self.coeffs]})"

    def __str__(self):
        q = self.ctx.q
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            code = self._c[i]
            if not code:
                continue
            power = q**i
            mono = "x" if power == 1 else "x" + str(power).translate(SUPERSCRIPTS)
            c = FieldElement(self.ctx, code)
            coef = "" if code == 1 else c.power_str()
            if coef and " + " in coef:
                coef = f"({coef})"
            terms.append(coef + mono)
        return " + ".join(terms) or "0"


def qdeg(f: LinPoly):
    return f.qdeg


def compose(f: LinPoly, g: LinPoly) -> LinPoly:
    """f o g = f(g(x))."""
    f._check(g)
    return LinPoly._from_codes(f.ctx, f.ctx._k.poly_compose(f.ctx._T, f._c, g._c))


def left_divide(f: LinPoly, g: LinPoly) -> tuple[LinPoly, LinPoly]:
    """(h, r) with f = h o g + r and qdeg(r) < qdeg(g)."""
    f._check(g)
    if not g:
        raise DivisorZeroError("symbolic division by the zero polynomial")
    h, r = f.ctx._k.poly_left_divmod(f.ctx._T, f._c, g._c)
    return LinPoly._from_codes(f.ctx, h), LinPoly._from_codes(f.ctx, r)


def right_divide(f: LinPoly, g: LinPoly) -> tuple[LinPoly, LinPoly]:
    """(m, r) with f = g o m + r and qdeg(r) < qdeg(g).

    f is symbolically divisible on the right by g exactly when r is zero.
    """
    f._check(g)
    if not g:
        raise DivisorZeroError("symbolic division by the zero polynomial")
    m, r = f.ctx._k.poly_right_divmod(f.ctx._T, f._c, g._c)
    return LinPoly._from_codes(f.ctx, m), LinPoly._from_codes(f.ctx, r)


def annihilator(basis: Sequence[FieldElement], ctx: FieldCtx | None = None) -> LinPoly:
    """Monic polynomial of q-degree len(basis) vanishing exactly on span(basis).

    Built one basis vector at a time: if P vanishes on U, then
    (x^q - P(b)^(q-1) x) o P vanishes on U + <b>.
    """
    if ctx is None:
        if not basis:
            raise ValueError("annihilator of an empty basis needs an explicit field")
        ctx = basis[0].ctx
    k, T = ctx._k, ctx._T
    q = ctx.q
    P = [1]
    for b in basis:
        c = k.poly_eval(T, P, ctx(b).value)
        if c == 0:
            raise DependentBasisError("basis elements are linearly dependent over F_q")
        c_pow = 1
        for _ in range(q - 1):
            c_pow = k.mul(T, c_pow, c)
        step = [k.neg(T, c_pow), 1]
        P = k.poly_compose(T, step, P)
    return LinPoly._from_codes(ctx, P)


def q_lagrange(g: Sequence[FieldElement], r: Sequence[FieldElement]) -> LinPoly:
    """The unique L with qdeg(L) <= n-1 and L(g_i) = r_i, n = len(g).

    Solves the transposed Moore system sum_j c_j g_i^(q^j) = r_i.
    """
    if len(g) != len(r):
        raise LengthMismatchError(f"{len(g)} points but {len(r)} values")
    if not g:
        raise ValueError("interpolation needs at least one point")
    ctx = g[0].ctx
    n = len(g)
    M = moore_matrix([ctx(x) for x in g], n)
    A = [[M[j][i] for j in range(n)] for i in range(n)]
    try:
        coeffs = solve(A, [ctx(v) for v in r])
    except SingularMatrixError:
        raise DependentEvaluationPointsError(
            "evaluation points are linearly dependent over F_q"
        ) from None
    return LinPoly(ctx, coeffs)


def root_space(f: LinPoly) -> list[FieldElement]:
    """F_q-basis of {b in F_{q^m} : f(b) = 0}."""
    if not f:
        raise ZeroPolynomialError("every element is a root of the zero polynomial")
    ctx = f.ctx
    # column j: image of the j-th coordinate basis vector alpha^j
    images = [f(ctx.from_code(ctx.q**j)) for j in range(ctx.m)]
    M = [[img.digits[i] for img in images] for i in range(ctx.m)]
    return [ctx.vec_to_elem(v) for v in nullspace_q(M, ctx.q)]
