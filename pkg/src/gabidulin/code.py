"""Gabidulin codes: evaluation of linearized polynomials of q-degree < k at
n points g_1, ..., g_n that are linearly independent over F_q."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadParamsError, DegreeTooHighError, DependentGError, LengthMismatchError, RankOutOfRangeError
from .field import FieldCtx, FieldElement
from .linalg import moore_matrix, rank_q, rank_q_vector, span_basis
from .linpoly import LinPoly, annihilator

__all__ = ["GabidulinCode", "error_span_poly"]


@dataclass(frozen=True)
class GabidulinCode:
    """The code {(f(g_1), ..., f(g_n)) : qdeg(f) < k} over ``ctx``.

    ``g`` defaults to 1, alpha, ..., alpha^(n-1).
    """

    ctx: FieldCtx
    n: int
    k: int
    g: tuple[FieldElement, ...] = field(default=())

    def __post_init__(self):
        ctx = self.ctx
        if not 1 <= self.n <= ctx.m:
            raise BadParamsError(f"code length n={self.n} must satisfy 1 <= n <= m={ctx.m}")
        if not 1 <= self.k <= self.n:
            raise BadParamsError(f"dimension k={self.k} must satisfy 1 <= k <= n={self.n}")
        g = self.g or tuple(ctx.from_code(ctx.q**i) for i in range(self.n))
        g = tuple(ctx(x) for x in g)
        if len(g) != self.n:
            raise LengthMismatchError(f"{len(g)} evaluation points for length n={self.n}")
        if rank_q_vector(g) != self.n:
            raise DependentGError("evaluation points are linearly dependent over F_q")
        object.__setattr__(self, "g", g)

    @property
    def d(self) -> int:
        """Minimum rank distance n - k + 1."""
        return self.n - self.k + 1

    @property
    def unique_radius(self) -> int:
        return (self.n - self.k) // 2

    def generator_matrix(self) -> list[list[FieldElement]]:
        return moore_matrix(self.g, self.k)

    def message(self, msg) -> LinPoly:
        """Normalize a message given as a LinPoly or a coefficient sequence."""
        if isinstance(msg, LinPoly):
            f = msg
        else:
            msg = list(msg)
            if len(msg) > self.k:
                raise DegreeTooHighError(f"{len(msg)} coefficients for dimension k={self.k}")
            f = LinPoly(self.ctx, msg)
        if f.qdeg >= self.k:
            raise DegreeTooHighError(f"message q-degree {f.qdeg} >= k={self.k}")
        return f

    def encode(self, msg) -> list[FieldElement]:
        return self.message(msg).evaluate_many(self.g)

    def message_key(self, f: LinPoly) -> tuple:
        """Canonical sort key: coefficient digits, a_0 first, padded to k."""
        return tuple(tuple(f[i].digits) for i in range(self.k))

    def zero_word(self) -> list[FieldElement]:
        return [self.ctx.zero] * self.n

    def random_message(self, rng: np.random.Generator) -> LinPoly:
        codes = rng.integers(0, self.ctx.size, size=self.k)
        return LinPoly(self.ctx, [self.ctx.from_code(int(c)) for c in codes])

    def random_error(self, t: int, seed=None) -> list[FieldElement]:
        """Error vector of rank exactly t, as the product of random full-rank
        m x t and t x n matrices over F_q.  ``seed`` may be an int or a numpy
        Generator."""
        ctx = self.ctx
        if not 0 <= t <= min(ctx.m, self.n):
            raise RankOutOfRangeError(f"rank t={t} outside 0..{min(ctx.m, self.n)}")
        if t == 0:
            return self.zero_word()
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        q = ctx.q
        while True:
            A = rng.integers(0, q, size=(ctx.m, t))
            if rank_q(A.tolist(), q) == t:
                break
        while True:
            B = rng.integers(0, q, size=(t, self.n))
            if rank_q(B.tolist(), q) == t:
                break
        E = (A @ B) % q
        return [ctx.vec_to_elem([int(x) for x in E[:, j]]) for j in range(self.n)]

    def add(self, c: Sequence[FieldElement], e: Sequence[FieldElement]) -> list[FieldElement]:
        if len(c) != len(e):
            raise LengthMismatchError(f"vectors of length {len(c)} and {len(e)}")
        return [a + b for a, b in zip(c, e)]


def error_span_poly(e: Sequence[FieldElement], ctx: FieldCtx | None = None) -> LinPoly:
    """The monic D with root space span(e_1, ..., e_n); qdeg(D) = rank_q(e)."""
    ctx = ctx or (e[0].ctx if e else None)
    if ctx is None:
        raise ValueError("empty error vector needs an explicit field")
    return annihilator(span_basis([ctx(x) for x in e]), ctx)
