"""Minimal list decoding of Gabidulin codes through the interpolation module.

For a received word r the pairs [f1, f2] of linearized polynomials with
f1(g_i) + f2(r_i) = 0 for all i form a left module over the ring of
linearized polynomials, generated by the rows [Pi, 0] and [-Lambda, x]
where Pi annihilates span(g) and Lambda interpolates r at g.  A codeword
c = f(g) at rank distance t corresponds to the element [D o f, -D] with D the
error span polynomial, whose (0, k-1)-weighted q-degree is t + k - 1.

The linearized Euclidean algorithm turns the generating rows into a basis
g1, g2 whose leading terms sit in different components.  Every module
element of weighted degree l2 + j led by its second component is then
a o g1 + b o g2 with qdeg(a) <= l2 - l1 + j and qdeg(b) = j, and scaling
makes b monic.  Sweeping j = 0, 1, ... and keeping the candidates whose first
component is right-divisible by the second yields all closest codewords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .code import GabidulinCode
from .errors import (
    AmbiguousDecodingError,
    CandidateBudgetError,
    DecodingInvariantError,
    LengthMismatchError,
    RadiusExhaustedError,
)
from .field import FieldElement
from .linalg import rank_distance
from .linpoly import BOTTOM, LinPoly, annihilator, compose, left_divide, q_lagrange, right_divide

__all__ = [
    "ModuleElement",
    "InterpolationBasis",
    "EuclidStep",
    "MinimalBasis",
    "Decoded",
    "DecodeResult",
    "interpolation_module",
    "weighted_qdeg",
    "minimal_basis",
    "check_candidate",
    "sweep_size",
    "list_decode",
    "enumerate_distance_t",
    "decode_unique",
]


@dataclass(frozen=True)
class ModuleElement:
    """[f1, f2], read as the bivariate Q(x, y) = f1(x) + f2(y)."""

    f1: LinPoly
    f2: LinPoly

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.f1 - other.f1, self.f2 - other.f2)

    def lmul(self, a: LinPoly) -> "ModuleElement":
        """Left action a o [f1, f2] = [a o f1, a o f2]."""
        return ModuleElement(compose(a, self.f1), compose(a, self.f2))

    def __call__(self, x, y) -> FieldElement:
        return self.f1(x) + self.f2(y)

    def vanishes_at(self, g: Sequence[FieldElement], r: Sequence[FieldElement]) -> bool:
        return all(not self(gi, ri) for gi, ri in zip(g, r))

    def weighted_qdeg(self, k1: int, k2: int):
        return weighted_qdeg(self, k1, k2)

    def __str__(self):
        return f"[{self.f1}, {self.f2}]"


def weighted_qdeg(e: ModuleElement, k1: int, k2: int):
    """max(k1 + qdeg(f1), k2 + qdeg(f2)); BOTTOM for the zero element."""
    return max(k1 + e.f1.qdeg, k2 + e.f2.qdeg)


@dataclass(frozen=True)
class InterpolationBasis:
    pi: LinPoly
    lam: LinPoly

    @property
    def rows(self) -> tuple[ModuleElement, ModuleElement]:
        ctx = self.pi.ctx
        return (
            ModuleElement(self.pi, LinPoly.zero(ctx)),
            ModuleElement(-self.lam, LinPoly.x(ctx)),
        )


def interpolation_module(code: GabidulinCode, r: Sequence[FieldElement]) -> InterpolationBasis:
    """Rows [Pi, 0] and [-Lambda, x] generating the module for r."""
    if len(r) != code.n:
        raise LengthMismatchError(f"received word has length {len(r)}, code length is {code.n}")
    r = [code.ctx(x) for x in r]
    basis = InterpolationBasis(annihilator(code.g), q_lagrange(code.g, r))
    for row in basis.rows:
        if not row.vanishes_at(code.g, r):
            raise DecodingInvariantError("interpolation row does not vanish at (g_i, r_i)")
    return basis


@dataclass(frozen=True)
class EuclidStep:
    """dividend = quotient o divisor + remainder."""

    dividend: LinPoly
    divisor: LinPoly
    quotient: LinPoly
    remainder: LinPoly


@dataclass(frozen=True)
class MinimalBasis:
    g1: ModuleElement
    g2: ModuleElement
    l1: int
    l2: int
    steps: tuple[EuclidStep, ...] = ()


def minimal_basis(basis: InterpolationBasis, k: int) -> MinimalBasis:
    """Reduce the generating rows with the linearized Euclidean algorithm.

    Divides on the left until the newer row carries its (0, k-1)-weighted
    degree in the second component.
    """
    (h0, t0), (h1, t1) = ((row.f1, row.f2) for row in basis.rows)
    steps = []
    while t1.qdeg + k - 1 < h1.qdeg:
        quo, h2 = left_divide(h0, h1)
        t2 = t0 - compose(quo, t1)
        steps.append(EuclidStep(h0, h1, quo, h2))
        h0, t0, h1, t1 = h1, t1, h2, t2
    g1 = ModuleElement(h0, t0)
    g2 = ModuleElement(h1, t1)
    return MinimalBasis(g1, g2, weighted_qdeg(g1, 0, k - 1), weighted_qdeg(g2, 0, k - 1), tuple(steps))


def check_candidate(f: ModuleElement, k: int) -> LinPoly | None:
    """Message polynomial encoded by a candidate [N, -D], or None.

    Accepts when N is right-divisible by -D with a quotient of q-degree < k;
    the message is the negated quotient.
    """
    if not f.f2:
        return None
    quo, rem = right_divide(f.f1, f.f2)
    if rem or quo.qdeg > k - 1:
        return None
    return -quo


@dataclass(frozen=True)
class Decoded:
    message: LinPoly
    codeword: tuple[FieldElement, ...]
    distance: int


@dataclass
class DecodeResult:
    distance: int
    entries: list[Decoded]
    basis: MinimalBasis | None = None
    level: int = 0
    candidates_checked: int = 0
    accepted_pairs: int = 0

    @property
    def messages(self) -> list[LinPoly]:
        return [e.message for e in self.entries]

    @property
    def codewords(self) -> list[tuple[FieldElement, ...]]:
        return [e.codeword for e in self.entries]

    def __len__(self):
        return len(self.entries)


def _a_bound(mb: MinimalBasis, j: int):
    return mb.l2 - mb.l1 + j


def sweep_size(code: GabidulinCode, mb: MinimalBasis, j: int) -> int:
    """Number of (a, b) pairs examined at level j."""
    size = code.ctx.size
    bound = _a_bound(mb, j)
    n_a = size ** (bound + 1) if bound >= 0 else 1
    return n_a * size**j


def _sweep(code: GabidulinCode, mb: MinimalBasis, j: int, budget: int | None):
    """Accepted message codes at level j, plus pair counts."""
    ctx = code.ctx
    kern, T = ctx._k, ctx._T
    k = code.k
    total = sweep_size(code, mb, j)
    if budget is not None and total > budget:
        raise CandidateBudgetError(
            f"level j={j} needs {total} candidate checks, budget is {budget}"
        )
    g1a, g1b = mb.g1.f1.codes, mb.g1.f2.codes
    g2a, g2b = mb.g2.f1.codes, mb.g2.f2.codes
    bound = _a_bound(mb, j)

    a_parts = []
    if bound < 0:
        a_parts.append(((), ()))
    else:
        for a in itertools.product(range(ctx.size), repeat=bound + 1):
            a_parts.append((kern.poly_compose(T, a, g1a), kern.poly_compose(T, a, g1b)))

    found: dict[tuple[int, ...], None] = {}
    accepted = 0
    for low in itertools.product(range(ctx.size), repeat=j):
        b = low + (1,)
        b1 = kern.poly_compose(T, b, g2a)
        b2 = kern.poly_compose(T, b, g2b)
        for a1, a2 in a_parts:
            f2 = kern.poly_add(T, a2, b2)
            if not f2:
                continue
            f1 = kern.poly_add(T, a1, b1)
            quo, rem = kern.poly_right_divmod(T, f1, f2)
            if rem or len(quo) > k:
                continue
            accepted += 1
            msg = tuple(kern.neg(T, c) for c in quo)
            found.setdefault(msg, None)
    return list(found), total, accepted


def _finish(code, r, mb, j, codes_list, checked, accepted) -> DecodeResult:
    ctx = code.ctx
    t = j + mb.l2 - (code.k - 1)
    entries = []
    for codes in codes_list:
        msg = LinPoly._from_codes(ctx, codes)
        c = tuple(code.encode(msg))
        dist = rank_distance(c, r)
        if dist != t:
            raise DecodingInvariantError(
                f"candidate at level {j} has rank distance {dist}, expected {t}"
            )
        entries.append(Decoded(msg, c, dist))
    entries.sort(key=lambda e: code.message_key(e.message))
    return DecodeResult(t, entries, mb, j, checked, accepted)


def list_decode(code: GabidulinCode, r: Sequence[FieldElement], budget: int | None = None) -> DecodeResult:
    """All codewords at minimal rank distance from r.

    ``budget`` caps the number of candidate checks at any single level;
    :class:`CandidateBudgetError` is raised instead of exceeding it.
    """
    r = [code.ctx(x) for x in r]
    mb = minimal_basis(interpolation_module(code, r), code.k)
    max_j = code.n - (mb.l2 - code.k + 1)
    checked = 0
    j = 0
    while True:
        if j > max_j:
            raise RadiusExhaustedError(f"no candidate accepted up to level {max_j}")
        found, n_checked, accepted = _sweep(code, mb, j, budget)
        checked += n_checked
        if found:
            return _finish(code, r, mb, j, found, checked, accepted)
        j += 1


def enumerate_distance_t(
    code: GabidulinCode, r: Sequence[FieldElement], t: int, budget: int | None = None
) -> list[LinPoly]:
    """Messages whose codewords lie at rank distance exactly t from r.

    Above the minimal level an accepted candidate only certifies distance
    <= t (its D need not be the minimal annihilator), so results are filtered.
    """
    r = [code.ctx(x) for x in r]
    mb = minimal_basis(interpolation_module(code, r), code.k)
    j = t - mb.l2 + code.k - 1
    if j < 0 or t > code.n:
        return []
    found, _, _ = _sweep(code, mb, j, budget)
    out = []
    for codes in found:
        msg = LinPoly._from_codes(code.ctx, codes)
        if rank_distance(code.encode(msg), r) == t:
            out.append(msg)
    return sorted(out, key=code.message_key)


def decode_unique(code: GabidulinCode, r: Sequence[FieldElement], budget: int | None = None):
    """(message, codeword) when r has a single closest codeword at distance < d/2.

    Raises :class:`AmbiguousDecodingError` (carrying the full list) otherwise.
    """
    res = list_decode(code, r, budget)
    if len(res.entries) == 1 and 2 * res.distance < code.d:
        e = res.entries[0]
        return e.message, list(e.codeword)
    raise AmbiguousDecodingError(
        f"{len(res.entries)} closest codeword(s) at rank distance {res.distance} "
        f"(unique decoding needs distance < {code.d}/2)",
        res,
    )
