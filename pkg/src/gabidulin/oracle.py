"""Exhaustive reference decoder.

Walks every message of the code, encodes it through the generator matrix and
measures the rank distance to the received word.  Shares only the field and
encoding layers with :mod:`gabidulin.decoder`, so agreement between the two
is meaningful.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .code import GabidulinCode
from .errors import LengthMismatchError, TooLargeError
from .field import FieldElement
from .linpoly import LinPoly

__all__ = ["OracleResult", "oracle_closest", "oracle_within", "DEFAULT_BUDGET"]

DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class OracleEntry:
    message: LinPoly
    codeword: tuple[FieldElement, ...]
    distance: int


@dataclass
class OracleResult:
    distance: int
    entries: list[OracleEntry]
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def messages(self) -> list[LinPoly]:
        return [e.message for e in self.entries]

    @property
    def codewords(self) -> list[tuple[FieldElement, ...]]:
        return [e.codeword for e in self.entries]


def _all_distances(code: GabidulinCode, r: Sequence[FieldElement], budget: int):
    """Yield (message codes, codeword codes, distance) for every message."""
    ctx = code.ctx
    if len(r) != code.n:
        raise LengthMismatchError(f"received word has length {len(r)}, code length is {code.n}")
    total = ctx.size**code.k
    if total > budget:
        raise TooLargeError(f"{total} messages exceed the oracle budget {budget}")
    kern, T = ctx._k, ctx._T
    G = [[x.value for x in row] for row in code.generator_matrix()]
    rv = [ctx(x).value for x in r]
    n = code.n
    # messages in lexicographic order of (a_0, ..., a_{k-1}); a_0 varies slowest
    for msg in itertools.product(range(ctx.size), repeat=code.k):
        c = [0] * n
        for coef, row in zip(msg, G):
            if coef:
                for i in range(n):
                    c[i] = kern.add(T, c[i], kern.mul(T, coef, row[i]))
        diff = [kern.sub(T, ci, ri) for ci, ri in zip(c, rv)]
        yield msg, c, kern.rank_elems(T, diff)


def _entry(code: GabidulinCode, msg, c, dist) -> OracleEntry:
    ctx = code.ctx
    return OracleEntry(
        LinPoly(ctx, [ctx.from_code(x) for x in msg]),
        tuple(ctx.from_code(x) for x in c),
        dist,
    )


def oracle_closest(code: GabidulinCode, r: Sequence[FieldElement], budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Minimal rank distance to the code and every codeword attaining it."""
    best = None
    closest = []
    hist: Counter = Counter()
    for msg, c, dist in _all_distances(code, r, budget):
        hist[dist] += 1
        if best is None or dist < best:
            best, closest = dist, [(msg, c)]
        elif dist == best:
            closest.append((msg, c))
    entries = [_entry(code, msg, c, best) for msg, c in closest]
    entries.sort(key=lambda e: code.message_key(e.message))
    return OracleResult(best, entries, dict(sorted(hist.items())))


def oracle_within(code: GabidulinCode, r: Sequence[FieldElement], t: int, budget: int = DEFAULT_BUDGET) -> list[OracleEntry]:
    """Every codeword within rank distance t, annotated with its distance."""
    out = [_entry(code, msg, c, d) for msg, c, d in _all_distances(code, r, budget) if d <= t]
    out.sort(key=lambda e: (e.distance, code.message_key(e.message)))
    return out
