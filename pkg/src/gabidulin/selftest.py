"""Quick randomized property checks runnable without pytest."""

from __future__ import annotations

import itertools
import time
from typing import Callable

import numpy as np

from .code import GabidulinCode, error_span_poly
from .decoder import interpolation_module, list_decode, minimal_basis
from .field import FieldCtx
from .linalg import rank_distance, span_basis
from .linpoly import LinPoly, annihilator, compose, left_divide, q_lagrange, right_divide
from .oracle import oracle_closest


def _rand_poly(ctx, rng, max_qdeg):
    return LinPoly(ctx, [ctx.from_code(int(c)) for c in rng.integers(0, ctx.size, size=max_qdeg + 1)])


def check_field_axioms(rng, trials):
    for q, m in [(2, 3), (2, 5), (3, 2), (5, 2)]:
        F = FieldCtx(q, m)
        for x in F.nonzero_elements():
            if x * x.inv() != F.one or x.frobenius(m) != x:
                return False
        for _ in range(trials):
            x, y = (F.from_code(int(c)) for c in rng.integers(0, F.size, 2))
            if (x + y).frobenius(1) != x.frobenius(1) + y.frobenius(1):
                return False
    return True


def check_ring_ops(rng, trials):
    F = FieldCtx(2, 5)
    for _ in range(trials):
        f, g, h = (_rand_poly(F, rng, int(rng.integers(0, 4))) for _ in range(3))
        if not g:
            continue
        rem0 = f if f.qdeg < g.qdeg else LinPoly.zero(F)
        hq, rem = left_divide(compose(h, g) + rem0, g)
        if hq != h or rem != rem0:
            return False
        mq, rem = right_divide(compose(g, h), g)
        if mq != h or rem:
            return False
        x = F.from_code(int(rng.integers(0, F.size)))
        if compose(f, g)(x) != f(g(x)):
            return False
    return True


def check_annihilator(rng, trials):
    F = FieldCtx(2, 4)
    for _ in range(trials):
        basis = span_basis([F.from_code(int(c)) for c in rng.integers(0, F.size, 3)])
        P = annihilator(basis, F)
        span = {sum((c * b for c, b in zip(coefs, basis)), F.zero) for coefs in itertools.product(range(2), repeat=len(basis))}
        if any((P(x) == 0) != (x in span) for x in F.elements()):
            return False
    return True


def check_lagrange(rng, trials):
    F = FieldCtx(2, 4)
    code = GabidulinCode(F, 4, 4)
    for _ in range(trials):
        f = _rand_poly(F, rng, 3)
        if q_lagrange(code.g, f.evaluate_many(code.g)) != f:
            return False
    return True


def check_error_span(rng, trials):
    F = FieldCtx(2, 5)
    code = GabidulinCode(F, 5, 2)
    for _ in range(trials):
        t = int(rng.integers(0, 6))
        c = code.encode(code.random_message(rng))
        e = code.random_error(t, rng)
        D = error_span_poly(e, F)
        r = code.add(c, e)
        if D.qdeg != t or not D.is_monic() or D.evaluate_many(r) != D.evaluate_many(c):
            return False
    return True


def check_module_membership(rng, trials):
    F = FieldCtx(2, 4)
    code = GabidulinCode(F, 4, 2)
    for _ in range(trials):
        r = [F.from_code(int(c)) for c in rng.integers(0, F.size, 4)]
        mb = minimal_basis(interpolation_module(code, r), code.k)
        a, b = _rand_poly(F, rng, 2), _rand_poly(F, rng, 2)
        if not (mb.g1.lmul(a) + mb.g2.lmul(b)).vanishes_at(code.g, r):
            return False
    return True


def check_exhaustive_f8(rng, trials):
    code = GabidulinCode(FieldCtx(2, 3), 3, 2)
    F = code.ctx
    for codes in itertools.product(range(F.size), repeat=3):
        r = [F.from_code(c) for c in codes]
        if list_decode(code, r).messages != oracle_closest(code, r).messages:
            return False
    return True


def check_unique_decoding(rng, trials):
    for _ in range(trials):
        n = int(rng.choice([4, 5, 6]))
        code = GabidulinCode(FieldCtx(2, n), n, int(rng.integers(1, n)))
        t = int(rng.integers(0, code.unique_radius + 1))
        f = code.random_message(rng)
        r = code.add(code.encode(f), code.random_error(t, rng))
        res = list_decode(code, r)
        if res.messages != [f] or res.distance != t or rank_distance(res.codewords[0], r) != t:
            return False
    return True


CHECKS: list[tuple[str, Callable]] = [
    ("field axioms and Frobenius", check_field_axioms),
    ("division round-trips and composition", check_ring_ops),
    ("annihilators vanish exactly on the span", check_annihilator),
    ("q-Lagrange interpolation inverts evaluation", check_lagrange),
    ("error span polynomial", check_error_span),
    ("module membership of basis combinations", check_module_membership),
    ("list decoder equals brute force on all 512 words", check_exhaustive_f8),
    ("unique decoding within radius", check_unique_decoding),
]


def run(trials: int = 100, seed: int = 0, echo=print) -> bool:
    rng = np.random.default_rng(seed)
    all_ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            ok = fn(rng, trials)
            note = ""
        except Exception as exc:  # report and keep going
            ok, note = False, f" ({type(exc).__name__}: {exc})"
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {name}  [{time.perf_counter() - t0:.2f}s]{note}")
    return all_ok
