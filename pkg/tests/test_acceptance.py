"""The eight acceptance criteria.  Each test appends one PASS/FAIL line to the
summary printed at the end of the pytest run."""

import itertools
import time
from contextlib import contextmanager

import numpy as np

from gabidulin.code import GabidulinCode, error_span_poly
from gabidulin.decoder import interpolation_module, list_decode, minimal_basis
from gabidulin.field import FieldCtx
from gabidulin.linalg import rank_distance, rank_q_vector, span_basis
from gabidulin.linpoly import LinPoly, annihilator, compose, left_divide, q_lagrange, right_divide
from gabidulin.oracle import oracle_closest
from tests import conftest
from tests.helpers import rand_elem, rand_poly, reduce_in_module, span, vanishing_pairs


@contextmanager
def criterion(num, title, limit=None):
    """Time the block, record a summary line and enforce the runtime limit."""
    t0 = time.perf_counter()
    ok = False
    note = ""
    try:
        yield
        ok = True
    except AssertionError as exc:
        note = f" ({str(exc).splitlines()[0][:80]})" if str(exc) else ""
        raise
    finally:
        dt = time.perf_counter() - t0
        if ok and limit is not None and dt >= limit:
            ok = False
            note = f" (runtime {dt:.3f}s exceeds {limit}s)"
        limit_s = f" < {limit}s" if limit is not None else ""
        conftest.ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {num}. {title}  [{dt:.3f}s{limit_s}]{note}")
    assert dt < limit if limit is not None else True, f"runtime {dt:.3f}s exceeds {limit}s"


def example_setup():
    F = FieldCtx(2, 3, [1, 1, 0, 1])
    a = F.alpha
    code = GabidulinCode(F, 3, 2, (F.one, a, a**2))
    return F, a, code, [a + 1, F.zero, a]


def test_1_example_golden():
    F, a, code, r = example_setup()
    P = lambda c: LinPoly(F, c)  # noqa: E731
    with criterion(1, "worked example: Pi, Lambda, Euclid step, minimal basis", limit=0.1):
        basis = interpolation_module(code, r)
        mb = minimal_basis(basis, code.k)
        assert basis.pi == P([1, 0, 0, 1])
        assert basis.lam == P([a**5, 0, a**2])
        assert len(mb.steps) == 1
        assert mb.steps[0].quotient == P([0, a**3])
        assert mb.steps[0].remainder == P([1, a**6])
        assert (mb.g1.f1, mb.g1.f2) == (P([a**5, 0, a**2]), P([1]))
        assert (mb.g2.f1, mb.g2.f2) == (P([1, a**6]), P([0, a**3]))
        assert (mb.l1, mb.l2) == (2, 2)


def test_2_example_decoding():
    F, a, code, r = example_setup()
    with criterion(2, "worked example: decoded set equals brute force", limit=1.0):
        res = list_decode(code, r)
        orc = oracle_closest(code, r)
        assert res.distance == orc.distance == 1
        assert set(res.messages) == set(orc.messages)
        f = LinPoly(F, [F.one, a])
        assert f in res.messages
        assert res.codewords[res.messages.index(f)] == (a**3, F.one, a**3)


def test_3_exhaustive_oracle_equivalence():
    code = GabidulinCode(FieldCtx(2, 3), 3, 2)
    F = code.ctx
    with criterion(3, "all 512 received words over F_8: decoder set == oracle set", limit=30.0):
        mismatches = []
        for codes in itertools.product(range(F.size), repeat=3):
            r = [F.from_code(c) for c in codes]
            res, orc = list_decode(code, r), oracle_closest(code, r)
            if res.distance != orc.distance or set(res.messages) != set(orc.messages):
                mismatches.append(codes)
        assert not mismatches, f"{len(mismatches)} mismatches, first {mismatches[0]}"


def test_4_unique_decoding():
    rng = np.random.default_rng(4)
    codes = {n: FieldCtx(2, n) for n in (4, 5, 6)}
    with criterion(4, "500 trials within the unique radius decode to the sent message", limit=60.0):
        failures = 0
        for _ in range(500):
            n = int(rng.choice([4, 5, 6]))
            code = GabidulinCode(codes[n], n, int(rng.integers(1, n)))
            t = int(rng.integers(0, code.unique_radius + 1))
            f = code.random_message(rng)
            r = code.add(code.encode(f), code.random_error(t, rng))
            res = list_decode(code, r)
            if res.messages != [f] or res.distance != t:
                failures += 1
        assert failures == 0, f"{failures} failures"


def test_5_beyond_unique_radius():
    rng = np.random.default_rng(5)
    code = GabidulinCode(FieldCtx(2, 4), 4, 2)
    with criterion(5, "100 rank-2 errors on a d=3 code: decoder set == oracle set", limit=120.0):
        failures = 0
        for _ in range(100):
            f = code.random_message(rng)
            c = tuple(code.encode(f))
            r = code.add(c, code.random_error(2, rng))
            res, orc = list_decode(code, r), oracle_closest(code, r)
            if res.distance != orc.distance or set(res.messages) != set(orc.messages):
                failures += 1
            elif f in orc.messages and c not in res.codewords:
                failures += 1
        assert failures == 0, f"{failures} failures"


def test_6_ring_operations():
    rng = np.random.default_rng(6)
    fields = [FieldCtx(q, m) for q, m in [(2, 3), (2, 4), (2, 5), (2, 9), (3, 2), (3, 3), (5, 2), (7, 3)]]
    with criterion(6, "1000 instances each of the linearized polynomial ring operations"):
        failures = {"left": 0, "right": 0, "degree": 0, "eval": 0, "annihilator": 0, "lagrange": 0}
        for i in range(1000):
            F = fields[i % len(fields)]
            g = rand_poly(F, rng, int(rng.integers(0, 4)), exact=True)
            h = rand_poly(F, rng, int(rng.integers(0, 4)))
            rem = rand_poly(F, rng, g.qdeg - 1) if g.qdeg > 0 else LinPoly.zero(F)
            # round trip and uniqueness: the planted (quotient, remainder) comes back
            if left_divide(compose(h, g) + rem, g) != (h, rem):
                failures["left"] += 1
            if right_divide(compose(g, h) + rem, g) != (h, rem):
                failures["right"] += 1
            f = rand_poly(F, rng, int(rng.integers(0, 4)), exact=True)
            if compose(f, g).qdeg != f.qdeg + g.qdeg:
                failures["degree"] += 1
            x = rand_elem(F, rng)
            if compose(f, g)(x) != f(g(x)):
                failures["eval"] += 1
            # annihilator, checked on every field element
            basis = span_basis([rand_elem(F, rng) for _ in range(int(rng.integers(0, F.m + 1)))])
            A = annihilator(basis, F)
            U = span(F, basis)
            if A.qdeg != len(basis) or any((A(y) == 0) != (y.value in U) for y in F.elements()):
                failures["annihilator"] += 1
            # interpolation inverts evaluation for qdeg < n
            n = int(rng.integers(1, F.m + 1))
            pts = span_basis([rand_elem(F, rng) for _ in range(n + 2)])[:n]
            if len(pts) == n:
                p = rand_poly(F, rng, n - 1)
                if q_lagrange(pts, p.evaluate_many(pts)) != p:
                    failures["lagrange"] += 1
        bad = {k: v for k, v in failures.items() if v}
        assert not bad, f"failures {bad}"


def test_7_error_span_polynomial():
    rng = np.random.default_rng(7)
    codes = [GabidulinCode(FieldCtx(q, m), m, k) for q, m, k in [(2, 3, 1), (2, 5, 2), (2, 6, 3), (3, 3, 2), (5, 2, 1)]]
    with criterion(7, "500 error span polynomials: degree, monic, D(r)=D(c), uniqueness"):
        failures = 0
        for i in range(500):
            code = codes[i % len(codes)]
            F = code.ctx
            t = int(rng.integers(0, code.n + 1))
            c = code.encode(code.random_message(rng))
            e = code.random_error(t, rng)
            r = code.add(c, e)
            D = error_span_poly(e, F)
            # an independent basis of the same span: shuffled, recombined
            perm = rng.permutation(code.n)
            mixed = [e[j] for j in perm]
            mixed = [x + y for x, y in zip(mixed, mixed[1:] + mixed[:1])] + mixed[:1]
            other = annihilator(span_basis(mixed), F)
            roots = {y.value for y in F.elements() if D(y) == 0}
            ok = (
                D.qdeg == t == rank_q_vector(e)
                and D.is_monic()
                and D.evaluate_many(r) == D.evaluate_many(c)
                and D == other
                and roots == span(F, span_basis(e))
            )
            failures += not ok
        assert failures == 0, f"{failures} failures"


def test_8_module_membership():
    rng = np.random.default_rng(8)
    code = GabidulinCode(FieldCtx(2, 4), 4, 2)
    F = code.ctx
    small = GabidulinCode(FieldCtx(2, 3), 3, 2)
    with criterion(8, "500 basis combinations vanish; converse exhaustive over F_8"):
        failures = 0
        for _ in range(500):
            r = [rand_elem(F, rng) for _ in range(code.n)]
            mb = minimal_basis(interpolation_module(code, r), code.k)
            a = rand_poly(F, rng, int(rng.integers(0, 4)))
            b = rand_poly(F, rng, int(rng.integers(0, 4)))
            failures += not (mb.g1.lmul(a) + mb.g2.lmul(b)).vanishes_at(code.g, r)
        # every vanishing pair with qdeg f1 <= 3, qdeg f2 <= 1 reduces to zero
        checked = 0
        for _ in range(5):
            r = [rand_elem(small.ctx, rng) for _ in range(small.n)]
            mb = minimal_basis(interpolation_module(small, r), small.k)
            for e in vanishing_pairs(small, r, 3, 1):
                rem = reduce_in_module(e, mb, small.k)
                failures += bool(rem.f1 or rem.f2)
                checked += 1
        assert checked > 0
        assert failures == 0, f"{failures} failures"
