"""Shared generators for randomized tests."""

import itertools

from gabidulin.decoder import ModuleElement
from gabidulin.linpoly import LinPoly


def rand_elem(F, rng):
    return F.from_code(int(rng.integers(0, F.size)))


def rand_poly(F, rng, max_qdeg, exact=False):
    """Random polynomial of q-degree <= max_qdeg (== if exact)."""
    codes = [int(c) for c in rng.integers(0, F.size, size=max_qdeg + 1)]
    if exact and codes[-1] == 0:
        codes[-1] = int(rng.integers(1, F.size))
    return LinPoly(F, [F.from_code(c) for c in codes])


def span(F, basis):
    """All F_q-combinations of basis, by enumeration."""
    out = set()
    for coefs in itertools.product(range(F.q), repeat=len(basis)):
        acc = F.zero
        for c, b in zip(coefs, basis):
            acc = acc + c * b
        out.add(acc.value)
    return out


def reduce_in_module(e, mb, k):
    """Reduce e against the basis (g1 led by its first component, g2 by its
    second, ties going to the second).  Returns the remainder, which is zero
    exactly when e lies in the module spanned by g1 and g2."""
    ctx = e.f1.ctx
    d1 = mb.g1.f1.qdeg
    d2 = mb.g2.f2.qdeg
    while e.f1 or e.f2:
        w1, w2 = e.f1.qdeg, e.f2.qdeg + k - 1
        if w2 >= w1:
            s = e.f2.qdeg - d2
            if s < 0:
                return e
            lead = mb.g2.f2[d2].frobenius(s)
            a = LinPoly.monomial(ctx, s, e.f2[e.f2.qdeg] / lead)
            e = e - mb.g2.lmul(a)
        else:
            s = e.f1.qdeg - d1
            if s < 0:
                return e
            lead = mb.g1.f1[d1].frobenius(s)
            a = LinPoly.monomial(ctx, s, e.f1[e.f1.qdeg] / lead)
            e = e - mb.g1.lmul(a)
    return ModuleElement(e.f1, e.f2)


def vanishing_pairs(code, r, max1, max2):
    """Every [f1, f2] with qdeg f1 <= max1, qdeg f2 <= max2 vanishing at (g_i, r_i).

    Groups f1 by its evaluation vector so the pair search is a lookup."""
    F = code.ctx
    by_eval = {}
    for c in itertools.product(range(F.size), repeat=max1 + 1):
        f1 = LinPoly(F, [F.from_code(x) for x in c])
        by_eval.setdefault(tuple(v.value for v in f1.evaluate_many(code.g)), []).append(f1)
    for c in itertools.product(range(F.size), repeat=max2 + 1):
        f2 = LinPoly(F, [F.from_code(x) for x in c])
        want = tuple((-v).value for v in f2.evaluate_many(r))
        for f1 in by_eval.get(want, []):
            yield ModuleElement(f1, f2)
