"""Worked example: the [3, 2] Gabidulin code over F_8 with alpha^3 = alpha + 1,
g = (1, alpha, alpha^2) and received word r = (alpha + 1, 0, alpha)."""

from __future__ import annotations

from .code import GabidulinCode
from .decoder import ModuleElement, check_candidate, interpolation_module, list_decode, minimal_basis
from .field import FieldCtx
from .linpoly import LinPoly
from .oracle import oracle_closest


def example15_code(backend: str | None = None) -> GabidulinCode:
    F = FieldCtx(2, 3, [1, 1, 0, 1], backend=backend)
    a = F.alpha
    return GabidulinCode(F, 3, 2, (F.one, a, a**2))


def example15_word(code: GabidulinCode):
    F = code.ctx
    a = F.alpha
    return [a + 1, F.zero, a]


def run_demo(backend: str | None = None) -> tuple[list[str], bool]:
    """Transcript lines and whether every pinned value matched."""
    code = example15_code(backend)
    F = code.ctx
    a = F.alpha
    r = example15_word(code)
    lines: list[str] = []
    ok = True

    def check(label, got, want):
        nonlocal ok
        good = got == want
        ok &= good
        lines.append(f"  [{'ok' if good else 'MISMATCH'}] {label}: {got}" + ("" if good else f"  (expected {want})"))

    P = lambda coeffs: LinPoly(F, coeffs)  # noqa: E731
    lines.append(f"field: {F}")
    lines.append(f"code: n={code.n}, k={code.k}, g=({', '.join(map(str, code.g))}), d={code.d}")
    lines.append(f"received word r = ({', '.join(x.poly_str() for x in r)})")

    basis = interpolation_module(code, r)
    lines.append("interpolation module rows [Pi, 0], [-Lambda, x]:")
    check("Pi(x)", str(basis.pi), str(P([1, 0, 0, 1])))
    check("Lambda(x)", str(basis.lam), str(P([a**5, 0, a**2])))

    mb = minimal_basis(basis, code.k)
    lines.append("linearized Euclidean algorithm:")
    for s in mb.steps:
        lines.append(f"  {s.dividend} = ({s.quotient}) o ({s.divisor}) + {s.remainder}")
    check("Euclid steps", len(mb.steps), 1)
    if mb.steps:
        check("quotient", str(mb.steps[0].quotient), str(P([0, a**3])))
        check("remainder", str(mb.steps[0].remainder), str(P([1, a**6])))
    lines.append("minimal basis w.r.t. the (0,1)-weighted q-degree:")
    check("g1", str(mb.g1), str(ModuleElement(P([a**5, 0, a**2]), P([1]))))
    check("g2", str(mb.g2), str(ModuleElement(P([1, a**6]), P([0, a**3]))))
    check("(l1, l2)", (mb.l1, mb.l2), (2, 2))

    lines.append("candidate sweep j=0: a = a0 x, b = x")
    for a0 in F.elements():
        f = mb.g1.lmul(P([a0])) + mb.g2
        msg = check_candidate(f, code.k)
        verdict = f"message {msg}" if msg is not None else "not divisible"
        lines.append(f"  a0 = {str(a0):>3}: [{f.f1}, {f.f2}] -> {verdict}")

    res = list_decode(code, r)
    orc = oracle_closest(code, r)
    lines.append(f"closest codewords at rank distance {res.distance}:")
    for e in res.entries:
        lines.append(f"  {str(e.message):<16} -> ({', '.join(map(str, e.codeword))})")
    check("distance", res.distance, 1)
    check("decoded set equals brute force", res.messages == orc.messages, True)
    check("contains alpha x^2 + x", P([1, a]) in res.messages, True)
    lines.append("PASS" if ok else "FAIL")
    return lines, ok
