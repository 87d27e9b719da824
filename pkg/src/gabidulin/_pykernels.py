"""Pure-Python arithmetic kernels.

Field elements are integer codes: the element sum(v_i * alpha**i) is stored
as sum(v_i * q**i), so digit i of the base-q expansion is the coefficient
of alpha**i.  Multiplication goes through exponent/logarithm tables built
from a primitive element.

Linearized polynomials are plain lists of codes, lowest q-degree first, with
no trailing zeros (``[]`` is the zero polynomial).

``_ckernels`` implements the same functions with the same signatures; keep
the two in sync.
"""

BACKEND = "python"


class Tables:
    __slots__ = ("q", "m", "size", "order", "exp", "log")

    def __init__(self, q, m, exp, log):
        self.q = q
        self.m = m
        self.size = q**m
        self.order = self.size - 1
        self.exp = list(exp)
        self.log = list(log)


def make_tables(q, m, exp, log):
    return Tables(q, m, exp, log)


# -- elements ---------------------------------------------------------------

def add(T, a, b):
    q = T.q
    if q == 2:
        return a ^ b
    res = 0
    mult = 1
    while a or b:
        res += ((a % q + b % q) % q) * mult
        a //= q
        b //= q
        mult *= q
    return res


def neg(T, a):
    q = T.q
    if q == 2:
        return a
    res = 0
    mult = 1
    while a:
        res += ((q - a % q) % q) * mult
        a //= q
        mult *= q
    return res


def sub(T, a, b):
    if T.q == 2:
        return a ^ b
    return add(T, a, neg(T, b))


def mul(T, a, b):
    if a == 0 or b == 0:
        return 0
    return T.exp[(T.log[a] + T.log[b]) % T.order]


def inv(T, a):
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return T.exp[(-T.log[a]) % T.order]


def div(T, a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if a == 0:
        return 0
    return T.exp[(T.log[a] - T.log[b]) % T.order]


def frob(T, a, i):
    """a ** (q ** i); negative i gives the inverse automorphism."""
    if a == 0:
        return 0
    e = pow(T.q, i % T.m, T.order)
    return T.exp[(T.log[a] * e) % T.order]


# -- linearized polynomials -------------------------------------------------

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(T, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = add(T, out[i], c)
    return _trim(out)


def poly_sub(T, f, g):
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = sub(T, out[i], c)
    return _trim(out)


def poly_scale(T, c, f):
    if c == 0:
        return []
    return [mul(T, c, a) for a in f]


def poly_eval(T, f, x):
    acc = 0
    y = x
    for i, a in enumerate(f):
        if i:
            y = frob(T, y, 1)
        if a:
            acc = add(T, acc, mul(T, a, y))
    return acc


def poly_compose(T, f, g):
    """Coefficients of f(g(x)): sum over i+j=k of f_i * g_j^{[i]}."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = add(T, out[i + j], mul(T, a, frob(T, b, i)))
    return _trim(out)


def poly_left_divmod(T, f, g):
    """(h, r) with f = h o g + r and qdeg(r) < qdeg(g)."""
    if not g:
        raise ZeroDivisionError("symbolic division by the zero polynomial")
    s = len(g) - 1
    r = list(f)
    if len(r) <= s:
        return [], r
    h = [0] * (len(r) - s)
    for t in range(len(h) - 1, -1, -1):
        c = r[t + s]
        if c == 0:
            continue
        ht = div(T, c, frob(T, g[s], t))
        h[t] = ht
        for j, b in enumerate(g):
            if b:
                r[t + j] = sub(T, r[t + j], mul(T, ht, frob(T, b, t)))
    return _trim(h), _trim(r[:s])


def poly_right_divmod(T, f, g):
    """(m, r) with f = g o m + r and qdeg(r) < qdeg(g)."""
    if not g:
        raise ZeroDivisionError("symbolic division by the zero polynomial")
    s = len(g) - 1
    r = list(f)
    if len(r) <= s:
        return [], r
    m = [0] * (len(r) - s)
    for t in range(len(m) - 1, -1, -1):
        c = r[t + s]
        if c == 0:
            continue
        mt = frob(T, div(T, c, g[s]), -s)
        m[t] = mt
        for i, b in enumerate(g):
            if b:
                r[t + i] = sub(T, r[t + i], mul(T, b, frob(T, mt, i)))
    return _trim(m), _trim(r[:s])


# -- base-field rank --------------------------------------------------------

def rank_elems(T, elems):
    """Rank over F_q of the digit vectors of ``elems``."""
    q = T.q
    if q == 2:
        basis = {}  # leading bit -> reduced vector
        for v in elems:
            while v:
                top = v.bit_length() - 1
                w = basis.get(top)
                if w is None:
                    basis[top] = v
                    break
                v ^= w
        return len(basis)
    m = T.m
    rows = []
    for v in elems:
        digits = []
        for _ in range(m):
            digits.append(v % q)
            v //= q
        rows.append(digits)
    return rank_rows(rows, q)


def rank_rows(rows, q):
    """Rank of an integer matrix reduced modulo the prime q."""
    rows = [[x % q for x in row] for row in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pinv = pow(prow[col], q - 2, q)
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = (rows[i][col] * pinv) % q
                rows[i] = [(x - c * y) % q for x, y in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank
