# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels; same surface as ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

ctypedef long long i64


cdef class Tables:
    cdef public long q, m, size, order
    cdef i64* _exp
    cdef i64* _log
    cdef i64* _powq  # q**i mod order, i < m

    def __cinit__(self, long q, long m, exp, log):
        cdef long i
        self.q = q
        self.m = m
        self.size = q ** m
        self.order = self.size - 1
        self._exp = <i64*> malloc(max(self.order, 1) * sizeof(i64))
        self._log = <i64*> malloc(self.size * sizeof(i64))
        self._powq = <i64*> malloc(m * sizeof(i64))
        if not self._exp or not self._log or not self._powq:
            raise MemoryError()
        for i in range(self.order):
            self._exp[i] = exp[i]
        for i in range(self.size):
            self._log[i] = log[i]
        for i in range(m):
            self._powq[i] = pow(q, i, self.order) if self.order > 1 else 0

    def __dealloc__(self):
        free(self._exp)
        free(self._log)
        free(self._powq)


def make_tables(q, m, exp, log):
    return Tables(q, m, exp, log)


# -- element primitives -----------------------------------------------------

cdef inline i64 c_add(Tables T, i64 a, i64 b) noexcept:
    cdef i64 q = T.q, res = 0, mult = 1
    if q == 2:
        return a ^ b
    while a or b:
        res += ((a % q + b % q) % q) * mult
        a //= q
        b //= q
        mult *= q
    return res


cdef inline i64 c_neg(Tables T, i64 a) noexcept:
    cdef i64 q = T.q, res = 0, mult = 1
    if q == 2:
        return a
    while a:
        res += ((q - a % q) % q) * mult
        a //= q
        mult *= q
    return res


cdef inline i64 c_sub(Tables T, i64 a, i64 b) noexcept:
    if T.q == 2:
        return a ^ b
    return c_add(T, a, c_neg(T, b))


cdef inline i64 c_mul(Tables T, i64 a, i64 b) noexcept:
    if a == 0 or b == 0:
        return 0
    return T._exp[(T._log[a] + T._log[b]) % T.order]


cdef inline i64 c_div(Tables T, i64 a, i64 b) noexcept:
    # caller guarantees b != 0
    if a == 0:
        return 0
    return T._exp[((T._log[a] - T._log[b]) % T.order + T.order) % T.order]


cdef inline i64 c_frob(Tables T, i64 a, i64 i) noexcept:
    cdef i64 k
    if a == 0 or T.order == 1:
        return a
    k = ((i % T.m) + T.m) % T.m
    return T._exp[(T._log[a] * T._powq[k]) % T.order]


cpdef i64 add(Tables T, i64 a, i64 b):
    return c_add(T, a, b)


cpdef i64 neg(Tables T, i64 a):
    return c_neg(T, a)


cpdef i64 sub(Tables T, i64 a, i64 b):
    return c_sub(T, a, b)


cpdef i64 mul(Tables T, i64 a, i64 b):
    return c_mul(T, a, b)


cpdef i64 inv(Tables T, i64 a) except? -1:
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return T._exp[(T.order - T._log[a]) % T.order]


cpdef i64 div(Tables T, i64 a, i64 b) except? -1:
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return c_div(T, a, b)


cpdef i64 frob(Tables T, i64 a, i64 i):
    return c_frob(T, a, i)


# -- linearized polynomials -------------------------------------------------

cdef list _trimmed(i64* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return [buf[i] for i in range(n)]


cdef i64* _load(object f, Py_ssize_t n) except NULL:
    cdef i64* buf = <i64*> malloc(max(n, 1) * sizeof(i64))
    cdef Py_ssize_t i
    cdef Py_ssize_t lf = len(f)
    if not buf:
        raise MemoryError()
    for i in range(n):
        buf[i] = f[i] if i < lf else 0
    return buf


def poly_add(Tables T, f, g):
    cdef Py_ssize_t n = max(len(f), len(g)), i, lg = len(g)
    cdef i64* buf = _load(f, n)
    try:
        for i in range(lg):
            buf[i] = c_add(T, buf[i], g[i])
        return _trimmed(buf, n)
    finally:
        free(buf)


def poly_sub(Tables T, f, g):
    cdef Py_ssize_t n = max(len(f), len(g)), i, lg = len(g)
    cdef i64* buf = _load(f, n)
    try:
        for i in range(lg):
            buf[i] = c_sub(T, buf[i], g[i])
        return _trimmed(buf, n)
    finally:
        free(buf)


def poly_scale(Tables T, i64 c, f):
    if c == 0:
        return []
    return [c_mul(T, c, a) for a in f]


def poly_eval(Tables T, f, i64 x):
    cdef i64 acc = 0, y = x, a
    cdef Py_ssize_t i, n = len(f)
    for i in range(n):
        if i:
            y = c_frob(T, y, 1)
        a = f[i]
        if a:
            acc = c_add(T, acc, c_mul(T, a, y))
    return acc


def poly_compose(Tables T, f, g):
    cdef Py_ssize_t lf = len(f), lg = len(g), i, j, n
    cdef i64 a, b
    cdef i64* fb
    cdef i64* gb
    cdef i64* out
    if lf == 0 or lg == 0:
        return []
    n = lf + lg - 1
    fb = _load(f, lf)
    gb = _load(g, lg)
    out = _load((), n)
    try:
        for i in range(lf):
            a = fb[i]
            if a == 0:
                continue
            for j in range(lg):
                b = gb[j]
                if b:
                    out[i + j] = c_add(T, out[i + j], c_mul(T, a, c_frob(T, b, i)))
        return _trimmed(out, n)
    finally:
        free(fb)
        free(gb)
        free(out)


def poly_left_divmod(Tables T, f, g):
    cdef Py_ssize_t lg = len(g), lf = len(f), s, t, j, nh
    cdef i64 c, ht, lead
    cdef i64* gb
    cdef i64* r
    cdef i64* h
    if lg == 0:
        raise ZeroDivisionError("symbolic division by the zero polynomial")
    s = lg - 1
    if lf <= s:
        return [], list(f)
    nh = lf - s
    gb = _load(g, lg)
    r = _load(f, lf)
    h = _load((), nh)
    try:
        for t in range(nh - 1, -1, -1):
            c = r[t + s]
            if c == 0:
                continue
            lead = c_frob(T, gb[s], t)
            ht = c_div(T, c, lead)
            h[t] = ht
            for j in range(lg):
                if gb[j]:
                    r[t + j] = c_sub(T, r[t + j], c_mul(T, ht, c_frob(T, gb[j], t)))
        return _trimmed(h, nh), _trimmed(r, s)
    finally:
        free(gb)
        free(r)
        free(h)


def poly_right_divmod(Tables T, f, g):
    cdef Py_ssize_t lg = len(g), lf = len(f), s, t, i, nm
    cdef i64 c, mt
    cdef i64* gb
    cdef i64* r
    cdef i64* m
    if lg == 0:
        raise ZeroDivisionError("symbolic division by the zero polynomial")
    s = lg - 1
    if lf <= s:
        return [], list(f)
    nm = lf - s
    gb = _load(g, lg)
    r = _load(f, lf)
    m = _load((), nm)
    try:
        for t in range(nm - 1, -1, -1):
            c = r[t + s]
            if c == 0:
                continue
            mt = c_frob(T, c_div(T, c, gb[s]), -s)
            m[t] = mt
            for i in range(lg):
                if gb[i]:
                    r[t + i] = c_sub(T, r[t + i], c_mul(T, gb[i], c_frob(T, mt, i)))
        return _trimmed(m, nm), _trimmed(r, s)
    finally:
        free(gb)
        free(r)
        free(m)


# -- base-field rank --------------------------------------------------------

def rank_elems(Tables T, elems):
    cdef Py_ssize_t n = len(elems), i, j, col, rank = 0, piv
    cdef long q = T.q, m = T.m
    cdef i64 v, w, top
    cdef i64* basis
    cdef i64* rows
    cdef i64 c, pinv, tmp
    if q == 2:
        # XOR basis indexed by leading bit
        basis = _load((), m)
        try:
            for i in range(n):
                v = elems[i]
                while v:
                    top = m - 1
                    while not (v >> top) & 1:
                        top -= 1
                    w = basis[top]
                    if w == 0:
                        basis[top] = v
                        rank += 1
                        break
                    v ^= w
            return rank
        finally:
            free(basis)
    rows = _load((), n * m)
    try:
        for i in range(n):
            v = elems[i]
            for j in range(m):
                rows[i * m + j] = v % q
                v //= q
        for col in range(m):
            piv = -1
            for i in range(rank, n):
                if rows[i * m + col]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(m):
                    tmp = rows[rank * m + j]
                    rows[rank * m + j] = rows[piv * m + j]
                    rows[piv * m + j] = tmp
            pinv = 1
            for j in range(q - 2):
                pinv = (pinv * rows[rank * m + col]) % q
            for i in range(n):
                if i != rank and rows[i * m + col]:
                    c = (rows[i * m + col] * pinv) % q
                    for j in range(m):
                        rows[i * m + j] = ((rows[i * m + j] - c * rows[rank * m + j]) % q + q) % q
            rank += 1
            if rank == n:
                break
        return rank
    finally:
        free(rows)


def rank_rows(rows, long q):
    cdef Py_ssize_t nr = len(rows), nc, i, j, col, rank = 0, piv
    cdef i64* a
    cdef i64 c, pinv, tmp
    if nr == 0:
        return 0
    nc = len(rows[0])
    a = _load((), nr * nc)
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                a[i * nc + j] = ((<i64> row[j]) % q + q) % q
        for col in range(nc):
            piv = -1
            for i in range(rank, nr):
                if a[i * nc + col]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(nc):
                    tmp = a[rank * nc + j]
                    a[rank * nc + j] = a[piv * nc + j]
                    a[piv * nc + j] = tmp
            pinv = 1
            for j in range(q - 2):
                pinv = (pinv * a[rank * nc + col]) % q
            for i in range(nr):
                if i != rank and a[i * nc + col]:
                    c = (a[i * nc + col] * pinv) % q
                    for j in range(nc):
                        a[i * nc + j] = ((a[i * nc + j] - c * a[rank * nc + j]) % q + q) % q
            rank += 1
            if rank == nr:
                break
        return rank
    finally:
        free(a)
