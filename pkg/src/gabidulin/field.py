"""Prime fields F_q and their extensions F_{q^m} = F_q[alpha]/(modulus).

An element of F_{q^m} is identified with its coordinate vector
(v_1, ..., v_m) in the basis 1, alpha, ..., alpha^(m-1).  Internally that
vector is packed into the integer sum(v_i * q**(i-1)), which is what the
arithmetic kernels operate on.

>>> F = FieldCtx(2, 3, [1, 1, 0, 1])
>>> a = F.alpha
>>> a**3 == a + 1
True
>>> (a**5 * a**4) == a**2
True
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, Sequence

from . import kernels
from .errors import (
    DegreeMismatchError,
    DigitOutOfRangeError,
    FieldDivisionError,
    FieldError,
    FieldMismatchError,
    NotIrreducibleError,
    NotPrimeError,
    WrongLengthError,
)

__all__ = ["FieldCtx", "FieldElement", "default_modulus", "is_prime", "is_irreducible"]

SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_q (digit lists, low to high) -----------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    """Remainder of a modulo b over F_q; b must be trimmed and nonzero."""
    r = [x % q for x in a]
    _ptrim(r)
    db = len(b) - 1
    lead_inv = pow(b[-1], q - 2, q)
    while len(r) - 1 >= db:
        c = (r[-1] * lead_inv) % q
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % q
        _ptrim(r)
    return r


def is_irreducible(poly: Sequence[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _ptrim([x % q for x in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(q), repeat=d):
            divisor = list(low) + [1]
            if not _pmod(poly, divisor, q):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(q: int, m: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree m whose root is primitive.

    Candidates are scanned by increasing value of their lower coefficients
    read as a base-q number, so for q = 2 the result is x^2+x+1, x^3+x+1,
    x^4+x+1, ...
    """
    if not is_prime(q):
        raise NotPrimeError(f"q={q} is not prime")
    if m < 1:
        raise DegreeMismatchError("extension degree must be >= 1")
    for code in range(q**m):
        low = [(code // q**i) % q for i in range(m)]
        poly = low + [1]
        if low[0] == 0 and m > 1:
            continue
        if not is_irreducible(poly, q):
            continue
        if _root_is_primitive(poly, q, m):
            return tuple(poly)
    raise FieldError(f"no primitive polynomial found for q={q}, m={m}")  # unreachable


def _root_is_primitive(modulus: Sequence[int], q: int, m: int) -> bool:
    raw = _RawArith(q, m, list(modulus))
    return raw.is_primitive(raw.alpha)


class _RawArith:
    """Table-free arithmetic on packed codes; used to build the tables."""

    def __init__(self, q: int, m: int, modulus: list[int]):
        self.q, self.m, self.modulus = q, m, modulus
        self.size = q**m
        self.alpha = (-modulus[0]) % q if m == 1 else q

    def digits(self, a: int) -> list[int]:
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(a % q)
            a //= q
        return out

    def pack(self, d: Sequence[int]) -> int:
        v = 0
        for x in reversed(d):
            v = v * self.q + x
        return v

    def mul(self, a: int, b: int) -> int:
        q = self.q
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % q
        return self.pack(_pmod(prod, self.modulus, q) + [])

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_primitive(self, g: int) -> bool:
        if g == 0:
            return False
        n = self.size - 1
        if n == 1:
            return g == 1
        return all(self.pow(g, n // p) != 1 for p in _prime_factors(n))

    def times_alpha(self, a: int) -> int:
        """Multiply by alpha with a shift and one reduction step."""
        q, m = self.q, self.m
        if m == 1:
            return (a * self.alpha) % q
        top = a // q ** (m - 1)
        a = (a % q ** (m - 1)) * q
        if q == 2:
            if top:
                a ^= self.pack(self.modulus[:m])
            return a
        if top:
            d = self.digits(a)
            for i in range(m):
                d[i] = (d[i] - top * self.modulus[i]) % q
            a = self.pack(d)
        return a


class FieldCtx:
    """The field F_{q^m} = F_q[alpha]/(modulus) for a prime q.

    ``modulus`` lists coefficients low to high; it must be monic of degree m
    and irreducible over F_q.  When omitted, :func:`default_modulus` picks a
    primitive one (x^3+x+1 for q=2, m=3).

    ``backend`` selects the kernel implementation ("python" or "cython");
    by default the fastest available one is used.
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int] | None = None, *, backend: str | None = None):
        if not isinstance(q, int) or not is_prime(q):
            raise NotPrimeError(f"q={q!r} is not prime")
        if not isinstance(m, int) or m < 1:
            raise DegreeMismatchError(f"extension degree m={m!r} must be a positive integer")
        if modulus is None:
            modulus = default_modulus(q, m)
        modulus = [int(c) for c in modulus]
        if len(modulus) != m + 1:
            raise DegreeMismatchError(
                f"modulus has degree {len(modulus) - 1}, expected {m} (digits low to high)"
            )
        if any(not 0 <= c < q for c in modulus):
            raise DigitOutOfRangeError(f"modulus digits must lie in 0..{q - 1}")
        if modulus[-1] != 1:
            raise DegreeMismatchError("modulus must be monic (leading digit 1)")
        if not is_irreducible(modulus, q):
            raise NotIrreducibleError(f"{_poly_str(modulus)} is reducible over F_{q}")

        self.q = q
        self.m = m
        self.modulus = tuple(modulus)
        self.size = q**m
        self.order = self.size - 1

        raw = _RawArith(q, m, modulus)
        self.alpha_is_primitive = raw.is_primitive(raw.alpha)
        exp, log = self._build_tables(raw)
        self._exp = exp
        self._log = log
        self._alpha_log = log[raw.alpha] if raw.alpha else None
        self._k = kernels.get_backend(backend)
        self._T = self._k.make_tables(q, m, exp, log)
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self.alpha = FieldElement(self, raw.alpha)

    @staticmethod
    def _build_tables(raw: _RawArith) -> tuple[list[int], list[int]]:
        size = raw.size
        exp = [0] * max(size - 1, 1)
        log = [-1] * size
        if raw.is_primitive(raw.alpha):
            step = raw.times_alpha
        else:
            gen = next(g for g in range(2, size) if raw.is_primitive(g))
            step = functools.partial(raw.mul, gen)
        v = 1
        for i in range(size - 1):
            exp[i] = v
            log[v] = i
            v = step(v)
        return exp, log

    @property
    def kernels(self):
        return self._k

    @property
    def backend(self) -> str:
        return self._k.BACKEND

    def with_backend(self, backend: str) -> "FieldCtx":
        return FieldCtx(self.q, self.m, self.modulus, backend=backend)

    # -- construction of elements ---------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.ctx is not self and value.ctx != self:
                raise FieldMismatchError("element belongs to a different field")
            return value if value.ctx is self else FieldElement(self, value.value)
        if isinstance(value, int):
            return FieldElement(self, value % self.q)
        if isinstance(value, (list, tuple)):
            return self.vec_to_elem(value)
        raise TypeError(f"cannot convert {type(value).__name__} to a field element")

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.size:
            raise DigitOutOfRangeError(f"code {code} outside 0..{self.size - 1}")
        return FieldElement(self, code)

    def vec_to_elem(self, v: Sequence[int]) -> "FieldElement":
        """(v_1, ..., v_m) -> v_1 + v_2 alpha + ... + v_m alpha^(m-1)."""
        if len(v) != self.m:
            raise WrongLengthError(f"expected {self.m} digits, got {len(v)}")
        code = 0
        for d in reversed(v):
            if not isinstance(d, int) or not 0 <= d < self.q:
                raise DigitOutOfRangeError(f"digit {d!r} outside 0..{self.q - 1}")
            code = code * self.q + d
        return FieldElement(self, code)

    def elem_to_vec(self, x: "FieldElement") -> list[int]:
        return self(x).digits

    def alpha_power(self, i: int) -> "FieldElement":
        return self.alpha**i

    def elements(self) -> Iterator["FieldElement"]:
        for code in range(self.size):
            yield FieldElement(self, code)

    def nonzero_elements(self) -> Iterator["FieldElement"]:
        for code in range(1, self.size):
            yield FieldElement(self, code)

    def log_alpha(self, x: "FieldElement") -> int | None:
        """Exponent e with x = alpha^e, or None if x = 0 or alpha is not primitive."""
        if not self.alpha_is_primitive or x.value == 0:
            return None
        return self._log[x.value]

    # -- identity ---------------------------------------------------------

    def _key(self):
        return (self.q, self.m, self.modulus)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={list(self.modulus)})"

    def __str__(self):
        return f"GF({self.q}^{self.m}) = F_{self.q}[α]/({_poly_str(self.modulus, 'x')})"


def _poly_str(digits: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}" if i == 0 else f"{c}{mono}")
    return " + ".join(terms) or "0"


class FieldElement:
    """Immutable element of a :class:`FieldCtx`.

    Supports ``+ - * / **`` with other elements of the same field and with
    Python ints (read as elements of the prime field).
    """

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatchError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.q
        return NotImplemented

    def _wrap(self, code: int) -> "FieldElement":
        return FieldElement(self.ctx, code)

    @property
    def digits(self) -> list[int]:
        q = self.ctx.q
        v = self.value
        out = []
        for _ in range(self.ctx.m):
            out.append(v % q)
            v //= q
        return out

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx._k.add(self.ctx._T, self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx._k.sub(self.ctx._T, self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx._k.sub(self.ctx._T, o, self.value))

    def __neg__(self):
        return self._wrap(self.ctx._k.neg(self.ctx._T, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx._k.mul(self.ctx._T, self.value, o))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise FieldDivisionError("zero has no multiplicative inverse")
        return self._wrap(self.ctx._k.inv(self.ctx._T, self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise FieldDivisionError("division by zero")
        return self._wrap(self.ctx._k.div(self.ctx._T, self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(o) / self

    def __pow__(self, e: int):
        ctx = self.ctx
        if self.value == 0:
            if e < 0:
                raise FieldDivisionError("zero has no multiplicative inverse")
            return self._wrap(1 if e == 0 else 0)
        return self._wrap(ctx._exp[(ctx._log[self.value] * e) % ctx.order] if ctx.order > 1 else 1)

    def frobenius(self, i: int = 1) -> "FieldElement":
        """x^(q^i); the inverse automorphism for negative i."""
        return self._wrap(self.ctx._k.frob(self.ctx._T, self.value, i))

    def frobenius_inv(self, i: int = 1) -> "FieldElement":
        return self.frobenius(-i)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and (self.ctx is other.ctx or self.ctx == other.ctx)
        if isinstance(other, int):
            return self.value == other % self.ctx.q
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"FieldElement({self.digits})"

    def __str__(self):
        return self.power_str()

    def power_str(self) -> str:
        """alpha-power notation (α⁵), falling back to polynomial form."""
        if self.value == 0:
            return "0"
        e = self.ctx.log_alpha(self)
        if e is None:
            return self.poly_str()
        if e == 0:
            return "1"
        if e == 1:
            return "α"
        return "α" + str(e).translate(SUPERSCRIPTS)

    def poly_str(self) -> str:
        return _poly_str(self.digits, "α")
