"""Arithmetic in F_p and F_{p^m} over a polynomial basis.

An element of F_{p^m} is stored as its coordinate vector (c_0, ..., c_{m-1})
in the basis 1, x, ..., x^{m-1} modulo a monic primitive polynomial. Inside
the package elements are mostly handled as integer *indices*
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``, which lets the ``v*`` methods of
:class:`FieldCtx` work on whole numpy arrays at once.

The primitive element is always the class of ``x``.
"""

from __future__ import annotations

import builtins
import itertools
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DivisionByZero,
    InvalidParameters,
    NotADivisor,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
    TooLarge,
)

MAX_FIELD_ORDER = 2**40
# Dense log/exp/trace tables; past this the int64 log arithmetic could overflow.
MAX_TABLE_ORDER = 2**28

MODULUS_ENV = "WDIST_MODULUS_PATH"


# ---------------------------------------------------------------------------
# integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficient lists with the constant term first

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b, p):
    a = _trim(x % p for x in a)
    b = _trim(x % p for x in b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = builtins.pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _trim(a)
    return _trim(q), a


def _poly_mulmod(a, b, f, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_divmod(prod, f, p)[1]


def _poly_powmod(base, e, f, p):
    result = [1]
    base = _poly_divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim((x - y) % p for x, y in zip(a, b))


def is_irreducible(p: int, modulus) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**m, f, p), x, p):
        return False
    for ell in prime_factors(m):
        h = _poly_sub(_poly_powmod(x, p ** (m // ell), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def is_primitive(p: int, modulus) -> bool:
    """Whether x has order exactly p^m - 1 modulo an irreducible ``modulus``."""
    f = [c % p for c in modulus]
    n = p ** (len(f) - 1) - 1
    return all(_poly_powmod([0, 1], n // ell, f, p) != [1] for ell in prime_factors(n))


def find_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Sparsest primitive polynomial, ties broken lexicographically."""
    for weight in range(1, m + 1):
        for support in itertools.combinations(range(1, m), weight - 1):
            for vals in itertools.product(range(1, p), repeat=weight):
                f = [0] * (m + 1)
                f[m] = 1
                f[0] = vals[0]
                for pos, v in zip(support, vals[1:]):
                    f[pos] = v
                if is_irreducible(p, f) and is_primitive(p, f):
                    return tuple(f)
    raise NotPrimitive(f"no primitive polynomial found for p={p}, m={m}")


# Generated by scripts/gen_primitive_table.py; constant term first.
BUILTIN_PRIMITIVE = {
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 1, 4, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (3, 1, 4, 0, 0, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (3, 1, 6, 0, 1),
    (7, 5): (2, 2, 0, 0, 0, 1),
    (7, 6): (3, 1, 5, 0, 0, 0, 1),
    (7, 7): (2, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 1, 0, 0, 0, 0, 0, 0, 1),
}


def load_modulus_file(path) -> dict[tuple[int, int], tuple[int, ...]]:
    """Parse lines ``p m c_0 c_1 ... c_m``; ``#`` starts a comment."""
    table = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise InvalidParameters(f"{path}:{lineno}: non-integer token") from None
        if len(nums) < 3:
            raise InvalidParameters(f"{path}:{lineno}: expected 'p m c_0 ... c_m'")
        p, m, coeffs = nums[0], nums[1], tuple(nums[2:])
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise InvalidParameters(
                f"{path}:{lineno}: need {m + 1} coefficients ending in 1, got {coeffs}"
            )
        table[(p, m)] = coeffs
    return table


def default_modulus(p: int, m: int, path=None) -> tuple[int, ...]:
    """Modulus lookup order: explicit file, $WDIST_MODULUS_PATH, built-in table, search."""
    if path is None:
        path = os.environ.get(MODULUS_ENV) or None
    if path is not None:
        table = load_modulus_file(path)
        if (p, m) in table:
            return table[(p, m)]
    if (p, m) in BUILTIN_PRIMITIVE:
        return BUILTIN_PRIMITIVE[(p, m)]
    return find_primitive_polynomial(p, m)


# ---------------------------------------------------------------------------
# field elements and context

@dataclass(frozen=True)
class FieldElem:
    """Coordinates in the polynomial basis, constant term first."""

    coeffs: tuple[int, ...]

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(reversed(terms)) or "0"


@dataclass(frozen=True, eq=False, repr=False)
class FieldCtx:
    """F_{p^m} with precomputed discrete-log and trace tables.

    ``exp[i]`` is the index of pi^i, ``log[a]`` the discrete log of index a
    (-1 for zero) and ``trace_table[a]`` the absolute trace in F_p.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    exp: np.ndarray
    log: np.ndarray
    trace_table: np.ndarray

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def n(self) -> int:
        return self.p**self.m - 1

    @property
    def pi(self) -> FieldElem:
        return self.elem(int(self.exp[1 % self.n]))

    @property
    def u_p(self) -> FieldElem:
        return self.elem(int(self.exp[self.n // (self.p - 1) % self.n]))

    @property
    def minus_one(self) -> int:
        return self.p - 1

    # element <-> index
    def elem(self, index: int) -> FieldElem:
        index = int(index)
        if not 0 <= index < self.q:
            raise InvalidParameters(f"index {index} outside F_{self.p}^{self.m}")
        cs = []
        for _ in range(self.m):
            index, c = divmod(index, self.p)
            cs.append(c)
        return FieldElem(tuple(cs))

    def index(self, a: FieldElem) -> int:
        if len(a.coeffs) != self.m or any(not 0 <= c < self.p for c in a.coeffs):
            raise InvalidParameters(f"{a!r} is not an element of F_{self.p}^{self.m}")
        return sum(c * self.p**j for j, c in enumerate(a.coeffs))

    def from_int(self, c: int) -> FieldElem:
        """Embed a residue of F_p."""
        return self.elem(c % self.p)

    def power_of_pi(self, e: int) -> FieldElem:
        return self.elem(int(self.exp[e % self.n]))

    # vectorised index arithmetic
    def vadd(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = np.zeros(a.shape, dtype=np.int64)
        for j in range(self.m):
            w = self.p**j
            out += ((a // w + b // w) % self.p) * w
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        for j in range(self.m):
            w = self.p**j
            out += ((-(a // w)) % self.p) * w
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        prod = self.exp[(self.log[a] + self.log[b]) % self.n]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            if np.any(a == 0):
                raise DivisionByZero("negative power of zero")
            e %= self.n
        res = self.exp[(self.log[a] * (e % self.n)) % self.n]
        if e == 0:
            return np.ones(a.shape, dtype=np.int64)
        return np.where(a == 0, 0, res)

    def vfrob(self, a, j: int = 1):
        """a -> a^(p^j)."""
        return self.vpow(a, self.p ** (j % self.m))

    def vtrace(self, a):
        return self.trace_table[np.asarray(a, dtype=np.int64)]

    def all_indices(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


def _companion(p, modulus):
    m = len(modulus) - 1
    X = np.zeros((m, m), dtype=np.int64)
    for j in range(m - 1):
        X[j, j + 1] = 1
    X[m - 1, :] = [(-c) % p for c in modulus[:m]]
    return X


def build_field(p: int, m: int, modulus=None) -> FieldCtx:
    """Validate ``modulus`` and build the tables of F_{p^m}.

    With ``modulus=None`` the default lookup of :func:`default_modulus` is used.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if p == 2:
        raise NotPrime("p must be an odd prime")
    if m < 1:
        raise InvalidParameters(f"m={m} must be >= 1")
    if p**m > MAX_FIELD_ORDER:
        raise TooLarge(f"p^m = {p}^{m} exceeds 2^40")
    if p**m > MAX_TABLE_ORDER:
        raise TooLarge(f"p^m = {p}^{m} is too large for dense field tables")
    if modulus is None:
        modulus = default_modulus(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise InvalidParameters(f"modulus {modulus} is not monic of degree {m}")
    if not is_irreducible(p, modulus):
        raise NotIrreducible(f"{modulus} is reducible over F_{p}")
    if not is_primitive(p, modulus):
        raise NotPrimitive(f"x does not have order {p}^{m}-1 modulo {modulus}")

    q, n = p**m, p**m - 1
    X = _companion(p, modulus)
    weights = p ** np.arange(m, dtype=np.int64)

    # coordinates of x^0 .. x^(n-1) by repeated doubling: rows[L:2L] = rows[:L] @ X^L
    rows = np.zeros((1, m), dtype=np.int64)
    rows[0, 0] = 1
    step = X.copy()
    while rows.shape[0] < n:
        rows = np.concatenate([rows, (rows @ step) % p])
        step = (step @ step) % p
    exp = rows[:n] @ weights

    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(n, dtype=np.int64)
    if np.count_nonzero(log >= 0) != n:
        raise NotPrimitive(f"powers of x repeat modulo {modulus}")

    # Tr(b) is the trace of the matrix of multiplication by b
    basis_traces = []
    M = np.eye(m, dtype=np.int64)
    for _ in range(m):
        basis_traces.append(int(np.trace(M)) % p)
        M = (M @ X) % p
    idx = np.arange(q, dtype=np.int64)
    tr = np.zeros(q, dtype=np.int64)
    for j in range(m):
        tr += ((idx // p**j) % p) * basis_traces[j]
    tr %= p

    for arr in (exp, log, tr):
        arr.setflags(write=False)
    return FieldCtx(p=p, m=m, modulus=modulus, exp=exp, log=log, trace_table=tr)


# ---------------------------------------------------------------------------
# scalar API on FieldElem

def add(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return ctx.elem(ctx.vadd(ctx.index(a), ctx.index(b)))


def sub(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return ctx.elem(ctx.vsub(ctx.index(a), ctx.index(b)))


def neg(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    return ctx.elem(ctx.vneg(ctx.index(a)))


def mul(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return ctx.elem(ctx.vmul(ctx.index(a), ctx.index(b)))


def power(ctx: FieldCtx, a: FieldElem, e: int) -> FieldElem:
    """a^e; the exponent is reduced mod p^m - 1 for nonzero a."""
    return ctx.elem(ctx.vpow(ctx.index(a), e))


pow = power


def inv(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    i = ctx.index(a)
    if i == 0:
        raise DivisionByZero("inverse of zero")
    return ctx.elem(ctx.exp[(-ctx.log[i]) % ctx.n])


def trace(ctx: FieldCtx, x: FieldElem) -> int:
    """Tr_1^m(x) = x + x^p + ... + x^(p^(m-1)), evaluated by Frobenius powers."""
    y = ctx.index(x)
    acc = 0
    for _ in range(ctx.m):
        acc = int(ctx.vadd(acc, y))
        y = int(ctx.vfrob(y))
    assert acc < ctx.p, "trace left the prime field"
    return acc


def trace_intermediate(ctx: FieldCtx, x: FieldElem, l: int) -> FieldElem:
    """Tr_l^m(x), landing in the subfield F_{p^l}."""
    if l < 1 or ctx.m % l:
        raise NotADivisor(f"l={l} does not divide m={ctx.m}")
    y = ctx.index(x)
    acc = 0
    for _ in range(ctx.m // l):
        acc = int(ctx.vadd(acc, y))
        y = int(ctx.vfrob(y, l))
    return ctx.elem(acc)


def quad_character(ctx: FieldCtx, x: FieldElem) -> int:
    i = ctx.index(x)
    if i == 0:
        return 0
    y = int(ctx.vpow(i, ctx.n // 2))
    if y == 1:
        return 1
    assert y == ctx.minus_one
    return -1
