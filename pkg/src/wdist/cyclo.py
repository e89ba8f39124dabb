"""Exact arithmetic in the cyclotomic ring Z[zeta_p].

Values are kept in the basis 1, zeta, ..., zeta^(p-2): the zeta^(p-1)
coordinate is eliminated with 1 + zeta + ... + zeta^(p-1) = 0, so two values
are equal iff their coefficient tuples are. Coefficients are Python ints.
"""

from __future__ import annotations

import numbers

from .errors import MixedModulus


class CycInt:
    """Element sum_j c_j zeta_p^j of Z[zeta_p] in canonical form."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        cs = [int(c) for c in coeffs]
        if len(cs) > p:
            # fold exponents mod p
            folded = [0] * p
            for j, c in enumerate(cs):
                folded[j % p] += c
            cs = folded
        cs += [0] * (p - len(cs))
        top = cs[-1]
        if top:
            cs = [c - top for c in cs]
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def from_int(cls, p: int, value: int) -> CycInt:
        return cls(p, [value])

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise MixedModulus(f"Z[zeta_{self.p}] vs Z[zeta_{other.p}]")
            return other
        if isinstance(other, numbers.Integral):
            return CycInt.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            return CycInt(self.p, [c * int(other) for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CycInt(p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = CycInt.from_int(self.p, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, numbers.Integral):
            return self.as_int() == int(other)
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        r = self.as_int()
        return hash(r) if r is not None else hash((self.p, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self):
        """The rational integer value, or None when a zeta term survives."""
        return self.coeffs[0] if self.is_rational() else None

    def sort_key(self):
        r = self.as_int()
        return (0, r, ()) if r is not None else (1, 0, self.coeffs)

    def conjugate(self, g: int) -> CycInt:
        """Image under the automorphism zeta -> zeta^g, g prime to p."""
        if g % self.p == 0:
            raise ValueError("g must be prime to p")
        out = [0] * self.p
        for j, c in enumerate(self.coeffs):
            out[(j * g) % self.p] += c
        return CycInt(self.p, out)

    def __repr__(self):
        return f"CycInt({self.p}, {list(self.coeffs)})"

    def __str__(self):
        r = self.as_int()
        if r is not None:
            return str(r)
        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if j == 0 else f"{c}*z" + (f"^{j}" if j > 1 else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        """Rational values become plain ints, others the coefficient array."""
        r = self.as_int()
        return r if r is not None else list(self.coeffs)

    @classmethod
    def from_json(cls, p: int, obj) -> CycInt:
        return cls.from_int(p, obj) if isinstance(obj, int) else cls(p, obj)


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_scale(a: CycInt, n: int) -> CycInt:
    return a * int(n)


def zeta_pow(p: int, j: int) -> CycInt:
    cs = [0] * p
    cs[j % p] = 1
    return CycInt(p, cs)


def from_counts(p: int, counts) -> CycInt:
    """sum_j counts[j] zeta^j, e.g. from a histogram of trace values."""
    return CycInt(p, [int(c) for c in counts])


def as_rational_integer(a: CycInt):
    return a.as_int()


def gauss_sum(p: int) -> CycInt:
    """The quadratic Gauss sum sum_{u in F_p} zeta^(u^2)."""
    counts = [0] * p
    for u in range(p):
        counts[u * u % p] += 1
    return from_counts(p, counts)
