"""Univariate polynomials in ``q`` with exact integer coefficients."""

from __future__ import annotations

from math import comb
from typing import Iterable, Union

from lltlab.errors import NotDivisible

Scalar = Union[int, "QPoly"]


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class QPoly:
    """An element of Z[q], stored as a tuple of coefficients, constant term first.

    Instances are immutable and always trimmed, so ``==`` is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "QPoly":
        # caller guarantees coeffs is already trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "QPoly":
        if not c:
            return ZERO
        return cls._raw((0,) * exponent + (c,))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "QPoly":
        """Build sum(c * q**e) from a mapping exponent -> coefficient."""
        if not counts:
            return ZERO
        out = [0] * (max(counts) + 1)
        for e, c in counts.items():
            out[e] += c
        return cls._raw(_trim(out))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                mono = str(c)
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations -----------------------------------------------

    def __add__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        elif not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        elif not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b, i):
                    out[j] += x * y
        return QPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_q(self) -> "QPoly":
        """Return the composition ``a(q + 1)``."""
        return shift_q(self)

    def div_qminus1_pow(self, k: int) -> "QPoly":
        return exact_div_qminus1_pow(self, k)

    # -- serialization -------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "QPoly":
        return cls(int(c) for c in data)


ZERO = QPoly._raw(())
ONE = QPoly._raw((1,))
Q = QPoly._raw((0, 1))
Q_MINUS_1 = QPoly._raw((-1, 1))


def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def exact_div_qminus1_pow(a: QPoly, k: int) -> QPoly:
    """Divide ``a`` by ``(q - 1)**k`` exactly.

    Raises NotDivisible (carrying the remainder of the failing step) when the
    quotient is not a polynomial with integer coefficients.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = list(a.coeffs)
    for step in range(k):
        if not coeffs:
            return ZERO
        # synthetic division by (q - 1): b[i-1] = a[i] + b[i]
        quotient = [0] * (len(coeffs) - 1)
        carry = 0
        for i in range(len(coeffs) - 1, 0, -1):
            carry += coeffs[i]
            quotient[i - 1] = carry
        remainder = coeffs[0] + carry
        if remainder:
            raise NotDivisible(
                f"{a} is not divisible by (q-1)^{k}: remainder {remainder} at step {step + 1}",
                remainder=remainder,
            )
        coeffs = quotient
    return QPoly._raw(_trim(coeffs))


def shift_q(a: QPoly) -> QPoly:
    """Substitute q -> q + 1."""
    coeffs = a.coeffs
    if len(coeffs) <= 1:
        return a
    out = [0] * len(coeffs)
    for e, c in enumerate(coeffs):
        if c:
            for i in range(e + 1):
                out[i] += c * comb(e, i)
    return QPoly._raw(_trim(out))


def is_nonneg(a: QPoly) -> bool:
    return a.is_nonneg()
