"""Symmetric polynomials in finitely many variables with Z[q] coefficients.

Everything is stored in the monomial basis: a :class:`SymPoly` maps each
partition ``lam`` (with at most ``num_vars`` parts) to the coefficient of the
monomial symmetric polynomial ``m_lam``.  Working with ``n >= degree``
variables is faithful, so two symmetric functions of degree ``d`` agree iff
their truncations to ``d`` variables agree.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Mapping

from lltlab.errors import DegreeExceedsVars, NotHomogeneous, TooManyRows, VarMismatch
from lltlab.qpoly import ONE, QPoly, ZERO, _trim, shift_q

Partition = tuple[int, ...]


def partition(parts) -> Partition:
    """Validate and normalise a partition (trailing zeros are dropped)."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {parts!r}")
    return lam


@lru_cache(maxsize=None)
def partitions(d: int, max_len: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``d``, in reverse lexicographic order (largest first)."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d
    if d == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, max_len - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def sort_key(lam: Partition):
    """Canonical term order: by size, then reverse lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


def orbit_size(lam: Partition, n: int) -> int:
    """Number of distinct monomials in m_lam(x_1..x_n)."""
    if len(lam) > n:
        return 0
    denom = factorial(n - len(lam))
    for mult in Counter(lam).values():
        denom *= factorial(mult)
    return factorial(n) // denom


@lru_cache(maxsize=None)
def _splits(nu: Partition, db: int) -> tuple[tuple[Partition, Partition, int], ...]:
    """Decompositions nu = alpha + beta over nonnegative vectors with |beta| = db.

    Grouped by (sort(alpha), sort(beta)) with multiplicities.
    """
    counts: Counter = Counter()
    for beta in product(*(range(p + 1) for p in nu)):
        if sum(beta) != db:
            continue
        alpha = tuple(sorted((p - b for p, b in zip(nu, beta) if p - b), reverse=True))
        counts[alpha, tuple(sorted((b for b in beta if b), reverse=True))] += 1
    return tuple((a, b, c) for (a, b), c in counts.items())


def _accumulate(acc: list[int], a: tuple[int, ...], b: tuple[int, ...], scale: int) -> None:
    need = len(a) + len(b) - 1
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, x in enumerate(a):
        x *= scale
        for j, y in enumerate(b, i):
            acc[j] += x * y


class SymPoly:
    """Sum of c_lam(q) * m_lam(x_1, ..., x_n); immutable."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Partition, QPoly] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = {}
        for lam, c in (terms or {}).items():
            if isinstance(c, int):
                c = QPoly.const(c)
            if not c:
                continue
            lam = partition(lam)
            if len(lam) > num_vars:
                raise TooManyRows(f"m_{lam} needs more than {num_vars} variables")
            clean[lam] = c
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "SymPoly":
        obj = object.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls._raw(n, {(): ONE})

    @classmethod
    def monomial(cls, lam, n: int, coeff=ONE) -> "SymPoly":
        return cls(n, {partition(lam): coeff})

    @property
    def terms(self) -> Mapping[Partition, QPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def coeff(self, lam) -> QPoly:
        return self._terms.get(partition(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"SymPoly({self.num_vars}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            name = "m" + ("[" + ",".join(map(str, lam)) + "]")
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    def _check(self, other: "SymPoly"):
        if not isinstance(other, SymPoly):
            raise TypeError(f"expected SymPoly, got {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise VarMismatch(f"{self.num_vars} vs {other.num_vars} variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            s = out.get(lam, ZERO) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SymPoly._raw(self.num_vars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly._raw(self.num_vars, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        """Multiply every coefficient by the scalar ``c`` (int or QPoly)."""
        if isinstance(c, int):
            c = QPoly.const(c)
        if not c:
            return SymPoly.zero(self.num_vars)
        out = {}
        for lam, a in self._terms.items():
            p = a * c
            if p:
                out[lam] = p
        return SymPoly._raw(self.num_vars, out)

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        self._check(other)
        return _sp_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    def map_coeffs(self, fn) -> "SymPoly":
        out = {}
        for lam, c in self._terms.items():
            v = fn(c)
            if v:
                out[lam] = v
        return SymPoly._raw(self.num_vars, out)

    def shift_q(self) -> "SymPoly":
        return self.map_coeffs(shift_q)

    def at_q(self, value: int) -> "SymPoly":
        """Specialise q to an integer."""
        return self.map_coeffs(lambda c: QPoly.const(c(value)))

    def at_ones(self) -> QPoly:
        """Evaluate at x_1 = ... = x_n = 1."""
        total = ZERO
        for lam, c in self._terms.items():
            total = total + c * orbit_size(lam, self.num_vars)
        return total

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [{"exponents": list(lam), "q_coeffs": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymPoly":
        return cls(
            data["num_vars"],
            {tuple(t["exponents"]): QPoly.from_json(t["q_coeffs"]) for t in data["terms"]},
        )


def _sp_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    n = a.num_vars
    if not a._terms or not b._terms:
        return SymPoly.zero(n)
    by_deg_a: dict[int, dict] = {}
    for lam, c in a._terms.items():
        by_deg_a.setdefault(sum(lam), {})[lam] = c.coeffs
    by_deg_b: dict[int, dict] = {}
    for lam, c in b._terms.items():
        by_deg_b.setdefault(sum(lam), {})[lam] = c.coeffs
    out: dict[Partition, QPoly] = {}
    for da, A in by_deg_a.items():
        for db, B in by_deg_b.items():
            for nu in partitions(da + db, n):
                acc: list[int] = []
                for alpha, beta, mult in _splits(nu, db):
                    ca = A.get(alpha)
                    if ca is None:
                        continue
                    cb = B.get(beta)
                    if cb is None:
                        continue
                    _accumulate(acc, ca, cb, mult)
                if acc:
                    prev = out.get(nu)
                    if prev is not None:
                        _accumulate(acc, prev.coeffs, (1,), 1)
                    coeff = _trim(acc)
                    if coeff:
                        out[nu] = QPoly._raw(coeff)
                    else:
                        out.pop(nu, None)
    return SymPoly._raw(n, out)


def sp_add(a: SymPoly, b: SymPoly) -> SymPoly:
    return a + b


def sp_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    return a * b


def sp_shift_q(a: SymPoly) -> SymPoly:
    return a.shift_q()


def sp_product(factors, n: int) -> SymPoly:
    result = SymPoly.one(n)
    for f in factors:
        result = result * f
    return result


# -- Schur functions ------------------------------------------------------


def _count_ssyt_with_content(lam: Partition, content: Partition) -> int:
    """Number of SSYT of straight shape ``lam`` with the given content (Kostka number)."""
    cells = [(row, col) for row, length in enumerate(lam) for col in range(length)]
    filling: dict[tuple[int, int], int] = {}
    budget = list(content)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        row, col = cells[idx]
        low = 0
        if col > 0:
            low = filling[row, col - 1]
        if row > 0:
            low = max(low, filling[row - 1, col] + 1)
        total = 0
        for v in range(low, len(budget)):
            if budget[v]:
                budget[v] -= 1
                filling[row, col] = v
                total += fill(idx + 1)
                budget[v] += 1
        return total

    return fill(0)


@lru_cache(maxsize=None)
def schur_poly(lam, n: int) -> SymPoly:
    """Schur polynomial s_lam(x_1..x_n), by counting semistandard tableaux per content."""
    lam = partition(lam)
    if len(lam) > n:
        raise TooManyRows(f"s_{lam} vanishes in {n} variables (too many rows)")
    terms = {}
    for mu in partitions(sum(lam), n):
        k = _count_ssyt_with_content(lam, mu)
        if k:
            terms[mu] = QPoly.const(k)
    return SymPoly._raw(n, terms)


def to_schur_basis(a: SymPoly) -> dict[Partition, QPoly]:
    """Expand a homogeneous SymPoly in the Schur basis.

    Peels off the lexicographically largest monomial term at each step; the
    Kostka matrix is unitriangular for that order.
    """
    degs = a.degrees()
    if len(degs) > 1:
        raise NotHomogeneous(f"degrees present: {sorted(degs)}")
    if not degs:
        return {}
    d = degs.pop()
    if d > a.num_vars:
        raise DegreeExceedsVars(f"degree {d} in only {a.num_vars} variables")
    rest = a
    out: dict[Partition, QPoly] = {}
    for lam in partitions(d, a.num_vars):
        c = rest.coeff(lam)
        if c:
            out[lam] = c
            rest = rest - schur_poly(lam, a.num_vars).scale(c)
    if rest:
        raise AssertionError(f"Schur peeling left a remainder: {rest}")
    return out


def from_schur_basis(coeffs: Mapping[Partition, QPoly], n: int) -> SymPoly:
    total = SymPoly.zero(n)
    for lam, c in coeffs.items():
        total = total + schur_poly(partition(lam), n).scale(c)
    return total


def schur_to_json(coeffs: Mapping[Partition, QPoly]) -> list[dict]:
    return [
        {"partition": list(lam), "q_coeffs": c.to_json()}
        for lam, c in sorted(coeffs.items(), key=lambda kv: sort_key(kv[0]))
    ]
