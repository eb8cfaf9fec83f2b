"""Exact truncated power-series arithmetic in q and in (x, q).

Everything is integer-exact: coefficients are Python ints, and the identity
checks downstream rely on exact cancellation, so no floating point appears
anywhere.  A ``QSeries`` is a formal power series known modulo q^(trunc+1).
Binary operations refuse to mix truncation orders; dropping precision is an
explicit ``truncated`` call, never a silent coercion.

``XQSeries`` layers a second variable x on top, sparse in x-degree: absent
degrees are the zero series, and every stored slice shares one q-truncation.
Infinite Pochhammer products stop at the first factor whose lowest retained
exponent exceeds the truncation order; every later factor is 1 modulo the
truncation, so the stopping rule loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

__all__ = [
    "QSeries",
    "XQSeries",
    "PochhammerSpec",
    "pochhammer",
    "xq_pochhammer",
    "gaussian_binomial",
    "TruncationMismatchError",
    "NonUnitConstantError",
]


class TruncationMismatchError(ValueError):
    """A binary operation mixed two different truncation orders."""


class NonUnitConstantError(ValueError):
    """Inversion was asked of a series whose constant term is not +1 or -1."""


# ---------------------------------------------------------------------------
# univariate series


@dataclass(frozen=True, slots=True)
class QSeries:
    """c_0 + c_1 q + ... + c_trunc q^trunc, known modulo q^(trunc+1)."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.trunc}")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"need {self.trunc + 1} coefficients for truncation order "
                f"{self.trunc}, got {len(self.coeffs)}"
            )

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(trunc, (0,) * (trunc + 1))

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls(trunc, (1,) + (0,) * trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> "QSeries":
        """coeff * q^exponent; the zero series when the exponent overflows."""
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        c = [0] * (trunc + 1)
        if exponent <= trunc:
            c[exponent] = coeff
        return cls(trunc, tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs, trunc: int) -> "QSeries":
        """Truncate (or zero-pad, for exact polynomials) a coefficient list."""
        c = list(coeffs[: trunc + 1])
        c += [0] * (trunc + 1 - len(c))
        return cls(trunc, tuple(c))

    # -- accessors ----------------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent <= self.trunc:
            raise IndexError(f"exponent {exponent} outside [0, {self.trunc}]")
        return self.coeffs[exponent]

    __getitem__ = coefficient

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "QSeries") -> None:
        if self.trunc != other.trunc:
            raise TruncationMismatchError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries(self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries(self.trunc, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.trunc, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.trunc, tuple(a * other for a in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        n = self.trunc
        out = [0] * (n + 1)
        b = other.coeffs
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j in range(n - i + 1):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return QSeries(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonUnitConstantError(f"constant term {c0} is not a unit")
        n = self.trunc
        nz = [(i, ai) for i, ai in enumerate(self.coeffs) if ai and i > 0]
        b = [0] * (n + 1)
        b[0] = c0  # 1/c0 == c0 for c0 in {1, -1}
        for m in range(1, n + 1):
            s = 0
            for i, ai in nz:
                if i > m:
                    break
                s += ai * b[m - i]
            b[m] = -c0 * s
        return QSeries(n, tuple(b))

    def shifted(self, exponent: int) -> "QSeries":
        """Multiply by q^exponent, dropping whatever overflows the truncation."""
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        n = self.trunc
        if exponent == 0:
            return self
        if exponent > n:
            return QSeries.zero(n)
        return QSeries(n, (0,) * exponent + self.coeffs[: n + 1 - exponent])

    def truncated(self, new_trunc: int) -> "QSeries":
        """Explicitly drop precision down to new_trunc <= trunc."""
        if new_trunc > self.trunc:
            raise TruncationMismatchError(
                f"cannot raise truncation {self.trunc} to {new_trunc}"
            )
        return QSeries(new_trunc, self.coeffs[: new_trunc + 1])

    # -- rendering ----------------------------------------------------------

    def coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, index = exponent (JSON-friendly)."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        pieces = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                pieces.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "q" if e == 1 else f"q^{e}"
                if c < 0:
                    pieces.append(f"- {mag}{var}" if pieces else f"-{mag}{var}")
                else:
                    pieces.append(f"+ {mag}{var}" if pieces else f"{mag}{var}")
        return " ".join(pieces) if pieces else "0"


# ---------------------------------------------------------------------------
# Pochhammer products


@dataclass(frozen=True, slots=True)
class PochhammerSpec:
    """Product of factors (1 - sign * q^(base_exp + j*step_exp)), j = 0..count-1.

    ``sign`` is the constant multiplying the monomial inside each factor, so
    sign=+1 describes (q^s; q^t)-type products and sign=-1 the (-q^s; q^t)
    kind.  ``count`` None means the infinite product.
    """

    sign: int
    base_exp: int
    step_exp: int
    count: int | None = None

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.base_exp < 1:
            raise ValueError(f"base exponent must be >= 1, got {self.base_exp}")
        if self.step_exp < 1:
            raise ValueError(f"step exponent must be >= 1, got {self.step_exp}")
        if self.count is not None and self.count < 0:
            raise ValueError(f"count must be >= 0 or None, got {self.count}")


def pochhammer(spec: PochhammerSpec, trunc: int) -> QSeries:
    """Evaluate a PochhammerSpec modulo q^(trunc+1).

    Factors whose exponent exceeds the truncation are 1 modulo q^(trunc+1);
    since exponents increase, the loop stops at the first such factor for
    finite and infinite counts alike.
    """
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    sign = spec.sign
    j = 0
    while spec.count is None or j < spec.count:
        e = spec.base_exp + j * spec.step_exp
        if e > trunc:
            break
        # in-place multiply by (1 - sign*q^e); descend so lower terms are unread
        for i in range(trunc - e, -1, -1):
            if coeffs[i]:
                coeffs[i + e] -= sign * coeffs[i]
        j += 1
    return QSeries(trunc, tuple(coeffs))


# ---------------------------------------------------------------------------
# Gaussian binomial coefficients


@lru_cache(maxsize=None)
def _gauss_coeffs(n: int, k: int) -> tuple[int, ...]:
    """Exact coefficient tuple of the Gaussian binomial [n choose k]_q."""
    if k < 0 or k > n:
        return (0,)
    k = min(k, n - k)  # symmetry keeps the cache small
    if k == 0:
        return (1,)
    a = _gauss_coeffs(n - 1, k - 1)
    b = _gauss_coeffs(n - 1, k)  # enters shifted by q^k
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def gaussian_binomial(n: int, k: int, trunc: int) -> QSeries:
    """[n choose k]_q as a QSeries; zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return QSeries.from_coeffs(_gauss_coeffs(n, k), trunc)


# ---------------------------------------------------------------------------
# bivariate series


@dataclass(frozen=True)
class XQSeries:
    """Sparse-in-x bivariate series: terms maps x-degree -> QSeries slice.

    Degrees not present are zero.  All slices carry trunc == q_trunc, and only
    degrees 0..x_trunc are representable.  Instances normalise away zero
    slices on construction, so equality is plain field equality.
    """

    x_trunc: int
    q_trunc: int
    terms: Mapping[int, QSeries]

    def __post_init__(self) -> None:
        if self.x_trunc < 0 or self.q_trunc < 0:
            raise ValueError("truncation orders must be >= 0")
        clean: dict[int, QSeries] = {}
        for deg in sorted(self.terms):
            s = self.terms[deg]
            if not 0 <= deg <= self.x_trunc:
                raise ValueError(f"x-degree {deg} outside [0, {self.x_trunc}]")
            if s.trunc != self.q_trunc:
                raise TruncationMismatchError(
                    f"slice at x^{deg} has q-truncation {s.trunc}, expected {self.q_trunc}"
                )
            if not s.is_zero():
                clean[deg] = s
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, x_trunc: int, q_trunc: int) -> "XQSeries":
        return cls(x_trunc, q_trunc, {})

    @classmethod
    def one(cls, x_trunc: int, q_trunc: int) -> "XQSeries":
        return cls(x_trunc, q_trunc, {0: QSeries.one(q_trunc)})

    @classmethod
    def monomial(cls, x_deg: int, q_exp: int, x_trunc: int, q_trunc: int,
                 coeff: int = 1) -> "XQSeries":
        """coeff * x^x_deg * q^q_exp, zero if either exponent overflows."""
        if x_deg < 0 or q_exp < 0:
            raise ValueError("negative exponents are not representable")
        if x_deg > x_trunc:
            return cls.zero(x_trunc, q_trunc)
        return cls(x_trunc, q_trunc, {x_deg: QSeries.monomial(q_exp, q_trunc, coeff)})

    @classmethod
    def from_q(cls, series: QSeries, x_trunc: int) -> "XQSeries":
        """Embed a univariate series at x-degree 0."""
        return cls(x_trunc, series.trunc, {0: series})

    # -- accessors ----------------------------------------------------------

    def slice(self, x_deg: int) -> QSeries:
        """Coefficient of x^x_deg as a QSeries (zero when absent)."""
        if not 0 <= x_deg <= self.x_trunc:
            raise IndexError(f"x-degree {x_deg} outside [0, {self.x_trunc}]")
        s = self.terms.get(x_deg)
        return s if s is not None else QSeries.zero(self.q_trunc)

    def x_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "XQSeries") -> None:
        if self.x_trunc != other.x_trunc or self.q_trunc != other.q_trunc:
            raise TruncationMismatchError(
                f"truncation mismatch: ({self.x_trunc}, {self.q_trunc}) vs "
                f"({other.x_trunc}, {other.q_trunc})"
            )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "XQSeries") -> "XQSeries":
        if not isinstance(other, XQSeries):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for deg, s in other.terms.items():
            cur = merged.get(deg)
            merged[deg] = s if cur is None else cur + s
        return XQSeries(self.x_trunc, self.q_trunc, merged)

    def __sub__(self, other: "XQSeries") -> "XQSeries":
        if not isinstance(other, XQSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "XQSeries":
        return XQSeries(self.x_trunc, self.q_trunc,
                        {deg: -s for deg, s in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return XQSeries(self.x_trunc, self.q_trunc,
                            {d: s * other for d, s in self.terms.items()})
        if isinstance(other, QSeries):
            other = XQSeries.from_q(other, self.x_trunc)
        if not isinstance(other, XQSeries):
            return NotImplemented
        self._check(other)
        nq = self.q_trunc
        acc: dict[int, list[int]] = {}
        for da, sa in self.terms.items():
            for db, sb in other.terms.items():
                deg = da + db
                if deg > self.x_trunc:
                    continue
                buf = acc.get(deg)
                if buf is None:
                    buf = [0] * (nq + 1)
                    acc[deg] = buf
                _mul_into(buf, sa.coeffs, sb.coeffs, nq)
        return _from_buffers(self.x_trunc, nq, acc)

    __rmul__ = __mul__

    def inverse(self) -> "XQSeries":
        """Inverse by forward recurrence on x-degree; needs a unit x^0 slice."""
        a0 = self.slice(0)
        b0 = a0.inverse()  # raises NonUnitConstantError when not a unit
        nq = self.q_trunc
        out: dict[int, QSeries] = {0: b0}
        higher = [(d, s) for d, s in sorted(self.terms.items()) if d > 0]
        for n in range(1, self.x_trunc + 1):
            buf = [0] * (nq + 1)
            for d, s in higher:
                if d > n:
                    break
                prev = out.get(n - d)
                if prev is not None:
                    _mul_into(buf, s.coeffs, prev.coeffs, nq)
            if any(buf):
                out[n] = -(b0 * QSeries(nq, tuple(buf)))
        return XQSeries(self.x_trunc, nq, out)

    # -- substitutions ------------------------------------------------------

    def substitute_x_power(self, t: int) -> QSeries:
        """Substitute x = q^t (t >= 1) or x = 1 (t = 0), as a QSeries.

        The result is declared valid to q_trunc.  That is an honest claim
        whenever every x-degree-n slice of the underlying object carries at
        least q^n, which holds for all series built here (each tracked part
        contributes at least 1 to the weight); x_trunc = q_trunc then covers
        every x-degree that could touch the retained q-range.
        """
        if t < 0:
            raise ValueError(f"substitution power must be >= 0, got {t}")
        nq = self.q_trunc
        out = [0] * (nq + 1)
        for deg, s in self.terms.items():
            base = t * deg
            if base > nq:
                continue
            for e in range(nq + 1 - base):
                c = s.coeffs[e]
                if c:
                    out[base + e] += c
        return QSeries(nq, tuple(out))

    def staircase(self, d: int) -> "XQSeries":
        """Multiply the x-degree-n slice by q^(d*n*(n-1)/2)."""
        if d < 0:
            raise ValueError(f"staircase parameter must be >= 0, got {d}")
        out: dict[int, QSeries] = {}
        for deg, s in self.terms.items():
            shift = d * deg * (deg - 1) // 2
            if shift <= self.q_trunc:
                out[deg] = s.shifted(shift)
        return XQSeries(self.x_trunc, self.q_trunc, out)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"x^{deg}*({self.terms[deg]})" for deg in sorted(self.terms)
        )


def _mul_into(buf: list[int], a, b, trunc: int) -> None:
    """buf += a*b truncated at trunc, all raw coefficient tuples."""
    for i, ai in enumerate(a):
        if ai:
            for j in range(trunc - i + 1):
                bj = b[j]
                if bj:
                    buf[i + j] += ai * bj


def _from_buffers(x_trunc: int, q_trunc: int, acc: Mapping[int, list[int]]) -> XQSeries:
    return XQSeries(x_trunc, q_trunc,
                    {d: QSeries(q_trunc, tuple(buf)) for d, buf in acc.items()})


def xq_pochhammer(sign: int, base_exp: int, step_exp: int, count: int | None,
                  x_deg_per_factor: int, x_trunc: int, q_trunc: int) -> XQSeries:
    """Product of factors (1 - sign * x^x_deg_per_factor * q^(base_exp + j*step_exp)).

    base_exp = 0 is allowed when each factor carries a positive x-degree
    (e.g. products of (1 + x q^j) starting at j = 0); the q-exponent still
    increases with j, so the infinite-product stopping rule applies as usual.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if base_exp < 0 or step_exp < 1:
        raise ValueError("need base_exp >= 0 and step_exp >= 1")
    if base_exp == 0 and x_deg_per_factor == 0:
        raise ValueError("a factor with no x part needs base_exp >= 1")
    if x_deg_per_factor < 0:
        raise ValueError("x-degree per factor must be >= 0")
    if count is not None and count < 0:
        raise ValueError(f"count must be >= 0 or None, got {count}")

    table: dict[int, list[int]] = {0: [0] * (q_trunc + 1)}
    table[0][0] = 1
    d = x_deg_per_factor
    j = 0
    while count is None or j < count:
        e = base_exp + j * step_exp
        if e > q_trunc or d > x_trunc:
            break
        # multiply by (1 - sign*x^d*q^e): walk x-degrees top-down
        for deg in sorted(table, reverse=True):
            target = deg + d
            if target > x_trunc:
                continue
            src = table[deg]
            dst = table.get(target)
            if dst is None and d > 0:
                dst = [0] * (q_trunc + 1)
                table[target] = dst
            if d == 0:
                # pure q factor: in-place descend
                for i in range(q_trunc - e, -1, -1):
                    if src[i]:
                        src[i + e] -= sign * src[i]
            else:
                for i in range(q_trunc - e + 1):
                    if src[i]:
                        dst[i + e] -= sign * src[i]
        j += 1
    return _from_buffers(x_trunc, q_trunc, table)
