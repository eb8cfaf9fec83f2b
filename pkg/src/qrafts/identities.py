"""Identity checks: formula builders, enumeration oracles, and the registry.

Every check compares two independently built series to a truncation order and
reports the first differing coefficient, if any.  Formula sides are finite
q-sums with provable cutoffs; the cutoff for each summation index is the point
where the summand's minimal exponent exceeds the truncation order, and each
builder takes a ``_slack`` knob that deliberately runs past the cutoff so the
tests can confirm nothing retained ever changes.

Oracle sides are brute-force enumerations of distinct-part partitions.  The
designation-heavy oracles (signed sums, exactly-k-raft counts, no-k-sequence
counts) share one fused sweep per truncation order, cached per process, so a
full profile run enumerates the partitions once instead of once per check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .partitions import iter_distinct_parts, iter_gap_parts
from .rafts import enumerate_minimal
from .series import (
    PochhammerSpec,
    QSeries,
    XQSeries,
    gaussian_binomial,
    pochhammer,
    xq_pochhammer,
)

__all__ = [
    "CheckReport",
    "FirstDiff",
    "IdentityCheck",
    "PROFILES",
    "REGISTRY",
    "all_names",
    "first_difference",
    "run_check",
    "run_many",
]

PROFILES = {"quick": 30, "standard": 60, "deep": 100}


def _b2(a: int) -> int:
    return a * (a - 1) // 2


# ---------------------------------------------------------------------------
# cached Pochhammer pieces


@lru_cache(maxsize=None)
def _poch(sign: int, base: int, step: int, count: int | None, trunc: int) -> QSeries:
    return pochhammer(PochhammerSpec(sign, base, step, count), trunc)


@lru_cache(maxsize=None)
def _inv_poch(sign: int, base: int, step: int, count: int | None, trunc: int) -> QSeries:
    return _poch(sign, base, step, count, trunc).inverse()


@lru_cache(maxsize=None)
def rr_product(residues: tuple[int, ...], modulus: int, trunc: int) -> QSeries:
    """1 / prod_{r in residues} (q^r; q^modulus)_inf."""
    prod = QSeries.one(trunc)
    for r in residues:
        prod = prod * _poch(1, r, modulus, None, trunc)
    return prod.inverse()


# ---------------------------------------------------------------------------
# univariate formula sides


def slater19_sum(trunc: int, _slack: int = 0) -> QSeries:
    """(-q;q)_inf * sum_j (-1)^j q^(3j^2) / ((q^2;q^2)_j (-q;q)_{2j})."""
    total = QSeries.zero(trunc)
    j = extra = 0
    while True:
        if 3 * j * j > trunc:
            extra += 1
            if extra > _slack:
                break
        term = QSeries.monomial(3 * j * j, trunc) \
            * _inv_poch(1, 2, 2, j, trunc) * _inv_poch(-1, 1, 1, 2 * j, trunc)
        total = total + (term if j % 2 == 0 else -term)
        j += 1
    return _poch(-1, 1, 1, None, trunc) * total


def slater15_sum(trunc: int, _slack: int = 0) -> QSeries:
    """(-q;q)_inf * sum_j (-1)^j q^(3j^2-2j) / ((q^2;q^2)_j (-q;q)_{2j})."""
    total = QSeries.zero(trunc)
    j = extra = 0
    while True:
        if 3 * j * j - 2 * j > trunc:
            extra += 1
            if extra > _slack:
                break
        term = QSeries.monomial(3 * j * j - 2 * j, trunc) \
            * _inv_poch(1, 2, 2, j, trunc) * _inv_poch(-1, 1, 1, 2 * j, trunc)
        total = total + (term if j % 2 == 0 else -term)
        j += 1
    return _poch(-1, 1, 1, None, trunc) * total


def slater15_alt_sum(trunc: int, _slack: int = 0) -> QSeries:
    """(-q;q)_inf * sum_j (-1)^j q^(3j^2+2j) / ((q^2;q^2)_j (-q;q)_{2j+1})."""
    total = QSeries.zero(trunc)
    j = extra = 0
    while True:
        if 3 * j * j + 2 * j > trunc:
            extra += 1
            if extra > _slack:
                break
        term = QSeries.monomial(3 * j * j + 2 * j, trunc) \
            * _inv_poch(1, 2, 2, j, trunc) * _inv_poch(-1, 1, 1, 2 * j + 1, trunc)
        total = total + (term if j % 2 == 0 else -term)
        j += 1
    return _poch(-1, 1, 1, None, trunc) * total


def minimal_exponent(k: int, m: int) -> int:
    """Weight of the lightest k-raft minimal configuration with r_k = m+3k-2.

    binom(3k+m, 2) - 3 binom(k, 2) counts the full prefix staircase minus the
    tightest missing parts; the reversed Gaussian binomial soaks up a further
    m(k-1) at most, which the fused form subtracts up front so only ordinary
    (non-reciprocal) q-binomials appear.  The result is >= 3k^2, increasing
    in m.
    """
    return _b2(3 * k + m) - 3 * _b2(k) - m * (k - 1)


def minimal_gf(k: int, trunc: int, _slack: int = 0) -> QSeries:
    """Generating function of minimal k-raft configurations by weight.

    sum_m q^minimal_exponent(k, m) [m+k-1 choose k-1]_q (-q^(3k+m+1); q)_inf;
    the q^(-1)-binomial of the profile count is already folded into the
    exponent (reciprocal law), so coefficients stay plain polynomials.
    """
    if k < 1:
        raise ValueError(f"raft count must be >= 1, got {k}")
    total = QSeries.zero(trunc)
    m = extra = 0
    while True:
        e = minimal_exponent(k, m)
        if e > trunc:
            extra += 1
            if extra > _slack:
                break
        term = QSeries.monomial(e, trunc) \
            * gaussian_binomial(m + k - 1, k - 1, trunc) \
            * _poch(-1, 3 * k + m + 1, 1, None, trunc)
        total = total + term
        m += 1
    return total


def rafted_gf(k: int, trunc: int, _slack: int = 0) -> QSeries:
    """Generating function of all k-raft configurations: minimal_gf / (q^2;q^2)_k."""
    return minimal_gf(k, trunc, _slack) * _inv_poch(1, 2, 2, k, trunc)


def no_raft_gf(trunc: int, _slack: int = 0) -> QSeries:
    """(-q;q)_inf + sum_{k>=1} (-1)^k rafted_gf(k): the signed designation sum."""
    total = _poch(-1, 1, 1, None, trunc)
    k = 1
    extra = 0
    while True:
        if 3 * k * k > trunc:
            extra += 1
            if extra > _slack:
                break
        term = rafted_gf(k, trunc, _slack)
        total = total + (-term if k % 2 else term)
        k += 1
    return total


def qgauss_lhs(a_exp: int, b_exp: int, c_exp: int, trunc: int, _slack: int = 0) -> QSeries:
    """sum_n (q^A;q)_n (q^B;q)_n q^((C-A-B)n) / ((q;q)_n (q^C;q)_n)."""
    gap = c_exp - a_exp - b_exp
    if a_exp < 1 or b_exp < 1 or gap < 1:
        raise ValueError("need a_exp, b_exp >= 1 and c_exp > a_exp + b_exp")
    total = QSeries.zero(trunc)
    n = extra = 0
    while True:
        if gap * n > trunc:
            extra += 1
            if extra > _slack:
                break
        term = _poch(1, a_exp, 1, n, trunc) * _poch(1, b_exp, 1, n, trunc) \
            * _inv_poch(1, 1, 1, n, trunc) * _inv_poch(1, c_exp, 1, n, trunc)
        total = total + term.shifted(gap * n)
        n += 1
    return total


def qgauss_rhs(a_exp: int, b_exp: int, c_exp: int, trunc: int) -> QSeries:
    """(q^(C-A);q)_inf (q^(C-B);q)_inf / ((q^C;q)_inf (q^(C-A-B);q)_inf)."""
    gap = c_exp - a_exp - b_exp
    num = _poch(1, c_exp - a_exp, 1, None, trunc) * _poch(1, c_exp - b_exp, 1, None, trunc)
    return num * _inv_poch(1, c_exp, 1, None, trunc) * _inv_poch(1, gap, 1, None, trunc)


def gauss_step_lhs(k: int, trunc: int, _slack: int = 0) -> QSeries:
    """sum_m q^(m(m-1)/2 + (2k+1)m) (q^k;q)_m / ((q;q)_m (-q^(3k+1);q)_m)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    total = QSeries.zero(trunc)
    m = extra = 0
    while True:
        e = _b2(m) + (2 * k + 1) * m
        if e > trunc:
            extra += 1
            if extra > _slack:
                break
        term = _poch(1, k, 1, m, trunc) \
            * _inv_poch(1, 1, 1, m, trunc) * _inv_poch(-1, 3 * k + 1, 1, m, trunc)
        total = total + term.shifted(e)
        m += 1
    return total


def gauss_step_rhs(k: int, trunc: int) -> QSeries:
    """(-q^(2k+1);q)_inf / (-q^(3k+1);q)_inf."""
    return _poch(-1, 2 * k + 1, 1, None, trunc) * _inv_poch(-1, 3 * k + 1, 1, None, trunc)


# ---------------------------------------------------------------------------
# bivariate formula sides


@lru_cache(maxsize=8)
def master_lhs(x_trunc: int, q_trunc: int, _slack: int = 0) -> XQSeries:
    """(-xq;q)_inf * sum_k (-1)^k q^(3k^2) x^(2k) / ((q^2;q^2)_k (-xq;q)_{2k})."""
    total = XQSeries.zero(x_trunc, q_trunc)
    k = extra = 0
    while True:
        if 3 * k * k > q_trunc or 2 * k > x_trunc:
            extra += 1
            if extra > _slack:
                break
        term = XQSeries.monomial(2 * k, 3 * k * k, x_trunc, q_trunc) \
            * _inv_poch(1, 2, 2, k, q_trunc) \
            * xq_pochhammer(-1, 1, 1, 2 * k, 1, x_trunc, q_trunc).inverse()
        total = total + (-term if k % 2 else term)
        k += 1
    return xq_pochhammer(-1, 1, 1, None, 1, x_trunc, q_trunc) * total


def master_rhs(x_trunc: int, q_trunc: int, _slack: int = 0) -> XQSeries:
    """sum_n q^(n^2) x^n / (q;q)_n."""
    total = XQSeries.zero(x_trunc, q_trunc)
    n = extra = 0
    while True:
        if n * n > q_trunc or n > x_trunc:
            extra += 1
            if extra > _slack:
                break
        term = XQSeries.monomial(n, n * n, x_trunc, q_trunc) * _inv_poch(1, 1, 1, n, q_trunc)
        total = total + term
        n += 1
    return total


def bmn_gf(k: int, x_trunc: int, q_trunc: int, _slack: int = 0) -> XQSeries:
    """C_k(x;q): double sum over j, r of
    (-1)^j x^(kj+r) q^((r+kj)(r+kj+1)/2 + k j(j-1)/2) / ((q^k;q^k)_j (q;q)_r);
    generates partitions into distinct parts with no k consecutive parts,
    x marking the number of parts.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    acc: dict[int, list[int]] = {}
    j = extra_j = 0
    while True:
        base = k * j * (k * j + 1) // 2 + k * _b2(j)
        if base > q_trunc or k * j > x_trunc:
            extra_j += 1
            if extra_j > _slack:
                break
        inv_j = _inv_poch(1, k, k, j, q_trunc)
        sign = -1 if j % 2 else 1
        r = extra_r = 0
        while True:
            a = r + k * j
            e = a * (a + 1) // 2 + k * _b2(j)
            xd = k * j + r
            if e > q_trunc or xd > x_trunc:
                extra_r += 1
                if extra_r > _slack:
                    break
            if e <= q_trunc and xd <= x_trunc:
                term = inv_j * _inv_poch(1, 1, 1, r, q_trunc)
                buf = acc.setdefault(xd, [0] * (q_trunc + 1))
                for i in range(q_trunc + 1 - e):
                    c = term.coeffs[i]
                    if c:
                        buf[i + e] += sign * c
            r += 1
        j += 1
    return XQSeries(x_trunc, q_trunc,
                    {d: QSeries(q_trunc, tuple(b)) for d, b in acc.items()})


def staircase_gf(d: int, x_trunc: int, q_trunc: int, _slack: int = 0) -> XQSeries:
    """Triple sum generating (2+d)-distinct partitions, x marking parts.

    sum over n, k, m of
      q^(binom(n+1,2) + d binom(n,2)) / (q;q)_n
      * (-1)^k q^(3k^2 + d binom(2k,2)) / (q^2;q^2)_k
      * (q^(2k);q)_m q^(d binom(m,2)) (-q)^m / (q;q)_m
      * x^(n+2k+m) * q^(2dnk + dnm + 2dkm).

    The k = 0 column collapses to m = 0 because (1;q)_m vanishes; the running
    numerator product makes that automatic.
    """
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    acc: dict[int, list[int]] = {}
    n = extra_n = 0
    while True:
        base_n = _b2(n + 1) + d * _b2(n)
        if base_n > q_trunc or n > x_trunc:
            extra_n += 1
            if extra_n > _slack:
                break
        inv_n = _inv_poch(1, 1, 1, n, q_trunc)
        k = extra_k = 0
        while True:
            base_k = 3 * k * k + d * _b2(2 * k)
            e_nk = base_n + base_k + 2 * d * n * k
            if e_nk > q_trunc or n + 2 * k > x_trunc:
                extra_k += 1
                if extra_k > _slack:
                    break
            u = inv_n * _inv_poch(1, 2, 2, k, q_trunc)
            sign_k = -1 if k % 2 else 1
            num = QSeries.one(q_trunc)  # running (q^(2k); q)_m
            m = extra_m = 0
            while True:
                e = e_nk + d * _b2(m) + m + d * n * m + 2 * d * k * m
                xd = n + 2 * k + m
                if e > q_trunc or xd > x_trunc:
                    extra_m += 1
                    if extra_m > _slack:
                        break
                if m > 0:
                    fac = 2 * k + m - 1  # next factor (1 - q^(2k+m-1))
                    num = num - num.shifted(fac) if fac > 0 else QSeries.zero(q_trunc)
                    if num.is_zero():
                        break
                if e <= q_trunc and xd <= x_trunc:
                    term = u * _inv_poch(1, 1, 1, m, q_trunc) * num
                    sign = sign_k * (-1 if m % 2 else 1)
                    buf = acc.setdefault(xd, [0] * (q_trunc + 1))
                    for i in range(q_trunc + 1 - e):
                        c = term.coeffs[i]
                        if c:
                            buf[i + e] += sign * c
                m += 1
            k += 1
        n += 1
    return XQSeries(x_trunc, q_trunc,
                    {deg: QSeries(q_trunc, tuple(b)) for deg, b in acc.items()})


def minimal_gf_x(k: int, x_trunc: int, q_trunc: int) -> XQSeries:
    """Minimal-configuration sum with x marking the number of parts:
    sum_m x^(2k+m) q^minimal_exponent(k,m) [m+k-1 choose k-1]_q (-xq^(3k+m+1);q)_inf."""
    if k < 1:
        raise ValueError(f"raft count must be >= 1, got {k}")
    total = XQSeries.zero(x_trunc, q_trunc)
    m = 0
    while True:
        e = minimal_exponent(k, m)
        if e > q_trunc:
            break
        term = XQSeries.monomial(2 * k + m, e, x_trunc, q_trunc) \
            * gaussian_binomial(m + k - 1, k - 1, q_trunc) \
            * xq_pochhammer(-1, 3 * k + m + 1, 1, None, 1, x_trunc, q_trunc)
        total = total + term
        m += 1
    return total


def rafted_gf_x(k: int, x_trunc: int, q_trunc: int) -> XQSeries:
    """All k-raft configurations, x marking parts (moves preserve the count)."""
    return minimal_gf_x(k, x_trunc, q_trunc) * _inv_poch(1, 2, 2, k, q_trunc)


# ---------------------------------------------------------------------------
# enumeration oracles


def d_distinct_q(d: int, trunc: int) -> QSeries:
    """Count of partitions with part gaps >= d, by weight (brute force)."""
    buf = [0] * (trunc + 1)
    for parts in iter_gap_parts(trunc, d):
        buf[sum(parts)] += 1
    return QSeries(trunc, tuple(buf))


def d_distinct_xq(d: int, x_trunc: int, q_trunc: int) -> XQSeries:
    """Gap->=d partitions by (number of parts, weight), brute force."""
    acc: dict[int, list[int]] = {}
    for parts in iter_gap_parts(q_trunc, d):
        xd = len(parts)
        if xd > x_trunc:
            continue
        acc.setdefault(xd, [0] * (q_trunc + 1))[sum(parts)] += 1
    return XQSeries(x_trunc, q_trunc,
                    {deg: QSeries(q_trunc, tuple(b)) for deg, b in acc.items()})


def minimal_oracle(k: int, trunc: int) -> QSeries:
    """Weight series of enumerate_minimal(k): the constructive enumeration."""
    buf = [0] * (trunc + 1)
    for rp in enumerate_minimal(k, trunc):
        buf[rp.weight] += 1
    return QSeries(trunc, tuple(buf))


@lru_cache(maxsize=3)
def _sweep(q_trunc: int):
    """One fused pass over all distinct-part partitions of weight <= q_trunc.

    Collects, per partition: the signed sum over all 2^R raft designations,
    the count of designations of each size 1..3, and no-k-sequence indicators
    for k = 2, 3, 4 keyed by part count.  Every accumulator here is pure
    enumeration; no q-series algebra is involved.
    """
    n1 = q_trunc + 1
    signed = [0] * n1
    rafted = {1: [0] * n1, 2: [0] * n1, 3: [0] * n1}
    kseq: dict[int, dict[int, list[int]]] = {2: {}, 3: {}, 4: {}}
    for parts in iter_distinct_parts(q_trunc):
        w = sum(parts)
        runlen = 1
        maxrun = 0
        big_runs = 0
        prev = None
        for p in parts:
            if prev is not None and p == prev + 1:
                runlen += 1
            else:
                if runlen >= 2:
                    big_runs += 1
                if runlen > maxrun:
                    maxrun = runlen
                runlen = 1
            prev = p
        if runlen >= 2:
            big_runs += 1
        if runlen > maxrun:
            maxrun = runlen
        if parts:
            length = len(parts)
            for kk in (2, 3, 4):
                if maxrun < kk:
                    buf = kseq[kk].get(length)
                    if buf is None:
                        buf = [0] * n1
                        kseq[kk][length] = buf
                    buf[w] += 1
        else:
            for kk in (2, 3, 4):
                kseq[kk].setdefault(0, [0] * n1)[0] += 1
        if big_runs == 0:
            signed[w] += 1
        else:
            for mask in range(1 << big_runs):
                bits = mask.bit_count()
                signed[w] += -1 if bits & 1 else 1
                if 1 <= bits <= 3:
                    rafted[bits][w] += 1
    return signed, rafted, kseq


def signed_designation_oracle(trunc: int) -> QSeries:
    """sum over partitions and designations of (-1)^(number of rafts) q^weight."""
    signed, _, _ = _sweep(trunc)
    return QSeries(trunc, tuple(signed))


def rafted_oracle(k: int, trunc: int) -> QSeries:
    """Count of designations with exactly k rafts, by weight (k <= 3 cached)."""
    if k not in (1, 2, 3):
        raise ValueError(f"the fused sweep covers k in 1..3, got {k}")
    _, rafted, _ = _sweep(trunc)
    return QSeries(trunc, tuple(rafted[k]))


def no_kseq_oracle(k: int, x_trunc: int, q_trunc: int) -> XQSeries:
    """Partitions with no run of length >= k, by (part count, weight)."""
    if k not in (2, 3, 4):
        raise ValueError(f"the fused sweep covers k in 2..4, got {k}")
    _, _, kseq = _sweep(q_trunc)
    terms = {}
    for length, buf in kseq[k].items():
        if length <= x_trunc:
            terms[length] = QSeries(q_trunc, tuple(buf))
    return XQSeries(x_trunc, q_trunc, terms)


# ---------------------------------------------------------------------------
# reports and the registry


@dataclass(frozen=True, slots=True)
class FirstDiff:
    """Location and values of the first coefficient where two sides differ."""

    x: int | None
    q: int
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        return {"x": self.x, "q": self.q, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True, slots=True)
class CheckReport:
    name: str
    q_trunc: int
    x_trunc: int | None
    passed: bool
    first_diff: FirstDiff | None
    millis: int

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "q_trunc": self.q_trunc,
            "x_trunc": self.x_trunc,
            "passed": self.passed,
            "first_diff": self.first_diff.to_json_dict() if self.first_diff else None,
            "millis": self.millis,
        }


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    """Two builders for the same series; bivariate builders take (Nx, Nq)."""

    name: str
    bivariate: bool
    lhs: Callable
    rhs: Callable
    description: str


def first_difference(lhs, rhs) -> FirstDiff | None:
    """First differing coefficient, scanning q ascending (then x-degree)."""
    if isinstance(lhs, QSeries) and isinstance(rhs, QSeries):
        if lhs.trunc != rhs.trunc:
            raise ValueError("cannot compare series at different truncations")
        for e, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if a != b:
                return FirstDiff(None, e, str(a), str(b))
        return None
    if isinstance(lhs, XQSeries) and isinstance(rhs, XQSeries):
        if (lhs.x_trunc, lhs.q_trunc) != (rhs.x_trunc, rhs.q_trunc):
            raise ValueError("cannot compare series at different truncations")
        degrees = sorted(set(lhs.terms) | set(rhs.terms))
        slices = [(d, lhs.slice(d).coeffs, rhs.slice(d).coeffs) for d in degrees]
        for e in range(lhs.q_trunc + 1):
            for d, a, b in slices:
                if a[e] != b[e]:
                    return FirstDiff(d, e, str(a[e]), str(b[e]))
        return None
    raise TypeError(f"cannot compare {type(lhs).__name__} with {type(rhs).__name__}")


def run_check(check: IdentityCheck, q_trunc: int, x_trunc: int | None = None) -> CheckReport:
    """Build both sides, locate the first difference, time the whole thing."""
    t0 = time.perf_counter()
    if check.bivariate:
        xt = q_trunc if x_trunc is None else x_trunc
        lhs = check.lhs(xt, q_trunc)
        rhs = check.rhs(xt, q_trunc)
    else:
        xt = None
        lhs = check.lhs(q_trunc)
        rhs = check.rhs(q_trunc)
    diff = first_difference(lhs, rhs)
    millis = int((time.perf_counter() - t0) * 1000)
    return CheckReport(check.name, q_trunc, xt, diff is None, diff, millis)


REGISTRY: dict[str, IdentityCheck] = {}


def _register(name: str, bivariate: bool, lhs, rhs, description: str) -> None:
    REGISTRY[name] = IdentityCheck(name, bivariate, lhs, rhs, description)


def all_names() -> list[str]:
    return list(REGISTRY)


def run_many(names, q_trunc: int, x_trunc: int | None = None) -> list[CheckReport]:
    """Run the named checks in registry order; unknown names raise ValueError."""
    wanted = list(names)
    for n in wanted:
        if n not in REGISTRY:
            raise ValueError(f"unknown-identity: {n}")
    return [run_check(REGISTRY[n], q_trunc, x_trunc)
            for n in REGISTRY if n in set(wanted)]


def _rr1(trunc: int) -> QSeries:
    return rr_product((1, 4), 5, trunc)


def _rr2(trunc: int) -> QSeries:
    return rr_product((2, 3), 5, trunc)


_register(
    "slater-19", False, slater19_sum, _rr1,
    "alternating raft sum against the modulus-5 product for gaps >= 2",
)
_register(
    "slater-15", False, slater15_sum, _rr2,
    "shifted alternating raft sum against the complementary modulus-5 product",
)
_register(
    "slater-15-alt", False, slater15_alt_sum, _rr2,
    "companion form of slater-15 with the same product side (x = q in the master)",
)
for _k in (1, 2, 3):
    _register(
        f"minimal-gf-k{_k}", False,
        (lambda N, k=_k: minimal_gf(k, N)),
        (lambda N, k=_k: minimal_oracle(k, N)),
        f"closed form vs construction for minimal {_k}-raft configurations",
    )
    _register(
        f"rafted-gf-k{_k}", False,
        (lambda N, k=_k: rafted_gf(k, N)),
        (lambda N, k=_k: rafted_oracle(k, N)),
        f"closed form vs designation count for exactly {_k} rafts",
    )
_register(
    "inclusion-exclusion", False, no_raft_gf, signed_designation_oracle,
    "signed designation sum collapses to run-free partitions",
)
_register(
    "inclusion-exclusion-2-distinct", False, no_raft_gf,
    (lambda N: d_distinct_q(2, N)),
    "the same signed sum counts partitions with gaps >= 2",
)
_register(
    "inclusion-exclusion-rr1", False, no_raft_gf, _rr1,
    "the same signed sum equals the modulus-5 product",
)
_register(
    "master-identity", True, master_lhs, master_rhs,
    "bivariate raft sum equals the classical gap->=2 double series in x, q",
)
_register(
    "master-at-x-q", False,
    (lambda N: master_lhs(N, N).substitute_x_power(1)),
    slater15_alt_sum,
    "x = q specialisation of the master identity hits the slater-15-alt sum",
)
_register(
    "master-at-x-1", False,
    (lambda N: master_lhs(N, N).substitute_x_power(0)),
    slater19_sum,
    "x = 1 specialisation of the master identity hits the slater-19 sum",
)
for _k in (2, 3, 4):
    _register(
        f"bmn-k{_k}", True,
        (lambda Nx, Nq, k=_k: bmn_gf(k, Nx, Nq)),
        (lambda Nx, Nq, k=_k: no_kseq_oracle(k, Nx, Nq)),
        f"double sum vs brute count of partitions with no {_k}-sequence",
    )
_register(
    "bmn-c2-slater-19", False,
    (lambda N: bmn_gf(2, N, N).substitute_x_power(0)),
    slater19_sum,
    "C_2(1; q) agrees with the slater-19 sum side",
)
_register(
    "bmn-c2-slater-15", False,
    (lambda N: bmn_gf(2, N, N).substitute_x_power(1)),
    slater15_sum,
    "C_2(q; q) agrees with the slater-15 sum side",
)
for _d in (0, 1, 2, 3):
    _register(
        f"staircase-d{_d}", True,
        (lambda Nx, Nq, d=_d: staircase_gf(d, Nx, Nq)),
        (lambda Nx, Nq, d=_d: d_distinct_xq(2 + d, Nx, Nq)),
        f"staircase triple sum vs brute count of gap->={2 + _d} partitions",
    )
_register(
    "staircase-d0-master", True, (lambda Nx, Nq: staircase_gf(0, Nx, Nq)), master_lhs,
    "the d = 0 triple sum re-expands the master identity's sum side",
)
for _t in ((1, 1, 3), (1, 2, 4), (2, 2, 5), (1, 1, 4), (2, 3, 7), (1, 3, 5)):
    _register(
        f"q-gauss-{_t[0]}-{_t[1]}-{_t[2]}", False,
        (lambda N, t=_t: qgauss_lhs(*t, N)),
        (lambda N, t=_t: qgauss_rhs(*t, N)),
        f"summable hypergeometric case at (q^{_t[0]}, q^{_t[1]}, q^{_t[2]})",
    )
for _k in (1, 2, 3):
    _register(
        f"proof-gauss-step-k{_k}", False,
        (lambda N, k=_k: gauss_step_lhs(k, N)),
        (lambda N, k=_k: gauss_step_rhs(k, N)),
        f"limiting summation step at k = {_k}",
    )
