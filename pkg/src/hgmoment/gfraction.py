"""Wall continued fractions.

A g-fraction is

    F(z) = 1 / (1 - (1-g0) g1 z / (1 - (1-g1) g2 z / (1 - ...)))

with every g_n in [0, 1].  Such an expansion exists exactly when F is the
Cauchy transform of a probability measure on [0, 1], which makes the
conversion below an independent membership oracle: run the quotient-
difference algorithm on the series coefficients to get the C-fraction
numerators a_n, then peel off g-parameters greedily.

Greedy means g0 := 0.  The fraction only determines the products
a_n = (1-g_{n-1}) g_n, and g_{n+1} = a_{n+1}/(1-g_n) is increasing in g_n,
so the minimal admissible g0 minimizes every later g_n; greedy feasibility
is therefore equivalent to feasibility.  A mid-stream g_n = 1 terminates
the fraction: no continuation exists unless all later numerators vanish.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ConvergenceError, ParameterError, SlitError
from .scalar import INT_TOL

_FLOAT_QD_ZERO = 1e-250
_DENOM_FLOOR = 1e-280


@dataclass(frozen=True)
class GFraction:
    """A finite prefix g_0, ..., g_N of Wall parameters."""

    g: tuple
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))

    def __len__(self):
        return len(self.g)

    def __getitem__(self, i):
        return self.g[i]

    def numerators(self) -> "CFractionCoeffs":
        a = tuple(
            (1 - self.g[n - 1]) * self.g[n] for n in range(1, len(self.g))
        )
        return CFractionCoeffs(a, self.exact)

    def in_range(self, tol: float = 0.0) -> bool:
        return all(-tol <= float(gn) <= 1.0 + tol for gn in self.g)


@dataclass(frozen=True)
class CFractionCoeffs:
    """Numerators a_n of the C-fraction 1/(1 - a1 z/(1 - a2 z/...))."""

    a: tuple
    exact: bool = False

    def __len__(self):
        return len(self.a)

    def __getitem__(self, i):
        return self.a[i]


class ConversionStatus(Enum):
    OK = "ok"
    TERMINATED = "terminated"  # rational series: the fraction is finite
    OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class ConversionResult:
    status: ConversionStatus
    gfraction: GFraction
    coeffs: CFractionCoeffs
    fail_index: Optional[int] = None
    fail_value: Optional[object] = None

    @property
    def in_t(self) -> bool:
        """Whether the conversion certifies membership (possibly finite)."""
        return self.status is not ConversionStatus.OUT_OF_RANGE


def eval_gfraction(g, z, depth: Optional[int] = None) -> complex:
    """Evaluate the depth-truncated g-fraction by backward recurrence.

    The tail is initialized to 1.  Raises ``ConvergenceError`` when an
    intermediate denominator falls below 1e-280 in modulus and
    ``SlitError`` for z on [1, +inf).
    """
    gs = g.g if isinstance(g, GFraction) else tuple(g)
    z = complex(z)
    if z.real >= 1.0 and abs(z.imag) < 1e-300:
        raise SlitError(f"z={z!r} lies on the slit")
    n_avail = len(gs) - 1
    if depth is None:
        depth = n_avail
    if depth > n_avail:
        raise ParameterError(f"depth {depth} exceeds available parameters {n_avail}")
    a = [float((1 - gs[n - 1]) * gs[n]) for n in range(1, depth + 1)]
    t = 1.0 + 0.0j
    for n in range(depth, 0, -1):
        t = 1.0 - a[n - 1] * z / t
        if abs(t) < _DENOM_FLOOR:
            raise ConvergenceError(
                f"vanishing denominator at level {n} of the continued fraction"
            )
    return 1.0 / t


def gauss_g_params(a, b, c, length: int) -> GFraction:
    """Wall parameters of the Gauss continued fraction for the ratio
    F(a, b+1; c+1; z) / F(a, b; c; z):

        g_{2k}   = (c - a + k) / (c + 2k)
        g_{2k+1} = (c - b + k) / (c + 2k + 1)

    which lie in [0, 1] exactly when 0 <= a <= c and -1 <= b <= c.
    Exact arithmetic is used when the inputs are ints or Fractions.
    """
    exact = all(isinstance(v, (int, Fraction)) for v in (a, b, c))
    if exact:
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
    else:
        a, b, c = float(a), float(b), float(c)
    if c <= 0 or not (0 <= a <= c) or not (-1 <= b <= c):
        raise ParameterError(
            "Gauss fraction parameters need 0 <= a <= c, -1 <= b <= c, c > 0"
        )
    out = []
    for n in range(length + 1):
        k = n // 2
        if n % 2 == 0:
            out.append((c - a + k) / (c + 2 * k))
        else:
            out.append((c - b + k) / (c + 2 * k + 1))
    return GFraction(tuple(out), exact)


def _qd_cfraction(values, count: int, exact: bool):
    """Quotient-difference algorithm: series coefficients -> C-fraction
    numerators.  Returns (list of a_n, terminated_early).

    The alternating diagonal q_1^{(0)}, e_1^{(0)}, q_2^{(0)}, ... yields
    a_1, a_2, a_3, ...; a vanishing q or e entry means the underlying
    function is rational and the fraction terminates there.
    """

    def is_zero(x):
        if exact:
            return x == 0
        return abs(x) < _FLOAT_QD_ZERO

    n_avail = len(values) - 1
    count = min(count, n_avail)
    a = []
    # q column needs ratios c_{n+1}/c_n
    q = []
    for n in range(n_avail):
        if is_zero(values[n]):
            return a, True
        q.append(values[n + 1] / values[n])
    e_prev = [0 * values[0]] * len(q)
    while True:
        if not q or is_zero(q[0]):
            return a, True
        a.append(q[0])
        if len(a) >= count:
            return a, False
        e = [q[n + 1] - q[n] + e_prev[n + 1] for n in range(len(q) - 1)]
        if not e or is_zero(e[0]):
            return a, True
        a.append(e[0])
        if len(a) >= count:
            return a, False
        q_next = []
        for n in range(len(e) - 1):
            if is_zero(e[n]):
                return a, True
            q_next.append(q[n + 1] * e[n + 1] / e[n])
        q, e_prev = q_next, e


def series_to_gfraction(values, length: int, tol: float = 0.0) -> ConversionResult:
    """Convert series coefficients (c_0 = 1, c_1, ...) to g-parameters.

    Exact input runs the quotient-difference table in rational arithmetic;
    float input is limited to length <= 30 because the table is severely
    cancellation-prone.  Returns the greedy g-list with g_0 = 0 and a
    status: OK, TERMINATED (rational series, finite fraction), or
    OUT_OF_RANGE with the first offending index and value.
    """
    vals = tuple(values.values) if hasattr(values, "values") else tuple(values)
    if not vals or vals[0] != 1:
        raise ParameterError("series must start with c_0 = 1")
    if len(vals) < length + 1:
        raise ParameterError(f"need {length + 1} coefficients, got {len(vals)}")
    exact = all(isinstance(v, (int, Fraction)) for v in vals)
    if not exact:
        if length > 30:
            raise ParameterError(
                "float quotient-difference is limited to length <= 30; "
                "supply exact coefficients for deeper conversions"
            )
        if length > 15:
            warnings.warn(
                "float quotient-difference beyond length 15 is ill-conditioned",
                stacklevel=2,
            )
    work = tuple(Fraction(v) for v in vals) if exact else tuple(float(v) for v in vals)
    a_list, terminated = _qd_cfraction(work[: length + 1], length, exact)

    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    gs = [zero]
    band_lo = -Fraction(tol) if exact else -tol
    band_hi = 1 + Fraction(tol) if exact else 1.0 + tol
    status = ConversionStatus.TERMINATED if terminated else ConversionStatus.OK
    for i, an in enumerate(a_list, start=1):
        prev = gs[-1]
        at_one = (prev == one) if exact else abs(1.0 - prev) < _FLOAT_QD_ZERO
        if at_one:
            # terminated fraction: any further nonzero numerator is fatal
            an_zero = (an == 0) if exact else abs(an) < _FLOAT_QD_ZERO
            if an_zero:
                status = ConversionStatus.TERMINATED
                break
            return ConversionResult(
                ConversionStatus.OUT_OF_RANGE,
                GFraction(tuple(gs), exact),
                CFractionCoeffs(tuple(a_list), exact),
                fail_index=i,
                fail_value=None,
            )
        gn = an / (one - prev)
        if not (band_lo <= gn <= band_hi):
            return ConversionResult(
                ConversionStatus.OUT_OF_RANGE,
                GFraction(tuple(gs + [gn]), exact),
                CFractionCoeffs(tuple(a_list), exact),
                fail_index=i,
                fail_value=gn,
            )
        gs.append(gn)
    return ConversionResult(
        status,
        GFraction(tuple(gs), exact),
        CFractionCoeffs(tuple(a_list), exact),
    )


def gfraction_to_series(g, length: int):
    """Exact truncated Taylor coefficients of a g-fraction (test oracle).

    Backward substitution over polynomials modulo z^(length+1); input
    g-values are coerced to Fractions.
    """
    gs = g.g if isinstance(g, GFraction) else tuple(g)
    gs = tuple(Fraction(x) for x in gs)
    a = [(1 - gs[n - 1]) * gs[n] for n in range(1, len(gs))]
    tail = [Fraction(1)] + [Fraction(0)] * length

    def inv_series(p):
        out = [Fraction(1) / p[0]]
        for n in range(1, length + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += p[k] * out[n - k]
            out.append(-acc / p[0])
        return out

    for an in reversed(a):
        # p = 1 - an * z * tail
        p = [Fraction(1)] + [-an * tail[k] for k in range(length)]
        tail = inv_series(p)
    return tuple(tail)


def gauss_ratio_check(a, b, c, z, depth: int = 60):
    """Evaluate the Gauss continued fraction for F(a,b+1;c+1;z)/F(a,b;c;z)
    and the same ratio by two series evaluations; returns
    (cf_value, direct_value, difference)."""
    z = complex(z)
    if abs(z) > 0.8:
        raise ParameterError("ratio check needs |z| <= 0.8")
    from .hyp2f1 import HGParams, f21_series

    g = gauss_g_params(a, b, c, depth)
    cf = eval_gfraction(g, z, depth)
    num = f21_series(HGParams(a, b + 1, c + 1), z).value
    den = f21_series(HGParams(a, b, c), z).value if b != 0 else 1.0 + 0.0j
    direct = num / den
    return cf, direct, abs(cf - direct)
