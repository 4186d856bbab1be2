"""Single-valued evaluation of the Gauss hypergeometric function on the
slit plane Lambda = C \\ [1, +inf), boundary values from above on the slit,
and the z -> 1 limit classification.

Evaluation strategy
-------------------
The defining series converges only on the unit disk, so ``f21_lambda``
dispatches on the argument:

* ``|z| <= 0.5``        -- defining series
* ``|z/(z-1)| <= 0.5``  -- Pfaff transformation into the series region
* ``|z| >= 2``          -- connection formula at infinity (DLMF 15.8.2,
  or the logarithmic expansion DLMF 15.8.8 when b - a is a non-negative
  integer)
* ``|1-z| <= 0.5``      -- connection formula at unity (DLMF 15.8.4)
* otherwise the same four maps with the radius relaxed to 0.82, and, for
  the two lens-shaped zones around exp(+-i*pi/3) where every Moebius image
  of z has modulus near 1, Taylor continuation along the ray from the
  origin driven by the hypergeometric ODE.

The connection formulas have Gamma-factor poles at integer parameter
gaps.  Exactly-integer gaps go to the logarithmic expansion where one
exists; everything else within ``|sin(pi*gap)| < 1e-6`` of a pole is
evaluated twice with the offending parameter shifted by 1e-6 and 2e-6 and
Richardson-extrapolated, because the generic formulas lose too many digits
there.

Branches of ``(-z)**s``, ``(1-z)**s`` and ``log(-z)`` are principal, so
all three are positive for z on the negative real axis.  Boundary values
on (1, +inf) are limits from the upper half-plane, which amounts to
replacing ``log(-z)`` by ``log(x) - i*pi`` and ``log(1-z)`` by
``log(x-1) - i*pi`` in the same formulas.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ConvergenceError, ParameterError, SlitError
from .scalar import (
    INT_TOL,
    digamma,
    gamma,
    is_nonpositive_integer,
    nearest_integer,
    rgamma,
)

SERIES_RADIUS = 0.5
RELAXED_RADIUS = 0.82
INFINITY_RADIUS = 2.0
NEAR_ONE_RADIUS = 0.5
SIN_GUARD = 1e-6
MAX_TERMS = 5000
STOP_RTOL = 1e-16
EPS_SHIFT = 1e-6
_SLIT_IM = 1e-300
_BOUNDARY_LADDER = (1e-4, 1e-5, 1e-6)


class Method(Enum):
    SERIES = "series"
    PFAFF = "pfaff"
    CONNECTION_INFINITY = "connection_infinity"
    CONNECTION_ONE = "connection_one"
    LOG_DEGENERATE = "log_degenerate"
    EPSILON_LIMIT = "epsilon_limit"
    TAYLOR_WALK = "taylor_walk"


@dataclass(frozen=True)
class HGParams:
    """Parameter triple (a, b, c) of the hypergeometric function.

    c may not sit within 1e-12 of a non-positive integer.
    """

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if is_nonpositive_integer(self.c):
            raise ParameterError(f"c={self.c!r} is a non-positive integer")

    @property
    def is_real(self) -> bool:
        return (
            abs(self.a.imag) <= INT_TOL
            and abs(self.b.imag) <= INT_TOL
            and abs(self.c.imag) <= INT_TOL
        )

    def swapped(self) -> "HGParams":
        return HGParams(self.b, self.a, self.c)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_estimate: float
    method: Method


class OneLimitKind(Enum):
    FINITE = "finite"
    LOG_DIVERGENT = "log_divergent"
    POWER_DIVERGENT = "power_divergent"


@dataclass(frozen=True)
class OneLimitClass:
    kind: OneLimitKind
    coefficient: complex
    exponent: float | None = None


def _on_slit(z: complex) -> bool:
    return z.real >= 1.0 and abs(z.imag) < _SLIT_IM


def _series_eval(a, b, c, z, max_terms: int = MAX_TERMS):
    """Partial sums of the defining series; returns (value, error bound).

    Stops once three consecutive terms fall below 1e-16 of the partial
    sum.  The error bound is a geometric tail estimate plus a rounding
    allowance proportional to the largest partial sum seen (cancellation
    tracking).
    """
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    peak = 1.0
    small = 0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z
        total += term
        mag = abs(total)
        if mag > peak:
            peak = mag
        if abs(term) < STOP_RTOL * max(mag, 1e-250):
            small += 1
            if small >= 3:
                q = min(abs(z), 0.95)
                tail = abs(term) * q / (1.0 - q)
                return total, tail + 8e-16 * peak
        else:
            small = 0
    raise ConvergenceError(
        f"hypergeometric series did not converge in {max_terms} terms at z={z!r}"
    )


def _polynomial_eval(a, b, c, z):
    """Terminating series for a equal to a non-positive integer (entire)."""
    deg = -nearest_integer(complex(a).real)
    af = float(-deg)
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    peak = 1.0
    for n in range(deg):
        term *= (af + n) * (b + n) / ((c + n) * (1.0 + n)) * z
        total += term
        peak = max(peak, abs(total))
    return total, 4e-16 * peak * (deg + 1)


def f21_series(p: HGParams, z) -> EvalResult:
    """Defining series, valid for |z| <= 0.8."""
    z = complex(z)
    if abs(z) > 0.8:
        raise ParameterError(f"series evaluation needs |z| <= 0.8, got {abs(z):.3f}")
    if p.a == 0 or p.b == 0:
        return EvalResult(1.0 + 0.0j, 0.0, Method.SERIES)
    value, err = _series_eval(p.a, p.b, p.c, z)
    return EvalResult(value, err, Method.SERIES)


def _pfaff_eval(a, b, c, z):
    w = z / (z - 1.0)
    prefactor = (1.0 - z) ** (-a)
    inner, ierr = _series_eval(a, c - b, c, w)
    value = prefactor * inner
    return value, abs(prefactor) * ierr + 4e-16 * abs(value)


def _connection_infinity_generic(a, b, c, z, neg_log=None):
    """DLMF 15.8.2: expansion in 1/z, valid when b - a is not an integer."""
    if neg_log is None:
        neg_log = cmath.log(-z)
    zi = 1.0 / z
    value = 0.0 + 0.0j
    err = 0.0
    mags = 0.0
    for (p1, p2) in ((a, b), (b, a)):
        coeff = gamma(c) * gamma(p2 - p1) * rgamma(p2) * rgamma(c - p1)
        if coeff == 0:
            continue
        inner, ierr = _series_eval(p1, 1.0 - c + p1, 1.0 - p2 + p1, zi)
        pref = coeff * cmath.exp(-p1 * neg_log)
        value += pref * inner
        mags += abs(pref) * abs(inner)
        err += abs(pref) * ierr
    return value, err + 2e-15 * mags


def _connection_one_generic(a, b, c, u, log_u=None):
    """DLMF 15.8.4: expansion in u = 1 - z, needs c - a - b non-integer."""
    if log_u is None:
        log_u = cmath.log(u)
    delta = c - a - b
    value = 0.0 + 0.0j
    err = 0.0
    mags = 0.0
    coeff = gamma(c) * gamma(delta) * rgamma(c - a) * rgamma(c - b)
    if coeff != 0:
        inner, ierr = _series_eval(a, b, 1.0 - delta, u)
        value += coeff * inner
        mags += abs(coeff) * abs(inner)
        err += abs(coeff) * ierr
    coeff = gamma(c) * gamma(-delta) * rgamma(a) * rgamma(b)
    if coeff != 0:
        pref = coeff * cmath.exp(delta * log_u)
        inner, ierr = _series_eval(c - a, c - b, 1.0 + delta, u)
        value += pref * inner
        mags += abs(pref) * abs(inner)
        err += abs(pref) * ierr
    return value, err + 2e-15 * mags


def _log_expansion_infinity(a, m: int, c, z, neg_log=None, max_terms: int = MAX_TERMS):
    """DLMF 15.8.8 family: b = a + m with integer m >= 0, |z| > 1.

    Requires c - a away from the integers (the caller guards and falls
    back to a parameter shift otherwise).
    """
    if neg_log is None:
        neg_log = cmath.log(-z)
    zi = 1.0 / z
    g_c = gamma(c)
    inv_g_am = rgamma(a + m)

    finite = 0.0 + 0.0j
    poch = 1.0 + 0.0j  # (a)_n
    zpow = 1.0 + 0.0j
    for n in range(m):
        finite += (
            math.factorial(m - n - 1) / math.factorial(n) * poch * rgamma(c - a - n) * zpow
        )
        poch *= a + n
        zpow *= zi
    value1 = g_c * inv_g_am * cmath.exp(-a * neg_log) * finite

    pref2 = g_c * inv_g_am * rgamma(c - a) * cmath.exp(-(a + m) * neg_log)
    # rho_n = (a)_{n+m} (1-c+a)_{n+m} / (n! (n+m)!), starting at n = 0
    rho = 1.0 + 0.0j
    for k in range(m):
        rho *= (a + k) * (1.0 - c + a + k)
    rho /= math.factorial(m)
    cn = digamma(1.0 + m) + digamma(1.0) - digamma(a + m) - digamma(c - a - m)
    total2 = rho * (neg_log + cn)
    peak = abs(total2)
    small = 0
    n = 0
    while n < max_terms:
        rho *= (a + m + n) * (1.0 - c + a + m + n) / ((n + 1.0) * (n + m + 1.0)) * zi
        cn += 1.0 / (1.0 + m + n) + 1.0 / (1.0 + n) - 1.0 / (a + m + n) + 1.0 / (
            c - a - m - n - 1.0
        )
        term = rho * (neg_log + cn)
        total2 += term
        peak = max(peak, abs(total2))
        if abs(term) < STOP_RTOL * max(abs(total2), 1e-250):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        n += 1
    else:
        raise ConvergenceError(
            f"logarithmic expansion did not converge in {max_terms} terms at z={z!r}"
        )
    value2 = pref2 * total2
    q = min(abs(zi), 0.95)
    tail = abs(pref2) * abs(rho) * (abs(neg_log) + abs(cn) + 1.0) * q / (1.0 - q)
    err = tail + 2e-15 * (abs(value1) + abs(pref2) * peak)
    return value1 + value2, err


def _neville_zero(xs, ys):
    """Polynomial extrapolation of (xs, ys) to x = 0."""
    n = len(xs)
    tab = list(ys)
    for j in range(1, n):
        for i in range(n - j):
            tab[i] = (xs[i + j] * tab[i] - xs[i] * tab[i + 1]) / (xs[i + j] - xs[i])
    return tab[0]


# Parameter-shift ladder for the degenerate connection formulas.  The
# shifted formula carries a 1/eps^2 internal cancellation (a Gamma-factor
# pole multiplying an inner-series pole), so its roundoff grows like
# 1e-16/eps^2 while the extrapolation truncation shrinks like eps^4;
# eps ~ (1e-16)^(1/6) ~ 2e-3 balances the two.
_SHIFT_LADDER = (2e-3, 1e-3, 5e-4, 2.5e-4)


def _richardson_pair(evaluate):
    """Extrapolate a parameter-shifted formula to zero shift."""
    vals = []
    errs = []
    for eps in _SHIFT_LADDER:
        v, e = evaluate(eps)
        vals.append(v)
        errs.append(e)
    value = _neville_zero(list(_SHIFT_LADDER), vals)
    short = _neville_zero(list(_SHIFT_LADDER[:-1]), vals[:-1])
    spread = abs(value - short)
    err = max(1e-7 * max(1.0, abs(value)), 4.0 * spread) + 4.0 * max(errs)
    return value, err


def _connection_infinity(a, b, c, z, neg_log=None):
    d = b - a
    if abs(cmath.sin(math.pi * d)) >= SIN_GUARD:
        v, e = _connection_infinity_generic(a, b, c, z, neg_log)
        return v, e, Method.CONNECTION_INFINITY
    if d.real < 0:
        a, b = b, a
        d = -d
    m = nearest_integer(d.real)
    exact_gap = abs(d - m) <= INT_TOL
    if exact_gap and abs(cmath.sin(math.pi * (c - a))) >= SIN_GUARD:
        v, e = _log_expansion_infinity(a, m, c, z, neg_log)
        return v, e, Method.LOG_DEGENERATE
    if exact_gap:
        # doubly degenerate: shift c away from the integer lattice
        v, e = _richardson_pair(
            lambda eps: _log_expansion_infinity(a, m, c + eps, z, neg_log)
        )
        return v, e, Method.EPSILON_LIMIT
    # nearly-integer gap: shift b inside the generic formula
    v, e = _richardson_pair(
        lambda eps: _connection_infinity_generic(a, b + eps, c, z, neg_log)
    )
    return v, e, Method.EPSILON_LIMIT


def _connection_one(a, b, c, u, log_u=None):
    delta = c - a - b
    if abs(cmath.sin(math.pi * delta)) >= SIN_GUARD:
        v, e = _connection_one_generic(a, b, c, u, log_u)
        return v, e, Method.CONNECTION_ONE
    v, e = _richardson_pair(lambda eps: _connection_one_generic(a, b, c + eps, u, log_u))
    return v, e, Method.EPSILON_LIMIT


def _slit_distance(z: complex) -> float:
    if z.real <= 1.0:
        return abs(z - 1.0)
    return abs(z.imag)


def _ode_taylor_step(a, b, c, z0, w0, w1, dz, max_terms: int = 400):
    """Advance (F, F') from z0 to z0 + dz using the hypergeometric ODE

        z(1-z) F'' + [c - (a+b+1) z] F' - a b F = 0,

    whose Taylor coefficients at an ordinary point satisfy a two-term
    recurrence.  |dz| must stay well below the distance from z0 to both
    the slit and the origin (the second solution is singular at 0 and
    roundoff excites it beyond that radius).
    """
    p0 = z0 * (1.0 - z0)
    p1 = 1.0 - 2.0 * z0
    q0 = c - (a + b + 1.0) * z0
    q1 = -(a + b + 1.0)
    ab = a * b
    wk = w0
    wk1 = w1
    f = w0 + w1 * dz
    fp = w1
    powk = dz  # dz**(k+1) while processing order k
    small = 0
    for k in range(max_terms):
        wk2 = -(
            (p1 * (k + 1.0) * k + q0 * (k + 1.0)) * wk1
            + (-k * (k - 1.0) + q1 * k - ab) * wk
        ) / (p0 * (k + 2.0) * (k + 1.0))
        powk *= dz
        term = wk2 * powk
        f += term
        fp += (k + 2.0) * wk2 * powk / dz
        if abs(term) < STOP_RTOL * max(abs(f), 1e-250) and abs(
            (k + 2.0) * wk2 * powk / dz
        ) < STOP_RTOL * max(abs(fp), 1e-250):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        wk, wk1 = wk1, wk2
    else:
        raise ConvergenceError("Taylor continuation step failed to converge")
    return f, fp


def _taylor_walk(a, b, c, z):
    """Continue F along the ray from 0.45*z/|z| out to z."""
    direction = z / abs(z)
    zc = 0.45 * direction
    f, fe = _series_eval(a, b, c, zc)
    fp, fpe = _series_eval(a + 1.0, b + 1.0, c + 1.0, zc)
    scale = abs(a * b / c)
    fp *= a * b / c
    fpe *= scale
    err = fe + fpe
    for _ in range(64):
        rem = z - zc
        if abs(rem) == 0.0:
            break
        reach = 0.7 * min(_slit_distance(zc), abs(zc))
        if abs(rem) <= reach:
            dz = rem
        else:
            dz = reach * rem / abs(rem)
        f, fp = _ode_taylor_step(a, b, c, zc, f, fp, dz)
        zc += dz
        err = 2.0 * err + 1e-14 * (abs(f) + abs(dz) * abs(fp))
    else:
        raise ConvergenceError(f"Taylor walk did not reach z={z!r}")
    return f, max(err, 1e-12 * max(1.0, abs(f)))


def f21_lambda(p: HGParams, z) -> EvalResult:
    """F(z) as the single-valued analytic continuation to C \\ [1, +inf)."""
    z = complex(z)
    if _on_slit(z):
        raise SlitError(f"z={z!r} lies on the slit [1, +inf)")
    a, b, c = p.a, p.b, p.c
    if a == 0 or b == 0:
        return EvalResult(1.0 + 0.0j, 0.0, Method.SERIES)
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        if not is_nonpositive_integer(a):
            a, b = b, a
        elif is_nonpositive_integer(b) and b.real > a.real:
            a, b = b, a  # terminate on the shorter polynomial
        v, e = _polynomial_eval(a, b, c, z)
        return EvalResult(v, e, Method.SERIES)
    if z == 0:
        return EvalResult(1.0 + 0.0j, 0.0, Method.SERIES)

    az = abs(z)
    u = 1.0 - z
    w_abs = az / abs(u)
    if az <= SERIES_RADIUS:
        v, e = _series_eval(a, b, c, z)
        return EvalResult(v, e, Method.SERIES)
    if w_abs <= 0.5:
        v, e = _pfaff_eval(a, b, c, z)
        return EvalResult(v, e, Method.PFAFF)
    if az >= INFINITY_RADIUS:
        v, e, meth = _connection_infinity(a, b, c, z)
        return EvalResult(v, e, meth)
    if abs(u) <= NEAR_ONE_RADIUS:
        v, e, meth = _connection_one(a, b, c, u)
        return EvalResult(v, e, meth)

    # Crescent between the primary regions: take whichever map gives the
    # smallest series argument, provided it stays below the relaxed radius.
    candidates = (
        (az, 0),
        (w_abs, 1),
        (1.0 / az, 2),
        (abs(u), 3),
    )
    ratio, which = min(candidates)
    if ratio <= RELAXED_RADIUS:
        if which == 0:
            v, e = _series_eval(a, b, c, z)
            return EvalResult(v, e, Method.SERIES)
        if which == 1:
            v, e = _pfaff_eval(a, b, c, z)
            return EvalResult(v, e, Method.PFAFF)
        if which == 2:
            v, e, meth = _connection_infinity(a, b, c, z)
            return EvalResult(v, e, meth)
        v, e, meth = _connection_one(a, b, c, u)
        return EvalResult(v, e, meth)
    v, e = _taylor_walk(a, b, c, z)
    return EvalResult(v, e, Method.TAYLOR_WALK)


def f21_near_one(p: HGParams, s: float) -> EvalResult:
    """F at z = 1 - s for real s in (0, 1), with s supplied exactly.

    Taking s rather than z keeps full precision when s is far below the
    resolution of ``1.0 - s`` (quadrature nodes reach s ~ 1e-280).
    """
    if not s > 0.0:
        raise ParameterError("f21_near_one needs s > 0")
    if s >= 0.18:
        return f21_lambda(p, complex(1.0 - s))
    a, b, c = p.a, p.b, p.c
    if a == 0 or b == 0:
        return EvalResult(1.0 + 0.0j, 0.0, Method.SERIES)
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        if not is_nonpositive_integer(a):
            a, b = b, a
        v, e = _polynomial_eval(a, b, c, complex(1.0 - s))
        return EvalResult(v, e, Method.SERIES)
    v, e, meth = _connection_one(a, b, c, complex(s))
    return EvalResult(v, e, meth)


def _boundary_epsilon(p: HGParams, x: float):
    """F^+(x) by extrapolating F(x + i*eps) down to the slit."""
    s1 = x - 1.0
    if s1 >= 8e-4:
        ladder = _BOUNDARY_LADDER
    else:
        e0 = s1 / 8.0
        ladder = (e0, e0 / 4.0, e0 / 16.0)
    vals = [f21_lambda(p, complex(x, eps)).value for eps in ladder]
    value = _neville_zero(ladder, vals)
    err = max(abs(value - vals[-1]) / 4.0, 1e-9 * max(1.0, abs(value)))
    return value, err


def _require_real(p: HGParams, op: str):
    if not p.is_real:
        raise ParameterError(f"{op} requires real parameters")
    return p.a.real, p.b.real, p.c.real


def f21_plus(p: HGParams, x: float):
    """Full boundary value F^+(x) from the upper half-plane, x > 1.

    Returns (value, error_estimate, method).
    """
    a, b, c = _require_real(p, "f21_plus")
    if not x > 1.0:
        raise ParameterError("f21_plus needs x > 1")
    if a > b:
        a, b = b, a
    az, bz, cz = complex(a), complex(b), complex(c)
    if a == 0 or b == 0:
        return 1.0 + 0.0j, 0.0, Method.SERIES
    if is_nonpositive_integer(az) or is_nonpositive_integer(bz):
        v, e = _polynomial_eval(az if is_nonpositive_integer(az) else bz,
                                bz if is_nonpositive_integer(az) else az,
                                cz, complex(x))
        return v, e, Method.SERIES
    if x >= 1.8:
        neg_log = complex(math.log(x), -math.pi)
        return _connection_infinity(az, bz, cz, complex(x), neg_log=neg_log)
    log_u = complex(math.log(x - 1.0), -math.pi)
    return _connection_one(az, bz, cz, complex(1.0 - x), log_u=log_u)


def f21_boundary_im(p: HGParams, x: float) -> float:
    """Im F^+(x) for x > 1 and real parameters.

    Generic parameter gaps use the two-term expansion in 1/x; an integer
    gap b - a switches to the logarithmic expansion; anything else (or a
    non-converging logarithmic series very close to x = 1) falls back to
    extrapolation of Im F(x + i*eps).
    """
    a, b, c = _require_real(p, "f21_boundary_im")
    if not x > 1.0:
        raise ParameterError("f21_boundary_im needs x > 1")
    if a > b:
        a, b = b, a
    if a == 0.0 or b == 0.0:
        return 0.0
    az, bz, cz = complex(a), complex(b), complex(c)
    if is_nonpositive_integer(az):
        return 0.0  # polynomial with real coefficients
    d = b - a
    m = nearest_integer(d)
    if abs(d - m) <= INT_TOL and m >= 0:
        if abs(math.sin(math.pi * (c - a))) >= SIN_GUARD:
            neg_log = complex(math.log(x), -math.pi)
            try:
                v, _ = _log_expansion_infinity(az, m, cz, complex(x), neg_log=neg_log)
                return v.imag
            except ConvergenceError:
                pass
        value, _ = _boundary_epsilon(p, x)
        return value.imag
    if abs(math.sin(math.pi * d)) >= SIN_GUARD:
        coeff_a = (gamma(cz) * gamma(bz - az) * rgamma(bz) * rgamma(cz - az)).real
        coeff_b = (gamma(cz) * gamma(az - bz) * rgamma(az) * rgamma(cz - bz)).real
        out = 0.0
        xi = 1.0 / x
        if coeff_a != 0.0:
            f1 = f21_lambda(HGParams(a, 1.0 - c + a, 1.0 - b + a), xi).value.real
            out += coeff_a * math.sin(math.pi * a) * x ** (-a) * f1
        if coeff_b != 0.0:
            f2 = f21_lambda(HGParams(b, 1.0 - c + b, 1.0 - a + b), xi).value.real
            out += coeff_b * math.sin(math.pi * b) * x ** (-b) * f2
        return out
    value, _ = _boundary_epsilon(p, x)
    return value.imag


def limit_at_one(p: HGParams) -> OneLimitClass:
    """Classify the z -> 1 behaviour inside the slit plane.

    delta = c - a - b decides: positive means a finite limit, zero a
    logarithmic divergence, negative a power divergence (1-z)**delta.
    Coefficients whose Gamma denominators sit on poles come out as 0.
    """
    a, b, c = _require_real(p, "limit_at_one")
    delta = c - a - b
    az, bz, cz = complex(a), complex(b), complex(c)
    if abs(delta) <= INT_TOL:
        coeff = gamma(cz) * rgamma(az) * rgamma(bz)
        return OneLimitClass(OneLimitKind.LOG_DIVERGENT, coeff)
    if delta > 0:
        value = gamma(cz) * gamma(complex(delta)) * rgamma(cz - az) * rgamma(cz - bz)
        return OneLimitClass(OneLimitKind.FINITE, value)
    coeff = gamma(cz) * gamma(complex(-delta)) * rgamma(az) * rgamma(bz)
    return OneLimitClass(OneLimitKind.POWER_DIVERGENT, coeff, exponent=delta)
