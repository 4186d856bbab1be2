"""Finite-difference total monotonicity, Hausdorff moment utilities,
degenerate-measure detection and the reflected (dual) transform.

A sequence c_0 = 1, c_1, c_2, ... is totally monotone when every iterated
forward difference D^m c_n = D^{m-1} c_n - D^{m-1} c_{n+1} is nonnegative;
equivalently c_n = integral of t^n against a probability measure on [0, 1].
Deep triangles must be computed exactly: floating subtraction loses about
one bit per row, so the exact path rescales the sequence to a common
denominator and runs the triangle over integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import quadrature
from .errors import InconsistentSequenceError, ParameterError
from .quadrature import QuadratureSpec, integrate_blocks

_FLOAT_EQ_TOL = 1e-14


def _is_exact_value(v) -> bool:
    return isinstance(v, (int, Fraction))


@dataclass(frozen=True)
class MomentSequence:
    """A candidate moment sequence; values[0] must equal 1.

    Exact when every entry is an int or Fraction, floating otherwise.
    """

    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ParameterError("empty moment sequence")
        if self.exact:
            if vals[0] != 1:
                raise ParameterError("moment sequences are normalized to c_0 = 1")
        elif abs(vals[0] - 1.0) > 1e-12:
            raise ParameterError("moment sequences are normalized to c_0 = 1")

    @property
    def exact(self) -> bool:
        return all(_is_exact_value(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class DifferenceTable:
    """Triangular array rows[m][n] = D^m c_n for m + n <= depth."""

    rows: tuple
    depth: int
    exact: bool


@dataclass(frozen=True)
class DegenerateMeasure:
    """Measure (1-k) delta_0 + k delta_1 detected from a flat tail."""

    k: float


@dataclass(frozen=True)
class TMVerdict:
    holds: bool
    violation: Optional[tuple] = None  # (m, n, value)


def delta_table(seq: MomentSequence, depth: int) -> DifferenceTable:
    """Full forward-difference triangle D^m c_n for m + n <= depth."""
    if len(seq) < depth + 1:
        raise ParameterError(
            f"need at least {depth + 1} values for depth {depth}, got {len(seq)}"
        )
    rows = [tuple(seq.values[: depth + 1])]
    for m in range(1, depth + 1):
        prev = rows[-1]
        rows.append(tuple(prev[n] - prev[n + 1] for n in range(len(prev) - 1)))
    return DifferenceTable(tuple(rows), depth, seq.exact)


def _integerized(values) -> tuple:
    """Scale exact rationals to a common denominator; returns integers."""
    denom = 1
    for v in values:
        d = v.denominator if isinstance(v, Fraction) else 1
        denom = denom * d // math.gcd(denom, d)
    return tuple(int(v * denom) for v in values)


def is_totally_monotone(seq: MomentSequence, depth: int, tol: float = 0.0) -> TMVerdict:
    """Check D^m c_n >= -tol over the triangle m + n <= depth.

    The first violation in lexicographic (m, n) order is reported.  Exact
    sequences are verified with integer arithmetic and require tol = 0.
    """
    if len(seq) < depth + 1:
        raise ParameterError(
            f"need at least {depth + 1} values for depth {depth}, got {len(seq)}"
        )
    if tol < 0:
        raise ParameterError("tol must be nonnegative")
    exact = seq.exact
    if exact and tol != 0:
        raise ParameterError("exact mode requires tol = 0")
    if exact:
        row = _integerized(seq.values[: depth + 1])
        threshold = 0
    else:
        row = tuple(float(v) for v in seq.values[: depth + 1])
        threshold = tol
    for m in range(depth + 1):
        for n, v in enumerate(row):
            if v < -threshold:
                value = seq_value_at(seq, m, n) if exact else v
                return TMVerdict(False, (m, n, value))
        row = tuple(row[i] - row[i + 1] for i in range(len(row) - 1))
    return TMVerdict(True, None)


def seq_value_at(seq: MomentSequence, m: int, n: int):
    """D^m c_n by the binomial formula (independent of the triangle)."""
    total = 0
    sign = 1
    binom = 1
    for k in range(m + 1):
        total += sign * binom * seq.values[n + k]
        sign = -sign
        binom = binom * (m - k) // (k + 1)
    return total


def detect_degenerate(seq: MomentSequence) -> Optional[DegenerateMeasure]:
    """Detect a measure supported on {0, 1} from a flat or vanishing tail.

    If c_m = c_{m+1} for some m >= 1 then the whole tail must be the
    constant k = c_1 and the measure is (1-k) delta_0 + k delta_1; if some
    c_m = 0 (m >= 1) the measure is delta_0.  A flat pair followed by a
    non-constant tail means the input was not totally monotone.
    """
    vals = seq.values
    exact = seq.exact

    def eq(x, y):
        if exact:
            return x == y
        return abs(x - y) <= _FLOAT_EQ_TOL

    n = len(vals)
    hit = None
    for m in range(1, n):
        if eq(vals[m], 0):
            hit = 0
            break
        if m + 1 < n and eq(vals[m], vals[m + 1]):
            hit = vals[1]
            break
    if hit is None:
        return None
    for j in range(1, n):
        if not eq(vals[j], hit):
            raise InconsistentSequenceError(
                f"flat tail value {hit!r} contradicted at index {j}"
            )
    return DegenerateMeasure(float(hit))


def _measure_parts(measure):
    alpha0 = float(getattr(measure, "alpha0", 0.0))
    alpha1 = float(getattr(measure, "alpha1", 0.0))
    density = getattr(measure, "density_at", None)
    return alpha0, alpha1, density


def _block_evaluator(measure, density):
    """Per-node density values, reusing the measure's own cache when it
    has one (representing measures do; ad-hoc measures get a local one)."""
    cached = getattr(measure, "_density_block", None)
    if cached is not None:
        return cached
    local = {}

    def blocks(level):
        got = local.get(level)
        if got is None:
            got = tuple(density(t, s) for (t, s, _) in quadrature.node_block(level))
            local[level] = got
        return got

    return blocks


@dataclass(frozen=True)
class SimpleMeasure:
    """Point masses plus an explicit density callable f(t, s) -> float."""

    alpha0: float = 0.0
    alpha1: float = 0.0
    density: Optional[Callable[[float, float], float]] = None

    def density_at(self, t: float, s: float) -> float:
        if self.density is None:
            return 0.0
        return self.density(t, s)


def generating_function(measure, z, abs_tol: float = 1e-10, max_level: int = 11) -> complex:
    """F(z) = alpha0 + alpha1/(1-z) + integral of density/(1-tz)."""
    z = complex(z)
    from .errors import SlitError

    if z.real >= 1.0 and abs(z.imag) < 1e-300:
        raise SlitError(f"z={z!r} lies on the slit")
    alpha0, alpha1, density = _measure_parts(measure)
    total = alpha0 + alpha1 / (1.0 - z)
    if density is None:
        return total
    one_minus_z = 1.0 - z
    sub = getattr(measure, "subtraction", None)
    val, _, _ = integrate_blocks(
        _block_evaluator(measure, density),
        lambda t, s: 1.0 / (one_minus_z + s * z),
        QuadratureSpec(level=max_level, abs_tol=abs_tol),
        subtract=sub.density_tilde if sub is not None else None,
    )
    if sub is not None:
        val += sub.cauchy(z)
    return total + val


def moment_of_measure(measure, n: int, abs_tol: float = 1e-10, max_level: int = 11) -> float:
    """n-th moment: alpha0*[n=0] + alpha1 + integral of t^n * density."""
    if n < 0:
        raise ParameterError("moment index must be nonnegative")
    alpha0, alpha1, density = _measure_parts(measure)
    total = alpha1 + (alpha0 if n == 0 else 0.0)
    if density is None:
        return total
    sub = getattr(measure, "subtraction", None)
    val, _, _ = integrate_blocks(
        _block_evaluator(measure, density),
        lambda t, s, _n=n: t ** _n,
        QuadratureSpec(level=max_level, abs_tol=abs_tol),
        subtract=sub.density_tilde if sub is not None else None,
    )
    if sub is not None:
        val += sub.moment(n)
    return total + val


def dual_coefficients(seq: MomentSequence, length: int) -> MomentSequence:
    """Coefficients of the reflected measure: chat_n = D^n c_0.

    Reflecting the measure t -> 1 - t turns moments into the diagonal of
    the forward-difference triangle, and applying it twice is the
    identity.
    """
    if len(seq) < length + 1:
        raise ParameterError(
            f"need at least {length + 1} values for length {length}, got {len(seq)}"
        )
    row = list(seq.values[: length + 1])
    out = [row[0]]
    for _ in range(length):
        row = [row[i] - row[i + 1] for i in range(len(row) - 1)]
        out.append(row[0])
    return MomentSequence(tuple(out))


@dataclass(frozen=True)
class TailLimits:
    """Estimates of the point masses at 0 and 1 from far-field probes."""

    alpha0: float
    alpha1: float
    raw0: tuple
    raw1: tuple
    diverged0: bool
    diverged1: bool


def _aitken(values):
    v0, v1, v2 = values[-3], values[-2], values[-1]
    denom = (v2 - v1) - (v1 - v0)
    if abs(denom) < 1e-300:
        return v2
    return v2 - (v2 - v1) ** 2 / denom


def tail_limits(F, ks=(3, 4, 5, 6), cauchy_tol: float = 1e-4) -> TailLimits:
    """Point masses of the representing measure from the evaluator alone:
    alpha0 = lim F(x) as x -> -inf, alpha1 = lim (1-x) F(x) as x -> 1-.

    Probes follow a power-law approach, so Aitken extrapolation of the
    last three values is used.  A probe sequence that is not Cauchy at
    `cauchy_tol` sets the corresponding divergence flag.
    """
    raw0 = tuple(float(complex(F(-(10.0 ** k))).real) for k in ks)
    raw1 = tuple(
        float((10.0 ** -k) * complex(F(1.0 - 10.0 ** -k)).real) for k in ks
    )
    a0 = _aitken(raw0)
    a1 = _aitken(raw1)
    div0 = abs(raw0[-1] - raw0[-2]) > cauchy_tol * max(1.0, abs(raw0[-1]))
    div1 = abs(raw1[-1] - raw1[-2]) > cauchy_tol * max(1.0, abs(raw1[-1]))
    clamp = lambda v: min(max(v, 0.0), 1.0)
    return TailLimits(clamp(a0), clamp(a1), raw0, raw1, div0, div1)
