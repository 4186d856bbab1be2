"""Decision procedures: membership of F(a,b;c;.) in the moment class,
exact coefficient sequences, and the universal-starlikeness test for the
shifted function z*F(a,b;c;z).

Membership for real parameters (after normalizing a <= b, ab != 0):

    F in T  <=>  0 < a <= 1  and  c >= a + max(0, b - 1),

with boundary equalities included.  Non-real parameters never belong
except through the power escape F = (1-z)^(-k) with a = c or b = c and
k in [0, 1].  Exact (Fraction) inputs are compared exactly; floats use a
1e-12 band, and sitting inside that band around a boundary is reported in
the verdict metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import ParameterError
from .moments import MomentSequence
from .scalar import GaussianRational, INT_TOL, nearest_integer

_BAND = 1e-12


class Verdict(Enum):
    IN_T = "in_t"
    NOT_IN_T = "not_in_t"
    TRIVIAL_POWER = "trivial_power"
    INVALID_C = "invalid_c"


class Reason(Enum):
    AB_ZERO = "ab_zero"
    POWER_CASE = "power_case"
    COMPLEX_EXCLUSION = "complex_exclusion"
    REAL_CRITERION = "real_criterion"
    C_NONPOSITIVE_INTEGER = "c_nonpositive_integer"


@dataclass(frozen=True)
class TClassification:
    verdict: Verdict
    reason: Reason
    normalized: tuple  # (a, b, c) with a <= b in the real case
    power_exponent: Optional[object] = None
    boundary: bool = False

    @property
    def in_t(self) -> bool:
        return self.verdict in (Verdict.IN_T, Verdict.TRIVIAL_POWER)


class StarlikeBranch(Enum):
    POSITIVE_PARAMETERS = "positive_parameters"
    POWER_FORM = "power_form"
    NO = "no"


@dataclass(frozen=True)
class StarlikeClassification:
    verdict: bool
    branch: StarlikeBranch
    power_exponent: Optional[object] = None


class _Param:
    """One parameter in either exact or floating form."""

    __slots__ = ("re", "im", "exact")

    def __init__(self, v):
        if isinstance(v, GaussianRational):
            self.re, self.im, self.exact = Fraction(v.re), Fraction(v.im), True
        elif isinstance(v, (int, Fraction)):
            self.re, self.im, self.exact = Fraction(v), Fraction(0), True
        else:
            z = complex(v)
            self.re, self.im, self.exact = z.real, z.imag, False

    def is_real(self):
        if self.exact:
            return self.im == 0
        return abs(self.im) <= _BAND

    def is_zero(self):
        if self.exact:
            return self.re == 0 and self.im == 0
        return abs(self.re) <= _BAND and abs(self.im) <= _BAND

    def equals(self, other: "_Param"):
        if self.exact and other.exact:
            return self.re == other.re and self.im == other.im
        return (
            abs(float(self.re) - float(other.re)) <= _BAND
            and abs(float(self.im) - float(other.im)) <= _BAND
        )

    def nonpositive_integer(self):
        if not self.is_real():
            return False
        if self.exact:
            return self.re.denominator == 1 and self.re <= 0
        n = nearest_integer(float(self.re))
        return n <= 0 and abs(float(self.re) - n) <= _BAND

    def value(self):
        return self.re if self.exact and self.im == 0 else complex(self)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _echo(p: _Param):
    if p.exact:
        if p.im == 0:
            return p.re
        return GaussianRational(p.re, p.im)
    if abs(p.im) <= _BAND:
        return float(p.re)
    return complex(p)


def classify_T(a, b, c) -> TClassification:
    """Decide whether F(a,b;c;.) generates a Hausdorff moment sequence.

    Decision order: invalid c; the trivial ab = 0 case; the power escapes
    a = c or b = c (checked before rejecting non-real input); non-real
    exclusion; the real-parameter criterion with a <= b normalization.
    """
    pa, pb, pc = _Param(a), _Param(b), _Param(c)
    norm = (_echo(pa), _echo(pb), _echo(pc))
    if pc.nonpositive_integer():
        return TClassification(Verdict.INVALID_C, Reason.C_NONPOSITIVE_INTEGER, norm)
    if pa.is_zero() or pb.is_zero():
        return TClassification(Verdict.IN_T, Reason.AB_ZERO, norm)
    for first, second in ((pa, pb), (pb, pa)):
        if first.equals(pc):
            k = second
            if k.is_real():
                kv = k.re if k.exact else float(k.re)
                lo = 0 <= kv if k.exact else kv >= -_BAND
                hi = kv <= 1 if k.exact else kv <= 1.0 + _BAND
                if lo and hi:
                    if k.exact:
                        boundary = kv == 0 or kv == 1
                    else:
                        boundary = abs(kv) <= _BAND or abs(kv - 1.0) <= _BAND
                    return TClassification(
                        Verdict.TRIVIAL_POWER,
                        Reason.POWER_CASE,
                        norm,
                        power_exponent=_echo(k),
                        boundary=boundary,
                    )
            return TClassification(
                Verdict.NOT_IN_T, Reason.POWER_CASE, norm, power_exponent=_echo(k)
            )
    if not (pa.is_real() and pb.is_real() and pc.is_real()):
        return TClassification(Verdict.NOT_IN_T, Reason.COMPLEX_EXCLUSION, norm)

    exact = pa.exact and pb.exact and pc.exact
    if exact:
        av, bv, cv = pa.re, pb.re, pc.re
        if av > bv:
            av, bv = bv, av
        surface = av + max(Fraction(0), bv - 1)
        inside = 0 < av <= 1 and cv >= surface
        boundary = av == 0 or av == 1 or cv == surface
        norm_sorted = (av, bv, cv)
    else:
        av, bv, cv = float(pa.re), float(pb.re), float(pc.re)
        if av > bv:
            av, bv = bv, av
        surface = av + max(0.0, bv - 1.0)
        inside = av > _BAND and av <= 1.0 + _BAND and cv >= surface - _BAND
        boundary = (
            abs(av) <= _BAND or abs(av - 1.0) <= _BAND or abs(cv - surface) <= _BAND
        )
        norm_sorted = (av, bv, cv)
    return TClassification(
        Verdict.IN_T if inside else Verdict.NOT_IN_T,
        Reason.REAL_CRITERION,
        norm_sorted,
        boundary=boundary,
    )


def tm_coefficients(a, b, c, length: int) -> MomentSequence:
    """Exact coefficients gamma_n = (a)_n (b)_n / ((c)_n n!), n <= length.

    Inputs must be exact (int/Fraction, or a GaussianRational conjugate
    pair a, b = conj(a) so that every gamma_n is real).
    """
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        if not isinstance(a, GaussianRational) or not isinstance(b, GaussianRational):
            raise ParameterError("complex coefficients need both a and b Gaussian")
        if b != a.conjugate():
            raise ParameterError("complex coefficients require b = conj(a)")
        c = Fraction(c)
        if c.denominator == 1 and c <= 0:
            raise ParameterError("c is a non-positive integer")
        out = [Fraction(1)]
        g = Fraction(1)
        for n in range(length):
            step = (a + n) * (a.conjugate() + n)
            g = g * step.re / ((c + n) * (n + 1))  # step is real: |a + n|^2
            out.append(g)
        return MomentSequence(tuple(out))
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise ParameterError("c is a non-positive integer")
    out = [Fraction(1)]
    g = Fraction(1)
    for n in range(length):
        g = g * (a + n) * (b + n) / ((c + n) * (n + 1))
        out.append(g)
    return MomentSequence(tuple(out))


def classify_starlike(a, b, c) -> StarlikeClassification:
    """Is z*F(a,b;c;z) universally starlike on the slit plane?

    Yes exactly when the parameters are real with 0 < a <= 1 and
    0 < b < c (after Re-ordering), or when the function reduces to
    z(1-z)^(-k) with k in [0, 1]."""
    pa, pb, pc = _Param(a), _Param(b), _Param(c)
    if pc.nonpositive_integer():
        raise ParameterError("c is a non-positive integer")
    if float(pa.re) > float(pb.re):
        pa, pb = pb, pa
    if pa.is_zero() or pb.is_zero():
        return StarlikeClassification(True, StarlikeBranch.POWER_FORM, 0)
    for first, second in ((pa, pb), (pb, pa)):
        if first.equals(pc):
            k = second
            if k.is_real():
                kv = float(k.re)
                if -_BAND <= kv <= 1.0 + _BAND:
                    return StarlikeClassification(
                        True, StarlikeBranch.POWER_FORM, _echo(k)
                    )
            return StarlikeClassification(False, StarlikeBranch.NO, _echo(k))
    if not (pa.is_real() and pb.is_real() and pc.is_real()):
        return StarlikeClassification(False, StarlikeBranch.NO)
    if pa.exact and pb.exact and pc.exact:
        ok = 0 < pa.re <= 1 and 0 < pb.re < pc.re
    else:
        av, bv, cv = float(pa.re), float(pb.re), float(pc.re)
        ok = _BAND < av <= 1.0 + _BAND and _BAND < bv < cv - _BAND
    if ok:
        return StarlikeClassification(True, StarlikeBranch.POSITIVE_PARAMETERS)
    return StarlikeClassification(False, StarlikeBranch.NO)


def starlike_coefficient_witness(a, b, c) -> float:
    """The sign witness a*b*(c-a)*(c-b) / (c^2 (c+1)).

    This is the difference of the first two Taylor coefficients of
    1 - a + a*F(a+1,b;c;z)/F(a,b;c;z); a negative value rules out
    universal starlikeness.  The closed form is cross-checked against the
    coefficients obtained by series division.
    """
    a, b, c = float(a), float(b), float(c)
    if not c > 0:
        raise ParameterError("witness needs c > 0")
    closed = a * b * (c - a) * (c - b) / (c * c * (c + 1.0))
    # series division: G = F(a+1,b;c;.) / F(a,b;c;.) up to z^2
    alpha1 = (a + 1.0) * b / c
    alpha2 = (a + 1.0) * (a + 2.0) * b * (b + 1.0) / (c * (c + 1.0) * 2.0)
    beta1 = a * b / c
    beta2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0) * 2.0)
    g1 = alpha1 - beta1
    g2 = alpha2 - beta2 - g1 * beta1
    direct = a * g1 - a * g2
    if abs(closed - direct) > 1e-10 * max(1.0, abs(closed)):
        raise ParameterError(
            f"witness cross-check failed: closed={closed!r} direct={direct!r}"
        )
    return closed
