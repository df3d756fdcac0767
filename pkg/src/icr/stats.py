"""Welch's two-sample t-test with a closed-form p-value.

The two-sided p-value comes from the regularised incomplete beta
function with Welch-Satterthwaite degrees of freedom, so no statistics
dependency is needed at runtime (scipy is used as a test oracle only).
"""

import math
from dataclasses import dataclass

from .errors import InsufficientSamplesError


@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    p_value: float
    dof: float


def _betacf(a, b, x, max_iter=300, eps=1e-15):
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for mm in range(1, max_iter + 1):
        m2 = 2 * mm
        aa = mm * (b - mm) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + mm) * (qab + mm) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            break
    return h


def reg_inc_beta(a, b, x):
    """Regularised incomplete beta I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_sf2(t, dof):
    """Two-sided tail probability of Student's t."""
    if math.isinf(t):
        return 0.0
    return reg_inc_beta(dof / 2.0, 0.5, dof / (dof + t * t))


def welch_from_summary(mean1, var1, n1, mean2, var2, n2):
    """Welch's t from per-group means, sample variances and counts."""
    if n1 < 2 or n2 < 2:
        raise InsufficientSamplesError("need at least 2 samples per group")
    s1, s2 = var1 / n1, var2 / n2
    diff = mean1 - mean2
    if s1 + s2 == 0.0:
        if diff == 0.0:
            return TTestResult(0.0, 1.0, float(n1 + n2 - 2))
        return TTestResult(math.copysign(math.inf, diff), 0.0,
                           float(n1 + n2 - 2))
    t = diff / math.sqrt(s1 + s2)
    dof = (s1 + s2) ** 2 / (s1 ** 2 / (n1 - 1) + s2 ** 2 / (n2 - 1))
    if t == 0.0:
        return TTestResult(0.0, 1.0, dof)
    return TTestResult(t, student_t_sf2(t, dof), dof)


def welch_t_test(xs, ys):
    """Welch's two-sample t-test on raw sample vectors, two-sided."""
    n1, n2 = len(xs), len(ys)
    if n1 < 2 or n2 < 2:
        raise InsufficientSamplesError("need at least 2 samples per group")
    mean1 = sum(xs) / n1
    mean2 = sum(ys) / n2
    var1 = sum((v - mean1) ** 2 for v in xs) / (n1 - 1)
    var2 = sum((v - mean2) ** 2 for v in ys) / (n2 - 1)
    return welch_from_summary(mean1, var1, n1, mean2, var2, n2)
