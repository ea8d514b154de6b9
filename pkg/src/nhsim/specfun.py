"""Self-contained special-function numerics: modified Bessel K0/K1 and Lambert W.

These are the only special functions the outage analysis needs.  K0/K1 use
the ascending power series for small arguments and a continued-fraction
evaluation for large arguments; Lambert W uses branch-specific initial
guesses refined by Halley iteration.  No external special-function library
is involved, so the test suite can check these routines against independent
integral-representation oracles.
"""

from __future__ import annotations

import enum
import math

__all__ = ["BranchW", "bessel_k0", "bessel_k1", "lambert_w"]

_EULER_GAMMA = 0.57721566490153286061
# branch point of the Lambert W function, rounded to the nearest double
_MINUS_INV_E = -math.exp(-1.0)

_SERIES_CUTOFF = 2.0
_CF_MAX_ITER = 10000
_CF_EPS = 1e-16


class BranchW(enum.Enum):
    """Real branches of the Lambert W function.

    PRINCIPAL is defined on [-1/e, inf) and returns w >= -1; MINUS_ONE is
    defined on [-1/e, 0) and returns w <= -1.
    """

    PRINCIPAL = 0
    MINUS_ONE = -1


def _check_positive_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"{name} requires a positive finite argument, got {x!r}")
    return x


def _k0_k1_series(x: float) -> tuple[float, float]:
    # Ascending series, accurate to double rounding for x <= 2:
    #   K0 = -(ln(x/2)+g) I0 + sum_{k>=1} q^k/(k!)^2 H_k
    #   K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (H_k + H_{k+1} - 2g) q^k/(k!(k+1)!)
    # with q = x^2/4 and H_k the k-th harmonic number.
    q = 0.25 * x * x
    lhalf = math.log(0.5 * x)

    i0 = 1.0
    k0_sum = 0.0
    term = 1.0
    hk = 0.0
    for k in range(1, 60):
        term *= q / (k * k)
        hk += 1.0 / k
        i0 += term
        k0_sum += term * hk
        if term < 1e-18 * i0:
            break
    k0 = -(lhalf + _EULER_GAMMA) * i0 + k0_sum

    i1 = 1.0  # I1(x)/(x/2)
    k1_sum = 1.0 - 2.0 * _EULER_GAMMA  # k = 0 term of the bracketed series
    term = 1.0
    hk = 0.0
    hk1 = 1.0
    for k in range(1, 60):
        term *= q / (k * (k + 1))
        hk += 1.0 / k
        hk1 += 1.0 / (k + 1)
        i1 += term
        k1_sum += term * (hk + hk1 - 2.0 * _EULER_GAMMA)
        if term < 1e-18 * i1:
            break
    k1 = 1.0 / x + lhalf * (0.5 * x) * i1 - 0.25 * x * k1_sum
    return k0, k1


def _k0_k1_continued_fraction(x: float) -> tuple[float, float]:
    # Steed/Temme continued fraction for K_mu, K_{mu+1} with mu = 0.
    # Converges for x > 2 to near machine precision.
    a1 = 0.25
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _CF_MAX_ITER):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels) < _CF_EPS * abs(s):
            break
    else:  # pragma: no cover - never reached for x > 2
        raise ArithmeticError(f"continued fraction for K0/K1 failed to converge at x={x}")
    h = a1 * h
    k0 = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1


def _k0_k1(x: float) -> tuple[float, float]:
    if x <= _SERIES_CUTOFF:
        return _k0_k1_series(x)
    return _k0_k1_continued_fraction(x)


def bessel_k0(x: float) -> float:
    """Modified Bessel function of the second kind, order zero.

    Relative accuracy is ~1e-14 over [1e-12, 700]; for larger arguments the
    value underflows smoothly toward 0.0 without raising.
    """
    x = _check_positive_finite(x, "bessel_k0")
    return _k0_k1(x)[0]


def bessel_k1(x: float) -> float:
    """Modified Bessel function of the second kind, order one."""
    x = _check_positive_finite(x, "bessel_k1")
    return _k0_k1(x)[1]


def _halley_refine(w: float, x: float) -> float:
    # Halley iteration on f(w) = w e^w - x (Corless et al. style update).
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        dw = f / denom
        w -= dw
        if abs(dw) <= 1e-16 * (2.0 + abs(w)):
            break
    return w


def _branch_point_series(p: float) -> float:
    # Expansion of W around -1/e in p = +/- sqrt(2(e x + 1)).
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))


def lambert_w(branch: BranchW, x: float) -> float:
    """Real Lambert W: the solution w of w * exp(w) = x on the given branch.

    Raises ValueError outside the branch domain.  The returned value
    satisfies |w e^w - x| <= 1e-12 * max(1, |x|).
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"lambert_w requires a finite argument, got {x!r}")
    if x < _MINUS_INV_E:
        raise ValueError(f"lambert_w is undefined for x={x!r} < -1/e")
    if x == _MINUS_INV_E:
        return -1.0

    if branch is BranchW.PRINCIPAL:
        if x == 0.0:
            return 0.0
        if x < -0.25:
            w = _branch_point_series(math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0))))
        elif x < 1e10:
            w = math.log1p(x)
        else:
            l1 = math.log(x)
            l2 = math.log(l1)
            w = l1 - l2 + l2 / l1
    elif branch is BranchW.MINUS_ONE:
        if x >= 0.0:
            raise ValueError(f"the lower branch of lambert_w is undefined for x={x!r} >= 0")
        if x < -0.25:
            w = _branch_point_series(-math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0))))
        else:
            # x in (-0.25, 0): w = ln(-x) - ln(-ln(-x)) seeds the deep tail
            l1 = math.log(-x)
            w = l1 - math.log(-l1)
    else:  # pragma: no cover - enum exhausts the cases
        raise ValueError(f"unknown branch {branch!r}")

    w = _halley_refine(w, x)
    if abs(w * math.exp(w) - x) > 1e-12 * max(1.0, abs(x)):  # pragma: no cover
        raise ArithmeticError(f"lambert_w failed to converge for branch={branch}, x={x}")
    return w
