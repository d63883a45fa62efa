"""Pure-Python kernel backend.

Same surface as the compiled backend (_fastkernels): scalar kernel
evaluations plus the weighted A-factor line integral that dominates the
runtime of quadrature-backed function evaluation.  No input validation
here; the public wrappers in `kernels` own that.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

BACKEND = "python"

# Weight codes shared with the compiled backend.
W_CONSTANT = 0
W_CAUCHY = 1
W_GAUSSIAN = 2
W_CAUCHY_SQ = 3


def a_factor(z, t):
    return (1.0 / (t - z) - 1.0 / (t + 1j)) / 2j


def k1_closed(z, t):
    return 1.0 / (t - z) - t / (1.0 + t * t)


def n_factor(rho, z, t):
    if rho == -1:
        return (1.0 / (t - z) - 1.0 / (t - 1j)) / 2j
    if rho == 0:
        return (1.0 / (t - 1j) - 1.0 / (t + 1j)) / 2j
    return (1.0 / (t + 1j) - 1.0 / (t - z.conjugate())) / 2j


def kernel_k(zs, ts):
    pa = 1.0 + 0j
    pc = 1.0 + 0j
    for z, t in zip(zs, ts):
        pa *= a_factor(z, t)
        pc *= a_factor(1j, t)
    return 1j * (2.0 * pa - pc)


def poisson(zs, ts):
    p = 1.0
    for z, t in zip(zs, ts):
        p *= z.imag / abs(t - z) ** 2
    return p


def symmetry_sum(zs, ts):
    """sum over nonempty B of (-1)^(|B|+1) conj K_n(Psi_B(i*1, z), t)."""
    n = len(zs)
    total = 0j
    for mask in range(1, 1 << n):
        refl = tuple(
            zs[j].conjugate() if mask >> j & 1 else 1j for j in range(n)
        )
        sign = -1.0 if bin(mask).count("1") % 2 == 0 else 1.0
        total += sign * kernel_k(refl, ts).conjugate()
    return total


def alternating_sum(zs, ts):
    """sum over all B of (-1)^|B| K_n(Psi_B(z, z), t)."""
    n = len(zs)
    total = 0j
    for mask in range(1 << n):
        refl = tuple(
            zs[j].conjugate() if mask >> j & 1 else zs[j] for j in range(n)
        )
        sign = 1.0 if bin(mask).count("1") % 2 == 0 else -1.0
        total += sign * kernel_k(refl, ts)
    return total


def _weight(wcode, p0, p1):
    if wcode == W_CONSTANT:
        return lambda t: p0
    if wcode == W_CAUCHY:
        return lambda t: 1.0 / (1.0 + t * t)
    if wcode == W_GAUSSIAN:
        norm = 1.0 / (p1 * math.sqrt(2.0 * math.pi))
        return lambda t: norm * math.exp(-0.5 * ((t - p0) / p1) ** 2)
    return lambda t: 1.0 / (1.0 + t * t) ** 2


def a_line_integral(z, wcode, p0, p1, abs_tol, rel_tol, max_subdiv):
    """integral over R of A(z, t) * w(t) dt, via the t = tan(theta) substitution.

    Splits at the near-pole location t = Re z so adaptive subdivision sees
    the spike even when |Im z| is tiny.
    """
    w = _weight(wcode, p0, p1)

    def integrand(theta):
        t = math.tan(theta)
        return a_factor(z, t) * (w(t) * (1.0 + t * t))

    # bracket the near-pole at Re z on the scale of |Im z| so the adaptive
    # rule cannot step over a narrow spike
    w_im = max(abs(z.imag), 1e-12)
    pts = sorted(
        {math.atan(z.real + d) for d in (-10 * w_im, -w_im, 0.0, w_im, 10 * w_im)}
    )
    val, err = quad(
        integrand,
        -math.pi / 2,
        math.pi / 2,
        points=pts,
        epsabs=abs_tol,
        epsrel=rel_tol,
        limit=max(max_subdiv, 10),
        complex_func=True,
    )
    return val, abs(err)
