# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Mirrors _purekernels: scalar kernel evaluations and the weighted A-factor
line integral.  The line integral uses a 7/15 Gauss-Kronrod pair on the
tan-substituted axis with adaptive bisection of the worst segment.
"""

from libc.math cimport tan, atan, exp, sqrt, M_PI, fabs

BACKEND = "compiled"

W_CONSTANT = 0
W_CAUCHY = 1
W_GAUSSIAN = 2
W_CAUCHY_SQ = 3

DEF MAXN = 16
DEF MAXSEG = 4200

# QUADPACK 15-point Kronrod nodes/weights and embedded 7-point Gauss weights.
cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[0] = 0.991455371120812639206854697526329
XGK[1] = 0.949107912342758524526189684047851
XGK[2] = 0.864864423359769072789712788640926
XGK[3] = 0.741531185599394439863864773280788
XGK[4] = 0.586087235467691130294144838258730
XGK[5] = 0.405845151377397166906606412076961
XGK[6] = 0.207784955007898467600689403773245
XGK[7] = 0.000000000000000000000000000000000
WGK[0] = 0.022935322010529224963732008058970
WGK[1] = 0.063092092629978553290700663189204
WGK[2] = 0.104790010322250183839876322541518
WGK[3] = 0.140653259715525918745189590510238
WGK[4] = 0.169004726639267902826583426598550
WGK[5] = 0.190350578064785409913256402421014
WGK[6] = 0.204432940075298892414161999234649
WGK[7] = 0.209482141084727828012999174891714
WG[0] = 0.129484966168869693270611432679082
WG[1] = 0.279705391489276667901467771423780
WG[2] = 0.381830050505118944950369775488975
WG[3] = 0.417959183673469387755102040816327


cdef inline double complex c_a_factor(double complex z, double t) nogil:
    return (1.0 / (t - z) - 1.0 / (t + 1j)) / 2j


cdef inline double complex c_kernel_k(double complex* zs, double* ts, int n) nogil:
    cdef double complex pa = 1.0
    cdef double complex pc = 1.0
    cdef int j
    for j in range(n):
        pa = pa * c_a_factor(zs[j], ts[j])
        pc = pc * c_a_factor(1j, ts[j])
    return 1j * (2.0 * pa - pc)


cdef inline int c_popcount(int mask) nogil:
    cdef int c = 0
    while mask:
        c += mask & 1
        mask >>= 1
    return c


cdef int _unpack(object zs, object ts, double complex* zbuf, double* tbuf) except -1:
    cdef int n = len(zs)
    if n > MAXN:
        raise ValueError("dimension exceeds compiled backend limit")
    cdef int j
    for j in range(n):
        zbuf[j] = zs[j]
        tbuf[j] = ts[j]
    return n


def a_factor(z, t):
    return c_a_factor(z, t)


def k1_closed(z, t):
    cdef double complex zz = z
    cdef double tt = t
    return 1.0 / (tt - zz) - tt / (1.0 + tt * tt)


def n_factor(rho, z, t):
    cdef double complex zz = z
    cdef double tt = t
    cdef int r = rho
    if r == -1:
        return (1.0 / (tt - zz) - 1.0 / (tt - 1j)) / 2j
    if r == 0:
        return (1.0 / (tt - 1j) - 1.0 / (tt + 1j)) / 2j
    return (1.0 / (tt + 1j) - 1.0 / (tt - zz.conjugate())) / 2j


def kernel_k(zs, ts):
    cdef double complex zbuf[MAXN]
    cdef double tbuf[MAXN]
    cdef int n = _unpack(zs, ts, zbuf, tbuf)
    return c_kernel_k(zbuf, tbuf, n)


def poisson(zs, ts):
    cdef double complex zbuf[MAXN]
    cdef double tbuf[MAXN]
    cdef int n = _unpack(zs, ts, zbuf, tbuf)
    cdef double p = 1.0
    cdef double complex d
    cdef int j
    for j in range(n):
        d = tbuf[j] - zbuf[j]
        p *= zbuf[j].imag / (d.real * d.real + d.imag * d.imag)
    return p


def symmetry_sum(zs, ts):
    cdef double complex zbuf[MAXN]
    cdef double tbuf[MAXN]
    cdef double complex refl[MAXN]
    cdef int n = _unpack(zs, ts, zbuf, tbuf)
    cdef double complex total = 0
    cdef double complex v
    cdef int mask, j
    for mask in range(1, 1 << n):
        for j in range(n):
            if mask >> j & 1:
                refl[j] = zbuf[j].conjugate()
            else:
                refl[j] = 1j
        v = c_kernel_k(refl, tbuf, n).conjugate()
        if c_popcount(mask) % 2 == 0:
            total -= v
        else:
            total += v
    return total


def alternating_sum(zs, ts):
    cdef double complex zbuf[MAXN]
    cdef double tbuf[MAXN]
    cdef double complex refl[MAXN]
    cdef int n = _unpack(zs, ts, zbuf, tbuf)
    cdef double complex total = 0
    cdef double complex v
    cdef int mask, j
    for mask in range(1 << n):
        for j in range(n):
            if mask >> j & 1:
                refl[j] = zbuf[j].conjugate()
            else:
                refl[j] = zbuf[j]
        v = c_kernel_k(refl, tbuf, n)
        if c_popcount(mask) % 2 == 0:
            total += v
        else:
            total -= v
    return total


cdef inline double c_weight(int wcode, double p0, double p1, double t) nogil:
    if wcode == 0:
        return p0
    if wcode == 1:
        return 1.0 / (1.0 + t * t)
    if wcode == 2:
        return exp(-0.5 * ((t - p0) / p1) * ((t - p0) / p1)) / (p1 * sqrt(2.0 * M_PI))
    return 1.0 / ((1.0 + t * t) * (1.0 + t * t))


cdef inline double complex c_integrand(
    double complex z, int wcode, double p0, double p1, double theta
) nogil:
    cdef double t = tan(theta)
    return c_a_factor(z, t) * (c_weight(wcode, p0, p1, t) * (1.0 + t * t))


cdef void c_gk15(
    double complex z, int wcode, double p0, double p1,
    double a, double b, double complex* out_val, double* out_err
) nogil:
    cdef double c = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double complex fc = c_integrand(z, wcode, p0, p1, c)
    cdef double complex resk = WGK[7] * fc
    cdef double complex resg = WG[3] * fc
    cdef double complex f1, f2, fsum
    cdef int j
    for j in range(7):
        f1 = c_integrand(z, wcode, p0, p1, c - h * XGK[j])
        f2 = c_integrand(z, wcode, p0, p1, c + h * XGK[j])
        fsum = f1 + f2
        resk = resk + WGK[j] * fsum
        if j % 2 == 1:
            resg = resg + WG[j // 2] * fsum
    out_val[0] = resk * h
    out_err[0] = abs((resk - resg) * h)


def a_line_integral(z, wcode, p0, p1, abs_tol, rel_tol, max_subdiv):
    """integral over R of A(z, t) * w(t) dt via tan substitution."""
    cdef double complex zz = z
    cdef int wc = wcode
    cdef double q0 = p0, q1 = p1
    cdef double atol = abs_tol, rtol = rel_tol
    cdef int maxseg = max_subdiv
    if maxseg > MAXSEG - 2:
        maxseg = MAXSEG - 2
    if maxseg < 4:
        maxseg = 4

    cdef double seg_a[MAXSEG]
    cdef double seg_b[MAXSEG]
    cdef double seg_err[MAXSEG]
    cdef double complex seg_val[MAXSEG]
    cdef int nseg = 0

    # Initial split at the near-pole location t = Re z.
    cdef double split = atan(zz.real)
    cdef double half = M_PI / 2
    cdef double bounds[3]
    bounds[0] = -half
    bounds[1] = split
    bounds[2] = half
    cdef int k
    for k in range(2):
        seg_a[nseg] = bounds[k]
        seg_b[nseg] = bounds[k + 1]
        c_gk15(zz, wc, q0, q1, bounds[k], bounds[k + 1],
               &seg_val[nseg], &seg_err[nseg])
        nseg += 1

    cdef double complex total
    cdef double err_total, worst, mid
    cdef int iworst, i
    while True:
        total = 0
        err_total = 0.0
        worst = -1.0
        iworst = 0
        for i in range(nseg):
            total = total + seg_val[i]
            err_total += seg_err[i]
            if seg_err[i] > worst:
                worst = seg_err[i]
                iworst = i
        if err_total <= atol or err_total <= rtol * abs(total):
            break
        if nseg >= maxseg:
            break
        mid = 0.5 * (seg_a[iworst] + seg_b[iworst])
        seg_a[nseg] = mid
        seg_b[nseg] = seg_b[iworst]
        c_gk15(zz, wc, q0, q1, mid, seg_b[iworst],
               &seg_val[nseg], &seg_err[nseg])
        seg_b[iworst] = mid
        c_gk15(zz, wc, q0, q1, seg_a[iworst], mid,
               &seg_val[iworst], &seg_err[iworst])
        nseg += 1

    return total, err_total
