"""Pointwise kernel evaluations on the poly cut-plane.

The multivariate kernel is

    K_n(z, t) = i * ( 2/(2i)^n * prod_l (1/(t_l - z_l) - 1/(t_l + i))
                      - 1/(2i)^n * prod_l (1/(t_l - i) - 1/(t_l + i)) )

which we evaluate through the building block
A(z, t) = (1/2i)(1/(t-z) - 1/(t+i)) as K_n = i(2 prod A(z_l,t_l) - prod A(i,t_l)).
The one-variable closed form K_1(z,t) = 1/(t-z) - t/(1+t^2) is kept as an
independent cross-check.

Near-real points are accepted; precision then degrades like 1/|Im z_j|,
which Stieltjes inversion relies on when probing y -> 0+.
"""

from __future__ import annotations

from typing import Sequence

from .backend import impl
from .core import CutPlanePoint
from .errors import InvalidArgumentError, InvalidPointError, PoleError


def _coords(z) -> tuple:
    if isinstance(z, CutPlanePoint):
        return z.coords
    return CutPlanePoint(tuple(z)).coords


def _check_t(zs: tuple, t: Sequence[float]) -> tuple:
    t = tuple(float(x) for x in t)
    if len(t) != len(zs):
        raise InvalidArgumentError(
            f"dimension mismatch: z has {len(zs)} coordinates, t has {len(t)}"
        )
    return t


def kernel_K(z, t) -> complex:
    """Evaluate K_n(z, t)."""
    zs = _coords(z)
    return impl.kernel_k(zs, _check_t(zs, t))


def kernel_K1_closed(z: complex, t: float) -> complex:
    """One-variable closed form 1/(t-z) - t/(1+t^2)."""
    z = complex(z)
    if z.imag == 0.0:
        raise InvalidPointError("z must be nonreal")
    return impl.k1_closed(z, float(t))


def n_factor(rho: int, z: complex, t: float) -> complex:
    """The N_rho factor, rho in {-1, 0, 1}.

    N_0 is real and does not depend on z; conj(N_-1) = N_1.
    """
    if rho not in (-1, 0, 1):
        raise InvalidArgumentError(f"rho must be -1, 0 or 1, got {rho!r}")
    z = complex(z)
    if z.imag == 0.0:
        raise InvalidPointError("z must be nonreal")
    return impl.n_factor(rho, z, float(t))


def a_factor(z: complex, t: float) -> complex:
    """A(z, t) = (1/2i)(1/(t-z) - 1/(t+i)); also accepts the ambient z = i."""
    z = complex(z)
    t = float(t)
    if z.imag == 0.0 and t == z.real:
        raise PoleError(f"A(z, t) has a pole at t = z = {t}")
    return impl.a_factor(z, t)


def poisson(z, t) -> float:
    """Poisson kernel P_n(z, t) = prod Im[z_j] / |t_j - z_j|^2 for z in C+^n."""
    zs = _coords(z)
    if any(c.imag <= 0 for c in zs):
        raise InvalidArgumentError("poisson kernel requires all Im z_j > 0")
    return impl.poisson(zs, _check_t(zs, t))


def kernel_symmetry_residual(z, t) -> float:
    """|K_n(z,t) - sum_{B nonempty} (-1)^(|B|+1) conj K_n(Psi_B(i*1, z), t)|."""
    zs = _coords(z)
    t = _check_t(zs, t)
    return abs(impl.kernel_k(zs, t) - impl.symmetry_sum(zs, t))


def poisson_alternating_sum(z, t) -> complex:
    """sum_B (-1)^|B| K_n(Psi_B(z,z), t); equals 2i P_n(z,t) for z in C+^n."""
    zs = _coords(z)
    if any(c.imag <= 0 for c in zs):
        raise InvalidArgumentError("alternating sum requires all Im z_j > 0")
    return impl.alternating_sum(zs, _check_t(zs, t))
