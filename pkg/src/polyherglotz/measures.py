"""A closed family of positive Borel measures on R^n and their integrals.

Variants: finite atomic combinations, scaled Lebesgue measure, products of
one-dimensional densities, pushforwards of a weighted line measure along an
affine curve, and finite sums of these.  Every measure appearing in the
examples (lambda, 5*lambda, the diagonal measure, the product-density
alternative) is expressible; the family is deliberately closed so the
Nevanlinna checker's error analysis stays tractable.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .backend import impl
from .core import CutPlanePoint
from .errors import DivergenceError, InvalidArgumentError, InvalidMeasureError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_line, integrate_rn

_RATIONAL_TABLE: dict = {
    "cauchy_squared": lambda t: 1.0 / (1.0 + t * t) ** 2,
}


@dataclass(frozen=True)
class DensityDescriptor:
    """One-dimensional density, nonnegative and integrable against (1+t^2)^-1."""

    form: str
    params: tuple = ()

    def __post_init__(self):
        if self.form == "constant":
            if len(self.params) != 1 or self.params[0] < 0:
                raise InvalidMeasureError("constant density needs c >= 0")
        elif self.form == "cauchy_weight":
            if self.params:
                raise InvalidMeasureError("cauchy_weight takes no parameters")
        elif self.form == "gaussian":
            if len(self.params) != 2 or self.params[1] <= 0:
                raise InvalidMeasureError("gaussian needs (mean, sigma), sigma > 0")
        elif self.form == "rational_table":
            if len(self.params) != 1 or self.params[0] not in _RATIONAL_TABLE:
                raise InvalidMeasureError(
                    f"unknown rational_table entry {self.params!r}"
                )
        else:
            raise InvalidMeasureError(f"unknown density form {self.form!r}")

    def __call__(self, t: float) -> float:
        if self.form == "constant":
            return self.params[0]
        if self.form == "cauchy_weight":
            return 1.0 / (1.0 + t * t)
        if self.form == "gaussian":
            m, s = self.params
            return math.exp(-0.5 * ((t - m) / s) ** 2) / (s * math.sqrt(2 * math.pi))
        return _RATIONAL_TABLE[self.params[0]](t)

    def backend_code(self):
        """(wcode, p0, p1) for the compiled A-integral, or None."""
        if self.form == "constant":
            return impl.W_CONSTANT, self.params[0], 0.0
        if self.form == "cauchy_weight":
            return impl.W_CAUCHY, 0.0, 0.0
        if self.form == "gaussian":
            return impl.W_GAUSSIAN, self.params[0], self.params[1]
        if self.params[0] == "cauchy_squared":
            return impl.W_CAUCHY_SQ, 0.0, 0.0
        return None


def constant_density(c: float) -> DensityDescriptor:
    return DensityDescriptor("constant", (float(c),))


def cauchy_weight() -> DensityDescriptor:
    return DensityDescriptor("cauchy_weight")


def gaussian_density(mean: float, sigma: float) -> DensityDescriptor:
    return DensityDescriptor("gaussian", (float(mean), float(sigma)))


def rational_density(name: str) -> DensityDescriptor:
    return DensityDescriptor("rational_table", (name,))


@dataclass(frozen=True)
class Atomic:
    points: tuple  # tuple of real n-vectors
    weights: tuple
    dim: int | None = None

    def __post_init__(self):
        points = tuple(tuple(float(x) for x in p) for p in self.points)
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        if len(points) != len(weights):
            raise InvalidMeasureError("points and weights lengths differ")
        if any(w < 0 for w in weights):
            raise InvalidMeasureError("atomic weights must be >= 0")
        if points:
            n = len(points[0])
            if any(len(p) != n for p in points):
                raise InvalidMeasureError("atoms have inconsistent dimensions")
            if self.dim is not None and self.dim != n:
                raise InvalidMeasureError("dim does not match atom dimension")
            object.__setattr__(self, "dim", n)
        elif self.dim is None:
            raise InvalidMeasureError("empty atomic measure needs an explicit dim")

    @property
    def dimension(self) -> int:
        return self.dim


@dataclass(frozen=True)
class LebesgueScaled:
    c: float
    dim: int = 1

    def __post_init__(self):
        if self.c < 0:
            raise InvalidMeasureError("Lebesgue scale must be >= 0")
        if self.dim < 1:
            raise InvalidMeasureError("dimension must be >= 1")

    @property
    def dimension(self) -> int:
        return self.dim


@dataclass(frozen=True)
class ProductDensity:
    factors: tuple  # of DensityDescriptor

    def __post_init__(self):
        if not self.factors:
            raise InvalidMeasureError("product density needs >= 1 factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dimension(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class CurvePushforward:
    """Pushforward of weight(s) ds along s -> alpha * s + beta in R^n."""

    alpha: tuple
    beta: tuple
    weight: DensityDescriptor
    scale: float = 1.0

    def __post_init__(self):
        alpha = tuple(float(a) for a in self.alpha)
        beta = tuple(float(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) != len(beta):
            raise InvalidMeasureError("alpha and beta lengths differ")
        if all(a == 0 for a in alpha):
            raise InvalidMeasureError("curve must have a nonzero direction")
        if self.scale < 0:
            raise InvalidMeasureError("scale must be >= 0")

    @property
    def dimension(self) -> int:
        return len(self.alpha)

    def at(self, s: float) -> tuple:
        return tuple(a * s + b for a, b in zip(self.alpha, self.beta))


@dataclass(frozen=True)
class MeasureSum:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InvalidMeasureError("sum needs >= 1 term")
        dims = {m.dimension for m in self.terms}
        if len(dims) != 1:
            raise InvalidMeasureError(f"sum terms have mixed dimensions {dims}")

    @property
    def dimension(self) -> int:
        return self.terms[0].dimension


Measure = Union[Atomic, LebesgueScaled, ProductDensity, CurvePushforward, MeasureSum]


def _growth_factor(t: Sequence[float]) -> float:
    p = 1.0
    for x in t:
        p *= 1.0 / (1.0 + x * x)
    return p


def _check_decay(g: Callable[[float], complex], label: str) -> None:
    """Reject integrands whose 1-d profile fails to decay like 1/t^2.

    Samples |g(t)|*(1+t^2) at doubling radii; sustained growth means the
    tan-substituted integrand blows up at the endpoints.
    """
    radii = [4.0 * 2**k for k in range(7)]
    for sign in (1.0, -1.0):
        vals = [abs(g(sign * r)) * (1.0 + r * r) for r in radii]
        floor = vals[0] + 1e-12
        if vals[-1] > 100.0 * floor and all(
            vals[k + 1] >= vals[k] for k in range(3, 6)
        ):
            raise DivergenceError(
                f"integrand does not decay along {label} (t={sign * radii[-1]:g})"
            )


def _axis_profiles(f, n):
    """1-d profiles of an n-dim integrand along each axis and the diagonal."""
    profiles = []
    for j in range(n):
        profiles.append(
            (f"axis {j + 1}", lambda t, j=j: f(tuple(t if k == j else 0.0 for k in range(n))))
        )
    if n > 1:
        profiles.append(("diagonal", lambda t: f((t,) * n)))
    return profiles


def integrate(
    mu: Measure,
    f: Callable[[tuple], complex],
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    hints: Callable[[tuple], Sequence[float]] | None = None,
):
    """integral of f dmu.  Returns (value, error_estimate).

    Atomic measures are summed exactly; everything else goes through
    adaptive quadrature on the tan-compactified axes.
    """
    if isinstance(mu, Atomic):
        return sum((w * f(p) for p, w in zip(mu.points, mu.weights)), 0j), 0.0

    if isinstance(mu, MeasureSum):
        val, err = 0j, 0.0
        for term in mu.terms:
            v, e = integrate(term, f, cfg, hints)
            val += v
            err += e
        return val, err

    if isinstance(mu, LebesgueScaled):
        if mu.c == 0.0:
            return 0j, 0.0
        for label, g in _axis_profiles(f, mu.dimension):
            _check_decay(g, label)
        val, err = integrate_rn(f, mu.dimension, cfg, hints)
        return mu.c * val, mu.c * err

    if isinstance(mu, ProductDensity):
        n = mu.dimension
        fw = lambda t: f(t) * math.prod(w(x) for w, x in zip(mu.factors, t))
        for label, g in _axis_profiles(fw, n):
            _check_decay(g, label)
        return integrate_rn(fw, n, cfg, hints)

    if isinstance(mu, CurvePushforward):
        if mu.scale == 0.0:
            return 0j, 0.0
        g = lambda s: f(mu.at(s)) * mu.weight(s)
        _check_decay(g, "curve parameter")
        val, err = integrate_line(g, cfg)
        return mu.scale * val, mu.scale * err

    raise InvalidArgumentError(f"unknown measure variant {type(mu).__name__}")


@dataclass(frozen=True)
class GrowthResult:
    finite: bool
    value: float


def check_growth(mu: Measure, cfg: QuadratureConfig = DEFAULT_CONFIG) -> GrowthResult:
    """Evaluate the growth integral of prod(1+t_l^2)^-1 against mu."""
    try:
        val, _ = integrate(mu, _growth_factor, cfg)
    except DivergenceError:
        return GrowthResult(False, math.inf)
    if not math.isfinite(abs(val)):
        return GrowthResult(False, math.inf)
    return GrowthResult(True, val.real)


def nevanlinna_residual(
    mu: Measure,
    z: CutPlanePoint,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> complex:
    """The rho-indexed N-factor sum whose vanishing (for all z in C+^n)
    characterizes representing measures.

    For n = 1 the index set is empty and the residual is exactly 0.
    """
    if not isinstance(z, CutPlanePoint):
        z = CutPlanePoint(tuple(z))
    if not z.is_upper():
        raise InvalidArgumentError("nevanlinna residual is sampled on C+^n")
    n = z.n
    if mu.dimension != n:
        raise InvalidArgumentError("measure and point dimensions differ")
    if n == 1:
        return 0j

    total = 0j
    for rho in itertools.product((-1, 0, 1), repeat=n):
        if -1 not in rho or 1 not in rho:
            continue

        def fn(t, rho=rho):
            p = 1.0 + 0j
            for r, zz, tt in zip(rho, z.coords, t):
                p *= impl.n_factor(r, zz, tt)
            return p

        val, _ = integrate(mu, fn, cfg)
        total += val
    return total


# ---------------------------------------------------------------------------
# JSON specification format (tagged union, unknown fields rejected)

def _require_fields(obj: dict, allowed: set, where: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise InvalidArgumentError(f"unknown fields {sorted(extra)} in {where}")


def density_from_dict(obj: dict) -> DensityDescriptor:
    if not isinstance(obj, dict) or "form" not in obj:
        raise InvalidArgumentError("density descriptor needs a 'form' field")
    form = obj["form"]
    if form == "constant":
        _require_fields(obj, {"form", "c"}, "constant density")
        return constant_density(obj["c"])
    if form == "cauchy_weight":
        _require_fields(obj, {"form"}, "cauchy_weight density")
        return cauchy_weight()
    if form == "gaussian":
        _require_fields(obj, {"form", "mean", "sigma"}, "gaussian density")
        return gaussian_density(obj["mean"], obj["sigma"])
    if form == "rational_table":
        _require_fields(obj, {"form", "name"}, "rational_table density")
        return rational_density(obj["name"])
    raise InvalidArgumentError(f"unknown density form {form!r}")


def density_to_dict(d: DensityDescriptor) -> dict:
    if d.form == "constant":
        return {"form": "constant", "c": d.params[0]}
    if d.form == "cauchy_weight":
        return {"form": "cauchy_weight"}
    if d.form == "gaussian":
        return {"form": "gaussian", "mean": d.params[0], "sigma": d.params[1]}
    return {"form": "rational_table", "name": d.params[0]}


def measure_from_dict(obj: dict) -> Measure:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidArgumentError("measure descriptor needs a 'type' field")
    kind = obj["type"]
    if kind == "atomic":
        _require_fields(obj, {"type", "points", "weights", "dimension"}, "atomic")
        return Atomic(
            tuple(tuple(p) for p in obj["points"]),
            tuple(obj["weights"]),
            obj.get("dimension"),
        )
    if kind == "lebesgue_scaled":
        _require_fields(obj, {"type", "c", "dimension"}, "lebesgue_scaled")
        return LebesgueScaled(obj["c"], obj["dimension"])
    if kind == "product_density":
        _require_fields(obj, {"type", "factors"}, "product_density")
        return ProductDensity(tuple(density_from_dict(d) for d in obj["factors"]))
    if kind == "curve_pushforward":
        _require_fields(obj, {"type", "curve", "weight", "scale"}, "curve_pushforward")
        curve = obj["curve"]
        _require_fields(curve, {"alpha", "beta"}, "curve")
        return CurvePushforward(
            tuple(curve["alpha"]),
            tuple(curve["beta"]),
            density_from_dict(obj["weight"]),
            obj["scale"],
        )
    if kind == "sum":
        _require_fields(obj, {"type", "terms"}, "sum")
        return MeasureSum(tuple(measure_from_dict(t) for t in obj["terms"]))
    raise InvalidArgumentError(f"unknown measure type {kind!r}")


def measure_to_dict(mu: Measure) -> dict:
    if isinstance(mu, Atomic):
        return {
            "type": "atomic",
            "points": [list(p) for p in mu.points],
            "weights": list(mu.weights),
            "dimension": mu.dimension,
        }
    if isinstance(mu, LebesgueScaled):
        return {"type": "lebesgue_scaled", "c": mu.c, "dimension": mu.dim}
    if isinstance(mu, ProductDensity):
        return {
            "type": "product_density",
            "factors": [density_to_dict(d) for d in mu.factors],
        }
    if isinstance(mu, CurvePushforward):
        return {
            "type": "curve_pushforward",
            "curve": {"alpha": list(mu.alpha), "beta": list(mu.beta)},
            "weight": density_to_dict(mu.weight),
            "scale": mu.scale,
        }
    if isinstance(mu, MeasureSum):
        return {"type": "sum", "terms": [measure_to_dict(t) for t in mu.terms]}
    raise InvalidArgumentError(f"unknown measure variant {type(mu).__name__}")


def measure_from_json(text: str) -> Measure:
    return measure_from_dict(json.loads(text))


def measure_to_json(mu: Measure) -> str:
    return json.dumps(measure_to_dict(mu), sort_keys=True)


# The diagonal measure on R^2: mu2(U) = pi * integral chi_U(t, t) dt.
MU2 = CurvePushforward(
    alpha=(1.0, 1.0), beta=(0.0, 0.0), weight=constant_density(1.0), scale=math.pi
)
