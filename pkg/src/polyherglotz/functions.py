"""Evaluable functions on the poly cut-plane.

Three families share one calling convention (``f(point) -> complex`` with
``f.dimension``): quadrature-backed Cauchy-type functions defined by a
measure, Herglotz functions given by a representing triple (a, b, mu) and
extended symmetrically to the whole cut-plane, and the closed-form
two-variable example catalogue f0..f7.

The kernel integral of a product-structured measure factorizes axis by
axis through K_n = i(2 prod A(z_l, t_l) - prod A(i, t_l)), so each
evaluation costs n one-dimensional quadratures instead of one n-dimensional
one.  Atomic and curve measures keep the direct route.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .backend import impl
from .core import CutPlanePoint
from .errors import (
    InvalidArgumentError,
    InvalidMeasureError,
    UnknownCatalogueIdError,
)
from .measures import (
    MU2,
    Atomic,
    CurvePushforward,
    DensityDescriptor,
    LebesgueScaled,
    Measure,
    MeasureSum,
    ProductDensity,
    check_growth,
    constant_density,
    measure_from_dict,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_line


@lru_cache(maxsize=200_000)
def _weighted_a_integral(z: complex, w: DensityDescriptor, cfg: QuadratureConfig):
    """integral over R of A(z, t) w(t) dt, cached per coordinate."""
    code = w.backend_code()
    if code is not None:
        wcode, p0, p1 = code
        return impl.a_line_integral(
            z, wcode, p0, p1, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions
        )
    return integrate_line(
        lambda t: impl.a_factor(z, t) * w(t), cfg, singularities=[z.real]
    )


def _product_error(values, errors) -> float:
    """First-order error bound for a product of noisy factors."""
    total = 0.0
    for j, e in enumerate(errors):
        rest = 1.0
        for k, v in enumerate(values):
            if k != j:
                rest *= abs(v)
        total += e * rest
    return total


def _axis_weights(mu) -> tuple | None:
    if isinstance(mu, LebesgueScaled):
        return (constant_density(mu.c),) + (constant_density(1.0),) * (mu.dim - 1)
    if isinstance(mu, ProductDensity):
        return mu.factors
    return None


def _kernel_integral(mu: Measure, zs: tuple, cfg: QuadratureConfig):
    """integral of K_n(z, .) dmu, exploiting measure structure."""
    if isinstance(mu, Atomic):
        val = sum(
            (w * impl.kernel_k(zs, p) for p, w in zip(mu.points, mu.weights)), 0j
        )
        return val, 0.0

    if isinstance(mu, MeasureSum):
        val, err = 0j, 0.0
        for term in mu.terms:
            v, e = _kernel_integral(term, zs, cfg)
            val += v
            err += e
        return val, err

    weights = _axis_weights(mu)
    if weights is not None:
        ia, ea, ic, ec = [], [], [], []
        for z, w in zip(zs, weights):
            v, e = _weighted_a_integral(z, w, cfg)
            ia.append(v)
            ea.append(e)
            v, e = _weighted_a_integral(1j, w, cfg)
            ic.append(v)
            ec.append(e)
        val = 1j * (2.0 * math.prod(ia) - math.prod(ic))
        err = 2.0 * _product_error(ia, ea) + _product_error(ic, ec)
        return val, err

    if isinstance(mu, CurvePushforward):
        hints = [
            (z.real - b) / a for z, a, b in zip(zs, mu.alpha, mu.beta) if a != 0.0
        ]
        val, err = integrate_line(
            lambda s: impl.kernel_k(zs, mu.at(s)) * mu.weight(s),
            cfg,
            singularities=hints,
        )
        return mu.scale * val, mu.scale * err

    raise InvalidArgumentError(f"unknown measure variant {type(mu).__name__}")


def _boundary_hints(mu: Measure, prefix: tuple):
    """Spike locations on the next integration axis for boundary integrals.

    Used by Stieltjes inversion: as y -> 0+ the integrand of the x-integral
    peaks where the measure carries mass on the slice through `prefix`.
    """
    axis = len(prefix)
    if isinstance(mu, Atomic):
        return [p[axis] for p in mu.points]
    if isinstance(mu, MeasureSum):
        out = []
        for t in mu.terms:
            out.extend(_boundary_hints(t, prefix))
        return out
    if isinstance(mu, CurvePushforward):
        if mu.alpha[axis] == 0.0:
            return [mu.beta[axis]]
        for i in range(axis):
            if mu.alpha[i] != 0.0:
                s = (prefix[i] - mu.beta[i]) / mu.alpha[i]
                return [mu.alpha[axis] * s + mu.beta[axis]]
        return []
    return []  # absolutely continuous with smooth density


_GROWTH_CACHE: dict = {}


def _require_growth(mu: Measure, cfg: QuadratureConfig) -> None:
    key = (mu, cfg)
    result = _GROWTH_CACHE.get(key)
    if result is None:
        result = check_growth(mu, cfg)
        _GROWTH_CACHE[key] = result
    if not result.finite:
        raise InvalidMeasureError("measure fails the growth condition")


class CauchyTypeFunction:
    """g(z) = (1/pi^n) integral K_n(z, t) dmu(t) on the whole cut-plane."""

    def __init__(self, measure: Measure, config: QuadratureConfig = DEFAULT_CONFIG):
        _require_growth(measure, config)
        self.measure = measure
        self.config = config
        self.dimension = measure.dimension
        self._prefactor = 1.0 / math.pi**self.dimension

    def evaluate(self, z) -> tuple:
        zs = z.coords if isinstance(z, CutPlanePoint) else CutPlanePoint(tuple(z)).coords
        if len(zs) != self.dimension:
            raise InvalidArgumentError("point dimension does not match measure")
        val, err = _kernel_integral(self.measure, zs, self.config)
        return self._prefactor * val, self._prefactor * err

    def __call__(self, z) -> complex:
        return self.evaluate(z)[0]

    def boundary_hints(self, prefix: tuple):
        return _boundary_hints(self.measure, prefix)


def evaluate_cauchy(mu: Measure, z, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    return CauchyTypeFunction(mu, cfg)(z)


@dataclass(frozen=True)
class HerglotzTriple:
    """Representing data (a, b, mu); b_j >= 0, mu satisfies the growth bound."""

    a: float
    b: tuple
    mu: Measure

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        if any(x < 0 for x in self.b):
            raise InvalidArgumentError("b components must be >= 0")
        if len(self.b) != self.mu.dimension:
            raise InvalidArgumentError("b and measure dimensions differ")


class HerglotzFunction:
    """h_sym(z) = a + sum b_j z_j + (1/pi^n) integral K_n dmu.

    On C+^n this is the represented Herglotz function; on the remaining
    components it is the symmetric extension (not the analytic one).
    """

    def __init__(self, triple: HerglotzTriple, config: QuadratureConfig = DEFAULT_CONFIG):
        self.triple = triple
        self.config = config
        self.dimension = triple.mu.dimension
        self._cauchy = CauchyTypeFunction(triple.mu, config)

    def evaluate(self, z) -> tuple:
        zs = z.coords if isinstance(z, CutPlanePoint) else CutPlanePoint(tuple(z)).coords
        val, err = self._cauchy.evaluate(zs)
        lin = self.triple.a + sum(b * c for b, c in zip(self.triple.b, zs))
        return lin + val, err

    def __call__(self, z) -> complex:
        return self.evaluate(z)[0]

    def boundary_hints(self, prefix: tuple):
        return _boundary_hints(self.triple.mu, prefix)


def evaluate_herglotz_sym(
    triple: HerglotzTriple, z, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> complex:
    return HerglotzFunction(triple, cfg)(z)


class ClosedFormFunction:
    """Per-component closed forms, keyed by signature.

    Evaluation refuses points whose component has no branch; the catalogue
    entries define all four components of the two-variable cut-plane.
    """

    def __init__(self, name, dimension, branches, measure=None):
        self.name = name
        self.dimension = dimension
        self.branches = branches
        self.measure = measure  # defining measure, when the function is Cauchy-type

    def evaluate(self, z) -> tuple:
        return self(z), 0.0

    def __call__(self, z) -> complex:
        p = z if isinstance(z, CutPlanePoint) else CutPlanePoint(tuple(z))
        if p.n != self.dimension:
            raise InvalidArgumentError(
                f"{self.name} is defined in dimension {self.dimension}"
            )
        branch = self.branches.get(p.signature().signs)
        if branch is None:
            raise InvalidArgumentError(
                f"{self.name} has no branch for component {p.signature().signs}"
            )
        return branch(*p.coords)

    def boundary_hints(self, prefix: tuple):
        if self.measure is None:
            return []
        return _boundary_hints(self.measure, prefix)


class UpperRestriction:
    """View of a function restricted to C+^n (raises elsewhere)."""

    def __init__(self, f):
        self.inner = f
        self.dimension = f.dimension
        self.name = getattr(f, "name", "function") + "|upper"

    def evaluate(self, z):
        p = z if isinstance(z, CutPlanePoint) else CutPlanePoint(tuple(z))
        if not p.is_upper():
            raise InvalidArgumentError(f"{self.name} is only defined on C+^n")
        if hasattr(self.inner, "evaluate"):
            return self.inner.evaluate(p)
        return self.inner(p), 0.0

    def __call__(self, z) -> complex:
        return self.evaluate(z)[0]

    def boundary_hints(self, prefix: tuple):
        inner = getattr(self.inner, "boundary_hints", None)
        return inner(prefix) if inner else []


def restrict_to_upper(f) -> UpperRestriction:
    return UpperRestriction(f)


_PP = (1, 1)
_MP = (-1, 1)
_PM = (1, -1)
_MM = (-1, -1)

# Defining measure of f4 as a Cauchy-type function: mu2 + 5*lambda on R^2.
F4_DEFINING_MEASURE = MeasureSum((MU2, LebesgueScaled(5.0, 2)))


def _constant(c):
    return lambda z1, z2: c


_CATALOGUE_SPECS = {
    "f0": {
        _PP: _constant(-1j),
        _MP: lambda z1, z2: 1.0 / z2,
        _PM: _constant(0j),
        _MM: _constant(0j),
    },
    "f1": {
        _PP: _constant(1j),
        _MP: lambda z1, z2: 1.0 / z2,
        _PM: _constant(0j),
        _MM: _constant(0j),
    },
    "f2": {
        _PP: lambda z1, z2: -0.5j - 1 / (1j + z1) - 1 / (1j + z2),
        _MP: lambda z1, z2: -0.5j + 1 / (z2 - z1) - 1 / (1j + z2),
        _PM: lambda z1, z2: -0.5j - 1 / (1j + z1) + 1 / (z1 - z2),
        _MM: _constant(-0.5j),
    },
    "f3": {
        _PP: _constant(-1j),
        _MP: _constant(0j),
        _PM: _constant(0j),
        _MM: _constant(0j),
    },
    "f4": {
        _PP: lambda z1, z2: 4.5j - 1 / (1j + z1) - 1 / (1j + z2),
        _MP: lambda z1, z2: -5.5j + 1 / (z2 - z1) - 1 / (1j + z2),
        _PM: lambda z1, z2: -5.5j - 1 / (1j + z1) + 1 / (z1 - z2),
        _MM: _constant(-5.5j),
    },
    "f5": {
        _PP: _constant(1j),
        _MP: _constant(0j),
        _PM: _constant(0j),
        _MM: _constant(0j),
    },
    "f6": {
        _PP: _constant(-1j),
        _MP: _constant(1j),
        _PM: _constant(1j),
        _MM: _constant(1j),
    },
    "f7": {
        _PP: _constant(1j),
        _MP: _constant(-1j),
        _PM: _constant(-1j),
        _MM: _constant(-1j),
    },
}

_CATALOGUE_MEASURES = {
    "f2": MU2,
    "f4": F4_DEFINING_MEASURE,
}

CATALOGUE_IDS = tuple(sorted(_CATALOGUE_SPECS))


def catalogue(fid: str) -> ClosedFormFunction:
    """The eight two-variable example functions, as exact closed forms."""
    if fid not in _CATALOGUE_SPECS:
        raise UnknownCatalogueIdError(f"unknown catalogue id {fid!r}")
    return ClosedFormFunction(
        fid, 2, _CATALOGUE_SPECS[fid], measure=_CATALOGUE_MEASURES.get(fid)
    )


# The representing measure of f4|C+^2 in the integral-representation sense
# (distinct from the defining measure mu2 + 5*lambda of f4 as a Cauchy-type
# function; both are needed by the uniqueness experiments).
F4_NEVANLINNA_MEASURE = MeasureSum(
    (
        LebesgueScaled(4.5, 2),
        ProductDensity((DensityDescriptor("cauchy_weight"), constant_density(1.0))),
        ProductDensity((constant_density(1.0), DensityDescriptor("cauchy_weight"))),
    )
)


def _probe_grid(n: int):
    if n <= 2:
        res = (-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 4.0)
        ims = (0.1, 0.5, 1.0, 2.0, 4.0)
    else:
        res = (-2.0, 0.0, 2.0)
        ims = (0.1, 1.0)
    axis = [complex(x, y) for x in res for y in ims]
    import itertools

    for coords in itertools.product(axis, repeat=n):
        yield CutPlanePoint(coords)


def herglotz_imag_lower_bound_probe(f, samples: int = 200, seed: int = 1729) -> float:
    """Minimum of Im f over a deterministic C+^n grid plus seeded random points."""
    best = math.inf
    for p in _probe_grid(f.dimension):
        best = min(best, f(p).imag)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        coords = tuple(
            complex(rng.uniform(-6, 6), math.exp(rng.uniform(math.log(0.05), math.log(10))))
            for _ in range(f.dimension)
        )
        best = min(best, f(CutPlanePoint(coords)).imag)
    return best


# ---------------------------------------------------------------------------
# Function descriptor JSON

def function_from_dict(obj: dict, cfg: QuadratureConfig = DEFAULT_CONFIG):
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidArgumentError("function descriptor needs a 'type' field")
    kind = obj["type"]
    if kind == "catalogue":
        allowed = {"type", "id"}
        if set(obj) - allowed:
            raise InvalidArgumentError(f"unknown fields in catalogue descriptor")
        fid = obj["id"]
        if fid.endswith("-upper"):
            return restrict_to_upper(catalogue(fid[: -len("-upper")]))
        return catalogue(fid)
    if kind == "cauchy":
        if set(obj) - {"type", "measure"}:
            raise InvalidArgumentError("unknown fields in cauchy descriptor")
        return CauchyTypeFunction(measure_from_dict(obj["measure"]), cfg)
    if kind == "herglotz":
        if set(obj) - {"type", "a", "b", "measure"}:
            raise InvalidArgumentError("unknown fields in herglotz descriptor")
        triple = HerglotzTriple(
            obj["a"], tuple(obj["b"]), measure_from_dict(obj["measure"])
        )
        return HerglotzFunction(triple, cfg)
    raise InvalidArgumentError(f"unknown function type {kind!r}")


def function_from_json(text: str, cfg: QuadratureConfig = DEFAULT_CONFIG):
    return function_from_dict(json.loads(text), cfg)
