"""Parity between the compiled kernel backend and the pure-Python fallback."""

import math

import pytest

from polyherglotz.backend import backend_name, get_backend
from conftest import random_cut_point, random_upper_point

compiled = None
try:
    compiled = get_backend("compiled")
except Exception:
    pass
pure = get_backend("python")

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled backend not built"
)


def test_backend_name_reported():
    assert backend_name() in ("compiled", "python")


@needs_compiled
def test_scalar_parity(rng):
    for _ in range(500):
        z = complex(rng.uniform(-5, 5), rng.choice([-1, 1]) * rng.uniform(0.05, 5))
        t = rng.uniform(-8, 8)
        assert abs(compiled.a_factor(z, t) - pure.a_factor(z, t)) < 1e-14
        assert abs(compiled.k1_closed(z, t) - pure.k1_closed(z, t)) < 1e-14
        for rho in (-1, 0, 1):
            assert abs(compiled.n_factor(rho, z, t) - pure.n_factor(rho, z, t)) < 1e-14


@needs_compiled
def test_vector_parity(rng):
    for _ in range(200):
        n = int(rng.integers(1, 4))
        z = random_cut_point(rng, n).coords
        t = tuple(rng.uniform(-5, 5, size=n))
        assert abs(compiled.kernel_k(z, t) - pure.kernel_k(z, t)) < 1e-12
        assert abs(compiled.symmetry_sum(z, t) - pure.symmetry_sum(z, t)) < 1e-12
        zu = random_upper_point(rng, n).coords
        assert abs(compiled.poisson(zu, t) - pure.poisson(zu, t)) < 1e-12
        assert (
            abs(compiled.alternating_sum(zu, t) - pure.alternating_sum(zu, t)) < 1e-12
        )


@needs_compiled
def test_a_line_integral_parity():
    # weighted A integrals agree across backends to quadrature tolerance
    for z in (0.5 + 1.5j, -2 - 0.3j, 1j):
        for wcode, p0, p1 in ((0, 1.0, 0.0), (1, 0.0, 0.0), (2, 0.0, 1.0)):
            a = compiled.a_line_integral(z, wcode, p0, p1, 1e-10, 1e-9, 2000)
            b = pure.a_line_integral(z, wcode, p0, p1, 1e-10, 1e-9, 2000)
            assert abs(a[0] - b[0]) < 1e-8


@needs_compiled
def test_a_line_integral_analytic_values():
    # integral of A(z, t) dt over R is pi for Im z > 0 and 0 for Im z < 0;
    # at the anchor z = i it is pi (A(i,t) = (1+t^2)^-1)
    for backend in (compiled, pure):
        v, _ = backend.a_line_integral(0.3 + 0.9j, 0, 1.0, 0.0, 1e-10, 1e-9, 2000)
        assert abs(v - math.pi) < 1e-8
        v, _ = backend.a_line_integral(0.3 - 0.9j, 0, 1.0, 0.0, 1e-10, 1e-9, 2000)
        assert abs(v) < 1e-8
        v, _ = backend.a_line_integral(1j, 0, 1.0, 0.0, 1e-10, 1e-9, 2000)
        assert abs(v - math.pi) < 1e-8


def test_env_override(monkeypatch):
    import importlib

    import polyherglotz.backend as bk

    monkeypatch.setenv("POLYHERGLOTZ_BACKEND", "python")
    importlib.reload(bk)
    assert bk.backend_name() == "python"
    monkeypatch.delenv("POLYHERGLOTZ_BACKEND")
    importlib.reload(bk)
