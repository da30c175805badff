"""
Stieltjes toolkit general tests
"""

from stieltjes import MethodSelector, QuadratureSpec, StieltjesQuery, Toolkit, __version__

TOOLKIT = Toolkit(n_max="128", stirling_terms=128)


def test_version():
    """Assert that the reflective version loading code works"""
    assert __version__ == "0.1.0"


def test_modules_linked():
    """Every module sees the others through the shared mapper"""
    for module in (
        TOOLKIT.combinatorics,
        TOOLKIT.quadrature,
        TOOLKIT.oracle,
        TOOLKIT.integral_reps,
        TOOLKIT.series_reps,
        TOOLKIT.derived,
    ):
        assert module.mapper.oracle is TOOLKIT.oracle
        assert module.mapper.combinatorics is TOOLKIT.combinatorics
        assert module.mapper.derived is TOOLKIT.derived
        assert module.logger.name == f"stieltjes.modules.{type(module).__name__}"
        assert module.name and module.help


def test_environment_sizing(monkeypatch):
    """Integer settings may come from the environment"""
    monkeypatch.setenv("STIELTJES_N_MAX", "64")
    with Toolkit(n_max="${STIELTJES_N_MAX}", stirling_terms=64) as toolkit:
        assert toolkit.combinatorics.n_max == 64
        assert toolkit.series_reps.max_terms == 64


def test_compute_grid_order():
    """Grid results keep the order of queries, then methods"""
    queries = [StieltjesQuery(1, 2.0), StieltjesQuery(0, 0.5)]
    methods = ["oracle", "asymptotic", "hermite"]
    grid = TOOLKIT.compute_grid(queries, methods, threads=2)

    assert [(query.k, query.a, sel) for (query, sel), _, _ in grid] == [
        (1, 2.0, MethodSelector.ORACLE),
        (1, 2.0, MethodSelector.HERMITE),
        (0, 0.5, MethodSelector.ORACLE),
        (0, 0.5, MethodSelector.ASYMPTOTIC),
        (0, 0.5, MethodSelector.HERMITE),
    ]
    assert all(seconds >= 0 for _, _, seconds in grid)
    for (_, sel), result, _ in grid:
        assert result.method == sel


def test_quadrature_spec_override():
    """A looser quadrature tolerance still reaches its own target"""
    with Toolkit(quadrature_spec=QuadratureSpec(tol=1e-6)) as toolkit:
        result = toolkit.compute(0, 1.0)
    assert result.converged
    assert abs(result.value - 0.5772156649015329) <= 1e-5
