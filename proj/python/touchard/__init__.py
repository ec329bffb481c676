"""Exact generalized Touchard polynomials, Stirling triangles and identity checks.

Coefficient lists are returned lowest degree first as ``fractions.Fraction``.
"""

import json
import pkgutil
from fractions import Fraction

__path__ = pkgutil.extend_path(__path__, __name__)

from . import _core  # noqa: E402

__all__ = [
    "touchard",
    "bell_numbers",
    "stirling2",
    "gen_stirling",
    "triangle",
    "triangle_from_weyl",
    "power_qd",
    "hoppe_derivative",
    "lowering_check",
    "laguerre",
    "bessel_poly",
    "delta_poly",
    "verify_gf",
    "verify_shifted_gf",
    "verify_operational_expansion",
    "verify_laguerre_link",
    "verify_bessel_link",
    "run_cli",
]

_ROUTES = {
    "rodrigues": _core.touchard_rodrigues,
    "recurrence": _core.touchard_recurrence,
    "explicit": _core.touchard_explicit,
}


def _fractions(values):
    return [Fraction(v) for v in values]


def touchard(m, n, route="rodrigues"):
    """Coefficients of T_n^(m)(x) built by the named route."""
    try:
        fn = _ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; expected one of {sorted(_ROUTES)}") from None
    return _fractions(fn(m, n))


def bell_numbers(n_max):
    return [int(b) for b in _core.bell_numbers(n_max)]


def stirling2(n, k):
    return Fraction(_core.stirling2(n, k))


def gen_stirling(m, n, k, as_printed=False):
    return Fraction(_core.gen_stirling(m, n, k, as_printed))


def triangle(m, n_max, as_printed=False):
    doc = json.loads(_core.triangle_json(m, n_max, as_printed))
    return [_fractions(row) for row in doc["rows"]]


def triangle_from_weyl(m, n):
    return _fractions(_core.triangle_from_weyl(m, n))


def power_qd(m, n):
    """Normal-ordered (x^m D)^n as {(x_power, d_power): Fraction}."""
    return {(a, b): Fraction(c) for a, b, c in json.loads(_core.power_qd_json(m, n))}


def hoppe_derivative(f, order):
    """order-th derivative at 0 of exp(f(t)); f lists Taylor coefficients of t^0, t^1, ..."""
    return Fraction(_core.hoppe_derivative([str(Fraction(c)) for c in f], order))


def lowering_check(n):
    return _core.lowering_check(n)


def laguerre(n):
    return _fractions(_core.laguerre(n))


def bessel_poly(n):
    return _fractions(_core.bessel_poly(n))


def delta_poly(n):
    return _fractions(_core.delta_poly(n))


def verify_gf(m, order=10):
    return json.loads(_core.verify_gf(m, order))


def verify_shifted_gf(m, ell, order=10):
    return json.loads(_core.verify_shifted_gf(m, ell, order))


def verify_operational_expansion(m, p):
    return json.loads(_core.verify_operational_expansion(m, p))


def verify_laguerre_link(n, as_printed=False):
    return json.loads(_core.verify_laguerre_link(n, as_printed))


def verify_bessel_link(n, order=None, as_printed=False):
    return json.loads(_core.verify_bessel_link(n, n if order is None else order, as_printed))


def run_cli(args):
    """Runs the command-line interface in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
