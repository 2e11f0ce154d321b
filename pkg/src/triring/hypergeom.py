"""Local expansions of the hypergeometric system at 0, 1 and infinity.

The two basic solutions are built as

    u0 = z**(gamma/2) (1-z)**((alpha+beta-gamma+1)/2) 2F1(alpha, beta; gamma; z)
    u1 = z**(1-gamma/2) (1-z)**((alpha+beta-gamma+1)/2)
         2F1(alpha-gamma+1, beta-gamma+1; 2-gamma; z)

which both solve the normal-form equation

    U'' + (a/(4 z^2) + b/(4 (z-1)^2) + c/(4 z^2 (z-1)^2)) U = 0

and have Wronskian u1' u0 - u1 u0' identically 1 - gamma.  From them the
weight-2 combinations y0 = u0 u0', y1 = y0 - u0^2/z, y2 = y0 - u0^2/(z-1)
and the pair tau = u1/u0, q = exp(tau) are produced as exact rational
Puiseux series at 0.  At 1 and infinity the expansions go through the
classical connection formulas; the Gamma-ratio constants enter as opaque
polynomial symbols (``theta``, ``theta1`` at 1; ``zw``, ``zw1`` at
infinity, the products of the unit ``zeta1`` with the two connection
coefficients) with floating bindings supplied for numeric work.

The statement-form constant omega = G(g)G(b-a)/(G(g-a)G(b)) is the one
the numeric check confirms; the variant with G(alpha) in the denominator
is kept only to demonstrate that it fails, see
:func:`omega_variant_check`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CutLineViolation, PolarParameter
from .params import TriangleParams, derived_constants
from .ring import Poly
from .series import PuiseuxSeries

SYMBOLS_AT_ONE = ("theta", "theta1")
SYMBOLS_AT_INF = ("zw", "zw1")

DEFAULT_ORDER = 40


# -- exact building blocks ------------------------------------------------------


def pochhammer_falling(x, n):
    """(x-n+1)(x-n+2)...(x-1)x; the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def pochhammer_rising(x, n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def binomial_series(s, N, argument_sign=1):
    """(1 + argument_sign * x)**s truncated at x**N (exact rationals)."""
    s = Fraction(s)
    coeffs = {}
    c = Fraction(1)
    for n in range(N + 1):
        if n:
            c = c * (s - n + 1) / n
        value = c * argument_sign ** n
        if value:
            coeffs[n] = value
    return PuiseuxSeries(1, coeffs, N + 1)


def gauss_2F1(a, b, c, N):
    """Truncated 2F1(a, b; c; x) with exact rational coefficients.

    Uses the rising-factorial ratio convention for the coefficients.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise PolarParameter(f"lower parameter {c} is a nonpositive integer")
    coeffs = {}
    term = Fraction(1)
    for n in range(N + 1):
        if n:
            term = term * (a + n - 1) * (b + n - 1) / ((c + n - 1) * n)
        if term:
            coeffs[n] = term
    return PuiseuxSeries(1, coeffs, N + 1)


def _geometric(N, sign=1):
    """1/(1 - sign*x) to order N."""
    return PuiseuxSeries(1, {n: Fraction(sign ** n) for n in range(N + 1)}, N + 1)


def u_series(which, params: TriangleParams, N=DEFAULT_ORDER):
    """Exact Puiseux series of u0 or u1 at z = 0."""
    al, be, ga = params.as_tuple()
    s = (al + be - ga + 1) / 2
    binom = binomial_series(s, N, argument_sign=-1)
    if which == "u0":
        body = gauss_2F1(al, be, ga, N)
        lead = ga / 2
    elif which == "u1":
        body = gauss_2F1(al - ga + 1, be - ga + 1, 2 - ga, N)
        lead = 1 - ga / 2
    else:
        raise ValueError("which must be 'u0' or 'u1'")
    return (binom * body).shift(lead)


@dataclass
class ExpansionFamily:
    """The four local series and their building data at one point.

    ``u0_dz`` is d(u0)/dz expressed in the local variable, so the chain
    rule for the local variable has already been applied.
    """

    point: str  # "zero" | "one" | "inf"
    local_variable: str
    u0: PuiseuxSeries
    u0_dz: PuiseuxSeries
    u0sq: PuiseuxSeries
    y0: PuiseuxSeries
    y1: PuiseuxSeries
    y2: PuiseuxSeries
    symbols: tuple

    def series_map(self):
        return {"u0sq": self.u0sq, "y0": self.y0, "y1": self.y1, "y2": self.y2}


def _family_from_u0(point, local_variable, u0, u0_dz, inv_z, inv_zm1, symbols):
    u0sq = u0 * u0
    y0 = u0 * u0_dz
    y1 = y0 - u0sq * inv_z
    y2 = y0 - u0sq * inv_zm1
    return ExpansionFamily(point, local_variable, u0, u0_dz, u0sq, y0, y1, y2, symbols)


def y_series(point, params: TriangleParams, N=DEFAULT_ORDER) -> ExpansionFamily:
    """Expansions of u0^2, y0, y1, y2 at the requested singular point.

    At zero the coefficients are exact rationals.  At one they are exact
    polynomials in the symbols theta, theta1; at infinity in zw, zw1.
    """
    al, be, ga = params.as_tuple()
    s = (al + be - ga + 1) / 2
    if point in ("zero", "0", 0):
        u0 = u_series("u0", params, N)
        u0_dz = u0.differentiate()
        inv_z = PuiseuxSeries.x_power(Fraction(-1), N)
        inv_zm1 = -_geometric(N)  # 1/(z-1) = -(1 + z + z^2 + ...)
        return _family_from_u0("zero", "z", u0, u0_dz, inv_z, inv_zm1, ())
    if point in ("one", "1", 1):
        th = Poly.var(SYMBOLS_AT_ONE, "theta")
        th1 = Poly.var(SYMBOLS_AT_ONE, "theta1")
        F1 = gauss_2F1(al, be, al + be - ga + 1, N)
        F2 = gauss_2F1(ga - al, ga - be, ga - al - be + 1, N)
        binom = binomial_series(ga / 2, N, argument_sign=-1)  # (1-x)^(gamma/2)
        bracket = F1.scale(th) + F2.scale(th1).shift(ga - al - be)
        u0 = (binom * bracket).shift(s)
        u0_dz = -u0.differentiate()  # x = 1 - z
        inv_z = _geometric(N)  # 1/z = 1/(1-x)
        inv_zm1 = -PuiseuxSeries.x_power(Fraction(-1), N)  # z - 1 = -x
        return _family_from_u0("one", "1-z", u0, u0_dz, inv_z, inv_zm1, SYMBOLS_AT_ONE)
    if point in ("inf", "infinity", "oo"):
        zw = Poly.var(SYMBOLS_AT_INF, "zw")
        zw1 = Poly.var(SYMBOLS_AT_INF, "zw1")
        # argument of both tails is 1/z = -x for x = (-z)^(-1)
        Ft1 = gauss_2F1(al, 1 - ga + al, 1 - be + al, N).scale_argument(-1)
        Ft2 = gauss_2F1(be, 1 - ga + be, 1 - al + be, N).scale_argument(-1)
        binom = binomial_series(s, N, argument_sign=1)  # (1+x)^s
        bracket = Ft1.scale(zw) + Ft2.scale(zw1).shift(be - al)
        u0 = (binom * bracket).shift((al - be - 1) / 2)
        u0_dz = u0.differentiate().shift(2)  # d/dz = x^2 d/dx
        inv_z = PuiseuxSeries.x_power(Fraction(1), N, Fraction(-1))  # 1/z = -x
        # 1/(z-1) = -x/(1+x)
        inv_zm1 = -(PuiseuxSeries.x_power(Fraction(1), N) * _geometric(N, sign=-1))
        return _family_from_u0(
            "inf", "(-z)^(-1)", u0, u0_dz, inv_z, inv_zm1, SYMBOLS_AT_INF
        )
    raise ValueError(f"unknown expansion point {point!r}")


def tau_q_series_at_zero(params: TriangleParams, N=DEFAULT_ORDER):
    """tau = u1/u0 (order 1 - gamma) and q = exp(tau), exact at z = 0."""
    u0 = u_series("u0", params, N)
    u1 = u_series("u1", params, N)
    tau = (u1 / u0).normalize_ram()
    return tau, tau.exp()


def wronskian_series(params: TriangleParams, N=DEFAULT_ORDER):
    """u1' u0 - u1 u0' as a formal series; identically 1 - gamma."""
    u0 = u_series("u0", params, N)
    u1 = u_series("u1", params, N)
    return u1.differentiate() * u0 - u1 * u0.differentiate()


def normal_form_potential(params: TriangleParams, N=DEFAULT_ORDER):
    """a/(4 z^2) + b/(4 (z-1)^2) + c/(4 z^2 (z-1)^2) as an exact series."""
    d = derived_constants(params)
    g2 = _geometric(N) * _geometric(N)  # 1/(1-z)^2 = 1/(z-1)^2
    x_m2 = PuiseuxSeries.x_power(Fraction(-2), N)
    return (
        x_m2.scale(d.a / 4)
        + g2.scale(d.b / 4)
        + (x_m2 * g2).scale(d.c / 4)
    )


def ode_residual_series(u, params: TriangleParams, N=DEFAULT_ORDER):
    """u'' + potential * u; vanishes identically for u0 and u1."""
    return u.differentiate().differentiate() + normal_form_potential(params, N) * u


# -- Gamma and the connection constants ----------------------------------------

_LANCZOS_G = 7
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_complex(z):
    """Lanczos approximation of Gamma, good to ~13 significant digits."""
    z = complex(z)
    if z.real < 0.5:
        # reflection; poles at nonpositive integers surface as overflow
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            raise ValueError(f"Gamma pole at {z}")
        return cmath.pi / (s * gamma_complex(1 - z))
    z -= 1
    x = complex(_LANCZOS_COEFFS[0])
    for i, coef in enumerate(_LANCZOS_COEFFS[1:], start=1):
        x += coef / (z + i)
    t = z + _LANCZOS_G + 0.5
    value = math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x
    return value


@dataclass(frozen=True)
class ConnectionConstants:
    """Numeric values of the Gamma-ratio constants for one triple.

    ``omega`` follows the definition with Gamma(beta) in the denominator;
    ``omega_alt`` is the rejected variant with Gamma(alpha) instead (see
    :func:`omega_variant_check`).  ``bindings`` maps the adjoined series
    symbols to complex values: theta, theta1, zw = zeta1*omega and
    zw1 = zeta1*omega1.
    """

    theta: complex
    theta1: complex
    omega: complex
    omega_alt: complex
    omega1: complex
    zeta1: complex

    @property
    def bindings(self):
        return {
            "theta": self.theta,
            "theta1": self.theta1,
            "zw": self.zeta1 * self.omega,
            "zw1": self.zeta1 * self.omega1,
        }


def connection_constants(params: TriangleParams) -> ConnectionConstants:
    al, be, ga = (float(v) for v in params.as_tuple())
    G = gamma_complex
    return ConnectionConstants(
        theta=G(ga) * G(ga - al - be) / (G(ga - al) * G(ga - be)),
        theta1=G(ga) * G(al + be - ga) / (G(al) * G(be)),
        omega=G(ga) * G(be - al) / (G(ga - al) * G(be)),
        omega_alt=G(ga) * G(be - al) / (G(ga - al) * G(al)),
        omega1=G(ga) * G(al - be) / (G(al) * G(ga - be)),
        zeta1=cmath.exp(1j * cmath.pi * ga / 2),
    )


# -- numeric verification --------------------------------------------------------


def hyp2f1_numeric(a, b, c, z, tol=1e-15, max_terms=200_000):
    """Plain series evaluation of 2F1; requires |z| < 1."""
    z = complex(z)
    if abs(z) >= 1:
        raise ValueError("series evaluation needs |z| < 1")
    a, b, c = float(a), float(b), float(c)
    term = 1.0 + 0j
    total = 1.0 + 0j
    for n in range(1, max_terms):
        term *= (a + n - 1) * (b + n - 1) / ((c + n - 1) * n) * z
        total += term
        if abs(term) < tol * max(abs(total), 1e-30) and n > 8:
            return total
    return total


def hyp2f1_numeric_ext(a, b, c, z):
    """2F1 off the unit disk via the Pfaff transform.

    Maps the argument to z/(z-1); valid whenever that lands inside the
    unit disk, e.g. everywhere on the cut plane with Re(z) < 1/2.
    """
    z = complex(z)
    if abs(z) < 0.9:
        return hyp2f1_numeric(a, b, c, z)
    zz = z / (z - 1)
    if abs(zz) >= 0.999:
        raise ValueError(f"Pfaff transform does not converge at {z}")
    return (1 - z) ** (-float(a)) * hyp2f1_numeric(float(a), float(c) - float(b), float(c), zz)


def _check_sample(z):
    z = complex(z)
    if z.imag == 0 and (z.real <= 0 or z.real >= 1):
        raise CutLineViolation(f"sample {z} lies on a branch cut")
    if abs(z) >= 1:
        raise ValueError(f"sample {z} is outside the convergence disk")
    return z


def u_value_and_derivative(which, params, z):
    """Closed-form numeric (u, u') at a point of the cut unit disk."""
    z = complex(z)
    al, be, ga = (float(v) for v in params.as_tuple())
    s = (al + be - ga + 1) / 2
    if which == "u0":
        g0, F_args = ga / 2, (al, be, ga)
    else:
        g0, F_args = 1 - ga / 2, (al - ga + 1, be - ga + 1, 2 - ga)
    F = hyp2f1_numeric(*F_args, z)
    a1, b1, c1 = F_args
    # d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)
    Fp = a1 * b1 / c1 * hyp2f1_numeric(a1 + 1, b1 + 1, c1 + 1, z)
    pref = z ** g0 * (1 - z) ** s
    u = pref * F
    up = pref * ((g0 / z - s / (1 - z)) * F + Fp)
    return u, up


@dataclass
class NumericReport:
    params: TriangleParams
    order: int
    wronskian_dev: dict
    ode_residual: dict
    connection_at_one: dict
    connection_at_inf: dict
    theta_gamma_route: complex
    theta_series_route: complex
    omega_matches_statement: bool
    omega_residuals: tuple

    def max_connection_residual(self):
        vals = list(self.connection_at_one.values()) + list(
            self.connection_at_inf.values()
        )
        return max(vals) if vals else 0.0

    def as_dict(self):
        c = lambda v: [v.real, v.imag]
        return {
            "params": self.params.label(),
            "order": self.order,
            "wronskian_dev": {str(k): v for k, v in self.wronskian_dev.items()},
            "ode_residual": {str(k): v for k, v in self.ode_residual.items()},
            "connection_at_one": {str(k): v for k, v in self.connection_at_one.items()},
            "connection_at_inf": {str(k): v for k, v in self.connection_at_inf.items()},
            "theta_gamma_route": c(self.theta_gamma_route),
            "theta_series_route": c(self.theta_series_route),
            "omega_matches_statement": self.omega_matches_statement,
            "omega_residuals": list(self.omega_residuals),
        }


def omega_variant_check(params, z=-30.0):
    """Residuals of the expansion at infinity under both omega variants.

    Returns ``(residual_statement_form, residual_alt_form)``; the
    statement form (Gamma(beta) in the denominator) is the one that
    matches, the alternative fails by orders of magnitude.
    """
    al, be, ga = (float(v) for v in params.as_tuple())
    k = connection_constants(params)
    z = complex(z)
    lhs = hyp2f1_numeric_ext(al, be, ga, z)
    t1 = hyp2f1_numeric(al, 1 - ga + al, 1 - be + al, 1 / z)
    t2 = hyp2f1_numeric(be, 1 - ga + be, 1 - al + be, 1 / z)
    rhs = lambda om: om * (-z) ** (-al) * t1 + k.omega1 * (-z) ** (-be) * t2
    r_stmt = abs(lhs - rhs(k.omega)) / abs(lhs)
    r_alt = abs(lhs - rhs(k.omega_alt)) / abs(lhs)
    return r_stmt, r_alt


def numeric_checks(params: TriangleParams, samples=(0.1, 0.3, 0.5j), N=60):
    """Floating validation of the ODE, Wronskian and connection formulas."""
    al, be, ga = (float(v) for v in params.as_tuple())
    d = derived_constants(params)
    k = connection_constants(params)
    u0 = u_series("u0", params, N)
    u1 = u_series("u1", params, N)
    u0_d = u0.differentiate()
    u1_d = u1.differentiate()
    u0_dd = u0_d.differentiate()

    wron = {}
    ode = {}
    for z in samples:
        z = _check_sample(z)
        w_val = u1_d.evaluate(z) * u0.evaluate(z) - u1.evaluate(z) * u0_d.evaluate(z)
        wron[z] = abs(w_val - complex(float(d.w)))
        pot = (
            float(d.a) / (4 * z ** 2)
            + float(d.b) / (4 * (z - 1) ** 2)
            + float(d.c) / (4 * z ** 2 * (z - 1) ** 2)
        )
        ode[z] = abs(u0_dd.evaluate(z) + pot * u0.evaluate(z))

    conn1 = {}
    for z in (1e-3, 1e-2, 0.1):
        lhs = hyp2f1_numeric(al, be, ga, 1 - z)
        rhs = k.theta * hyp2f1_numeric(al, be, al + be - ga + 1, z) + k.theta1 * z ** (
            ga - al - be
        ) * hyp2f1_numeric(ga - al, ga - be, ga - al - be + 1, z)
        conn1[z] = abs(lhs - rhs) / abs(lhs)

    conn_inf = {}
    for z in (-30.0, complex(-5, 3)):
        lhs = hyp2f1_numeric_ext(al, be, ga, z)
        rhs = k.omega * (-z) ** (-al) * hyp2f1_numeric(
            al, 1 - ga + al, 1 - be + al, 1 / z
        ) + k.omega1 * (-z) ** (-be) * hyp2f1_numeric(be, 1 - ga + be, 1 - al + be, 1 / z)
        conn_inf[z] = abs(lhs - rhs) / abs(lhs)

    # theta by series: peel the second connection term off 2F1 near 1
    z = 1e-3
    theta_series = (
        hyp2f1_numeric(al, be, ga, 1 - z)
        - k.theta1
        * z ** (ga - al - be)
        * hyp2f1_numeric(ga - al, ga - be, ga - al - be + 1, z)
    ) / hyp2f1_numeric(al, be, al + be - ga + 1, z)

    r_stmt, r_alt = omega_variant_check(params)
    return NumericReport(
        params=params,
        order=N,
        wronskian_dev=wron,
        ode_residual=ode,
        connection_at_one=conn1,
        connection_at_inf=conn_inf,
        theta_gamma_route=k.theta,
        theta_series_route=theta_series,
        omega_matches_statement=(r_stmt < 1e-6 < r_alt),
        omega_residuals=(r_stmt, r_alt),
    )
