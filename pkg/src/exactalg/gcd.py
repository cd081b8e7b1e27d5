"""
gcd, resultants and rational roots over Q.

The gcd is computed recursively: contents with respect to a main variable are
taken first, then a subresultant polynomial remainder sequence runs on the
primitive parts. Parametric input is rejected; the obstruction calculus never
needs a parametric gcd.
"""

import logging
from fractions import Fraction
from functools import reduce

import sympy

from src.core.errors import (
    DegenerateInput,
    ParametricInputError,
    PreconditionError,
    ZeroPolynomialError,
)
from src.exactalg.mpoly import MPoly

logger = logging.getLogger(__name__)


def _require_numeric(*polys: MPoly, operation: str) -> None:
    for p in polys:
        if not p.is_numeric():
            raise ParametricInputError(f"{operation} needs parameter-free input: {p}")


def as_univariate(p: MPoly, name: str) -> list[MPoly]:
    """Coefficients of `p` as a polynomial in `name`, constant term first."""
    i = p.table.index(name)
    coeffs: dict[int, dict] = {}
    for mono, c in p.terms():
        lowered = mono[:i] + (0,) + mono[i + 1 :]
        coeffs.setdefault(mono[i], {})[lowered] = c
    if not coeffs:
        return []
    return [MPoly(p.table, coeffs.get(e, {})) for e in range(max(coeffs) + 1)]


def from_univariate(coeffs: list[MPoly], name: str, like: MPoly) -> MPoly:
    v = MPoly.var(name, like.table)
    result = MPoly.zero(like.table)
    power = MPoly.const(1, like.table)
    for c in coeffs:
        if c:
            result = result + c * power
        power = power * v
    return result


def _strip(coeffs: list[MPoly]) -> list[MPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs = coeffs[:-1]
    return coeffs


def _exact(p: MPoly, d: MPoly) -> MPoly:
    q = p.trial_divide(d)
    if q is None:
        raise ArithmeticError(f"expected exact division of {p} by {d}")
    return q


def pseudo_remainder(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """prem(a, b): lc(b)^(deg a - deg b + 1) * a reduced modulo b."""
    lead_b = b[-1]
    db = len(b) - 1
    r = list(a)
    steps = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        r = [c * lead_b for c in r]
        for j, bc in enumerate(b):
            r[j + shift] = r[j + shift] - lead_r * bc
        r = _strip(r)
        steps -= 1
    if steps > 0:
        factor = lead_b**steps
        r = [c * factor for c in r]
    return r


def content_in(p: MPoly, name: str) -> MPoly:
    """gcd of the coefficients of `p` as a polynomial in `name`, made monic."""
    coeffs = [c for c in as_univariate(p, name) if c]
    return reduce(poly_gcd, coeffs).monic()


def _subresultant_gcd(a: MPoly, b: MPoly, name: str) -> MPoly:
    """gcd of two primitive polynomials sharing the main variable `name`."""
    ua, ub = as_univariate(a, name), as_univariate(b, name)
    if len(ua) < len(ub):
        ua, ub = ub, ua
    one = MPoly.const(1, a.table)
    g = h = one
    while True:
        delta = len(ua) - len(ub)
        r = pseudo_remainder(ua, ub)
        if not r:
            break
        if len(r) == 1:
            return one
        ua = ub
        divisor = g * h**delta
        ub = [_exact(c, divisor) for c in r]
        g = ua[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exact(g**delta, h ** (delta - 1))
    last = from_univariate(ub, name, a)
    return _exact(last, content_in(last, name))


def poly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Monic gcd of two numeric polynomials; gcd(0, q) is q made monic."""
    _require_numeric(p, q, operation="gcd")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    one = MPoly.const(1, p.table)
    if p.is_constant() or q.is_constant():
        return one
    vp, vq = p.variable_indices(), q.variable_indices()
    names = p.table.names
    only_p = sorted(vp - vq)
    if only_p:
        return poly_gcd(content_in(p, names[only_p[0]]), q)
    only_q = sorted(vq - vp)
    if only_q:
        return poly_gcd(p, content_in(q, names[only_q[0]]))
    main = names[min(vp & vq)]
    cp, cq = content_in(p, main), content_in(q, main)
    cont = poly_gcd(cp, cq)
    prim = _subresultant_gcd(_exact(p, cp), _exact(q, cq), main)
    return (cont * prim).monic()


def gcd_homogeneous(p: MPoly, q: MPoly) -> MPoly:
    """
    Monic gcd of two homogeneous numeric polynomials in the geometric variables.

    The common monomial content is split off first; the rest is computed in the
    chart of the last geometric variable and homogenized back.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomialError("gcd of the zero polynomial is not defined")
    _require_numeric(p, q, operation="gcd")
    if p.homogeneous_degree() is None or q.homogeneous_degree() is None:
        raise PreconditionError("gcd_homogeneous needs homogeneous input")
    table = p.table
    mp, mq = p.content_monomial(), q.content_monomial()
    common = tuple(min(a, b) for a, b in zip(mp, mq))
    p1, q1 = p.divide_monomial(mp), q.divide_monomial(mq)
    chart = table.geometric[-1]
    g = poly_gcd(p1.subs({chart: 1}), q1.subs({chart: 1}))
    g = g.homogenize(chart)
    return (g * MPoly.monomial(common, 1, table)).monic()


def gcd_many(polys: list[MPoly]) -> MPoly:
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ZeroPolynomialError("gcd of zero polynomials is not defined")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.is_constant():
            break
        g = gcd_homogeneous(g, p)
    return g


def _bareiss_determinant(matrix: list[list[MPoly]]) -> MPoly:
    n = len(matrix)
    m = [row[:] for row in matrix]
    table = m[0][0].table
    sign = 1
    previous = MPoly.const(1, table)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return MPoly.zero(table)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous)
        previous = m[k][k]
    return m[n - 1][n - 1] * sign


def resultant(p: MPoly, q: MPoly, name: str) -> MPoly:
    """Sylvester resultant of `p` and `q` eliminating `name`."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomialError("resultant of the zero polynomial")
    _require_numeric(p, q, operation="resultant")
    up, uq = as_univariate(p, name), as_univariate(q, name)
    m, n = len(up) - 1, len(uq) - 1
    if m == 0 and n == 0:
        raise DegenerateInput(f"neither polynomial involves {name}")
    table = p.table
    if m == 0:
        return p**n
    if n == 0:
        return q**m
    zero = MPoly.zero(table)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(up)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(uq)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_determinant(rows)


def rational_roots(p: MPoly, name: str) -> tuple[dict[Fraction, int], bool]:
    """
    Rational roots of a univariate numeric polynomial with multiplicities.

    The flag is True when the roots account for the full degree, i.e. the
    polynomial splits over Q.
    """
    _require_numeric(p, operation="root extraction")
    if p.is_zero():
        raise DegenerateInput("the zero polynomial vanishes everywhere")
    if p.variables() - {name}:
        raise PreconditionError(f"{p} is not univariate in {name}")
    coeffs = [c.constant_value() for c in as_univariate(p, name)]
    if len(coeffs) == 1:
        return {}, True
    t = sympy.Symbol(name)
    poly = sympy.Poly.from_list(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
        t,
        domain="QQ",
    )
    roots = {
        Fraction(int(r.p), int(r.q)): mult for r, mult in poly.ground_roots().items()
    }
    splits = sum(roots.values()) == len(coeffs) - 1
    logger.debug("rational roots of %s: %s (splits=%s)", p, roots, splits)
    return roots, splits
