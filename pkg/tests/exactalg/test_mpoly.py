from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import (
    DivisionByZeroPolynomial,
    PreconditionError,
    SymbolTableMismatch,
    UnknownSymbol,
    ZeroPolynomialError,
)
from src.exactalg.mpoly import MPoly, monomial_of, variables
from src.exactalg.symbols import STANDARD
from src.expr.parser import parse_polynomial

x, y, z = variables("x y z")
alpha, beta = MPoly.var("alpha"), MPoly.var("beta")

exponents = st.tuples(*(st.integers(0, 3) for _ in range(3)))
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, max_terms: int = 4):
    terms = draw(st.dictionaries(exponents, coefficients, max_size=max_terms))
    return sum(
        (c * x**i * y**j * z**k for (i, j, k), c in terms.items()), MPoly.zero()
    )


class TestArithmetic:
    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=40, deadline=None)
    def test_ring_axioms(self, p, q, r):
        """测试加法与乘法满足交换律、结合律和分配律"""
        assert p + q == q + p  # nosec
        assert p * q == q * p  # nosec
        assert (p * q) * r == p * (q * r)  # nosec
        assert p * (q + r) == p * q + p * r  # nosec

    @given(polynomials())
    @settings(max_examples=40, deadline=None)
    def test_additive_inverse(self, p):
        assert (p - p).is_zero()  # nosec
        assert p + 0 == p  # nosec
        assert p * 1 == p  # nosec

    def test_cancellation_drops_terms(self):
        """测试系数相消后不保留零系数的项"""
        p = (x + y) * (x - y) + y * y
        assert p == x * x  # nosec
        assert len(p) == 1  # nosec

    def test_power(self):
        assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1  # nosec
        assert (x + y) ** 0 == 1  # nosec

    def test_negative_power_rejected(self):
        with pytest.raises(PreconditionError):
            x ** -1

    def test_scalar_division(self):
        assert (2 * x + 4) / 2 == x + 2  # nosec
        with pytest.raises(ZeroDivisionError):
            x / 0

    def test_tables_must_agree(self):
        """测试不同符号表上的多项式不能直接运算"""
        wider = STANDARD.with_parameters(["t"])
        with pytest.raises(SymbolTableMismatch):
            x + MPoly.var("x", wider)


class TestInspection:
    def test_term_order_is_graded_lexicographic(self):
        p = parse_polynomial("1/2 + y^3 + x*y - 2*x^2 + x*z^2")
        monos = [m[:3] for m, _ in p.terms()]
        assert monos == [(1, 0, 2), (0, 3, 0), (2, 0, 0), (1, 1, 0), (0, 0, 0)]  # nosec

    def test_str(self):
        assert str(parse_polynomial("x^2 - 2*x*y + 1/2")) == "x^2 - 2*x*y + 1/2"  # nosec
        assert str(MPoly.zero()) == "0"  # nosec
        assert str(-alpha * x) == "-x*alpha"  # nosec

    def test_degrees(self):
        p = alpha * x**2 * y + beta * z
        assert p.total_degree() == 4  # nosec
        assert p.geometric_degree() == 3  # nosec
        assert p.degree_in("y") == 1  # nosec
        assert MPoly.zero().total_degree() == -1  # nosec

    def test_homogeneous_degree_ignores_parameters(self):
        """测试齐次次数只计算几何变量，参数权重为零"""
        assert (alpha * x**2 + beta**3 * y * z).homogeneous_degree() == 2  # nosec
        assert (x**2 + y).homogeneous_degree() is None  # nosec
        assert MPoly.zero().homogeneous_degree() == 0  # nosec

    def test_numeric_and_geometric_free(self):
        assert (x + 2).is_numeric()  # nosec
        assert not (alpha * x).is_numeric()  # nosec
        assert (alpha * beta + 1).is_geometric_free()  # nosec
        assert not (alpha * y).is_geometric_free()  # nosec

    def test_variables(self):
        assert (alpha * x + y).variables() == {"alpha", "x", "y"}  # nosec

    def test_constant_value(self):
        assert MPoly.const(Fraction(3, 4)).constant_value() == Fraction(3, 4)  # nosec
        assert MPoly.zero().constant_value() == 0  # nosec
        with pytest.raises(PreconditionError):
            x.constant_value()

    def test_leading_term_of_zero(self):
        with pytest.raises(ZeroPolynomialError):
            MPoly.zero().leading_term()

    def test_monic(self):
        assert (3 * x * y - 6 * z**2).monic() == x * y - 2 * z**2  # nosec
        assert MPoly.zero().monic().is_zero()  # nosec

    def test_bad_exponent_vector(self):
        with pytest.raises(PreconditionError):
            MPoly(STANDARD, {(1, 2): 1})

    def test_unknown_variable(self):
        with pytest.raises(UnknownSymbol):
            MPoly.var("w")


class TestCalculus:
    def test_diff(self):
        p = alpha * x**3 * y + y**2
        assert p.diff("x") == 3 * alpha * x**2 * y  # nosec
        assert p.diff("y") == alpha * x**3 + 2 * y  # nosec
        assert p.diff("z").is_zero()  # nosec

    @given(polynomials())
    @settings(max_examples=30, deadline=None)
    def test_euler_relation_on_homogeneous_parts(self, p):
        """测试齐次多项式满足欧拉关系 x∂x + y∂y + z∂z = d·P"""
        d = 3
        part = sum(
            (MPoly.monomial(m, c) for m, c in p.terms() if sum(m[:3]) == d),
            MPoly.zero(),
        )
        euler = x * part.diff("x") + y * part.diff("y") + z * part.diff("z")
        assert euler == d * part  # nosec

    def test_subs_is_simultaneous(self):
        p = x**2 + 2 * y
        assert p.subs({"x": y, "y": x}) == y**2 + 2 * x  # nosec

    def test_subs_parameters(self):
        p = alpha * x + beta * y
        assert p.subs({"alpha": 2, "beta": alpha}) == 2 * x + alpha * y  # nosec

    def test_subs_unknown_binding(self):
        with pytest.raises(UnknownSymbol):
            x.subs({"w": 1})

    def test_embed_round_trip_by_name(self):
        wider = STANDARD.with_parameters(["t"])
        p = alpha * x + 1
        lifted = p.embed(wider)
        assert lifted.table == wider  # nosec
        assert lifted == MPoly.var("alpha", wider) * MPoly.var("x", wider) + 1  # nosec


class TestHomogeneity:
    def test_content_monomial(self):
        p = x**2 * y + x * y**2 * z
        assert p.content_monomial() == monomial_of(x=1, y=1)  # nosec
        assert p.divide_monomial(monomial_of(x=1, y=1)) == x + y * z  # nosec

    def test_content_monomial_ignores_parameters(self):
        assert (alpha * x * y + alpha * x).content_monomial() == monomial_of(x=1)  # nosec

    def test_divide_monomial_precondition(self):
        with pytest.raises(PreconditionError):
            (x + y).divide_monomial(monomial_of(x=1))

    def test_homogenize(self):
        assert (x**2 + y + 1).homogenize("z") == x**2 + y * z + z**2  # nosec
        with pytest.raises(PreconditionError):
            (x**3).homogenize("z", 2)


class TestDivision:
    def test_trial_divide_exact(self):
        assert (x**2 - y**2).trial_divide(x - y) == x + y  # nosec

    def test_trial_divide_fails(self):
        assert (x**2 + y**2).trial_divide(x - y) is None  # nosec

    def test_trial_divide_by_zero(self):
        with pytest.raises(DivisionByZeroPolynomial):
            x.trial_divide(MPoly.zero())

    @given(polynomials(), polynomials(max_terms=3))
    @settings(max_examples=30, deadline=None)
    def test_trial_divide_recovers_factor(self, p, q):
        """测试乘积能被任一非零因子整除并得到另一个因子"""
        if q.is_zero():
            return
        assert (p * q).trial_divide(q) == p  # nosec

    def test_divmod_geometric_with_parametric_numerator(self):
        """测试参数系数下的带余除法：商与余式满足 p = q·d + r"""
        p = alpha * x**2 + y
        q, r = p.divmod_geometric(x - y)
        assert q == alpha * x + alpha * y  # nosec
        assert r == alpha * y**2 + y  # nosec
        assert q * (x - y) + r == p  # nosec

    def test_divmod_geometric_parametric_lead_rejected(self):
        with pytest.raises(PreconditionError):
            x.divmod_geometric(alpha * x + y)

    def test_coefficients_in(self):
        groups = (alpha * x**2 + beta * x**2 + y).coefficients_in()
        assert groups == {  # nosec
            monomial_of(x=2): alpha + beta,
            monomial_of(y=1): MPoly.const(1),
        }

    def test_ratio_to(self):
        assert (3 * x - 6 * y).ratio_to(x - 2 * y) == 3  # nosec
        assert (x + y).ratio_to(x - y) is None  # nosec
        assert MPoly.zero().ratio_to(MPoly.zero()) == 0  # nosec
