from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import (
    DegenerateInput,
    ParametricInputError,
    PreconditionError,
    ZeroPolynomialError,
)
from src.exactalg.gcd import (
    gcd_homogeneous,
    gcd_many,
    poly_gcd,
    rational_roots,
    resultant,
)
from src.exactalg.mpoly import MPoly, variables

x, y, z = variables("x y z")
alpha = MPoly.var("alpha")

small = st.integers(-4, 4)


class TestGcd:
    def test_common_linear_factor(self):
        g = poly_gcd((x - y) * (x + 2), (x - y) * (y + 1))
        assert g == x - y  # nosec

    def test_coprime(self):
        assert poly_gcd(x**2 + 1, y + x) == 1  # nosec

    def test_with_zero(self):
        """测试 gcd(0, q) 为 q 的首一化"""
        assert poly_gcd(MPoly.zero(), 2 * x + 4) == x + 2  # nosec

    @given(small, small, small)
    @settings(max_examples=25, deadline=None)
    def test_recovers_planted_factor(self, a, b, c):
        """测试在两个互素因子上乘以公共因子后能恢复该因子"""
        common = x + a * y + b
        g = poly_gcd(common * (x * y + c), common * (y**2 + 1))
        assert g == common.monic()  # nosec

    def test_parametric_input_rejected(self):
        with pytest.raises(ParametricInputError):
            poly_gcd(alpha * x, x)

    def test_homogeneous(self):
        g = gcd_homogeneous(x * y * (x + z), x * (x + z) * (y + z))
        assert g == x * (x + z)  # nosec

    def test_homogeneous_needs_homogeneous_input(self):
        with pytest.raises(PreconditionError):
            gcd_homogeneous(x + 1, x)

    def test_homogeneous_zero(self):
        with pytest.raises(ZeroPolynomialError):
            gcd_homogeneous(MPoly.zero(), x)

    def test_many(self):
        assert gcd_many([x * y, x * z, x**2]) == x  # nosec
        assert gcd_many([MPoly.zero(), 3 * y * z]) == y * z  # nosec

    def test_many_all_zero(self):
        with pytest.raises(ZeroPolynomialError):
            gcd_many([MPoly.zero(), MPoly.zero()])


class TestResultant:
    def test_cusp_against_tangent(self):
        """测试 res_y(x²−y³, xy²) 等于 ±x⁷"""
        r = resultant(x**2 - y**3, x * y**2, "y")
        assert r.ratio_to(x**7) in (1, -1)  # nosec

    def test_common_root_gives_zero(self):
        assert resultant((y - 1) * (y + x), (y - 1) * y, "y").is_zero()  # nosec

    def test_linear(self):
        # res_y(y - a, y - b) = ±(a - b)
        r = resultant(y - x, y - 2, "y")
        assert r.ratio_to(x - 2) in (1, -1)  # nosec

    def test_neither_involves_variable(self):
        with pytest.raises(DegenerateInput):
            resultant(x + 1, x, "y")

    def test_parametric_input_rejected(self):
        with pytest.raises(ParametricInputError):
            resultant(alpha * y, y - 1, "y")


class TestRationalRoots:
    def test_splitting_polynomial(self):
        roots, splits = rational_roots(2 * x**3 - 3 * x**2 + x, "x")
        assert roots == {Fraction(0): 1, Fraction(1, 2): 1, Fraction(1): 1}  # nosec
        assert splits  # nosec

    def test_multiplicity_and_irrational_part(self):
        """测试重根计重数，且存在无理根时 splits 为 False"""
        roots, splits = rational_roots((x - 1) ** 2 * (x**2 + 1), "x")
        assert roots == {Fraction(1): 2}  # nosec
        assert not splits  # nosec

    def test_no_rational_roots(self):
        roots, splits = rational_roots(x**2 - 2, "x")
        assert roots == {}  # nosec
        assert not splits  # nosec

    def test_nonzero_constant(self):
        assert rational_roots(MPoly.const(5), "x") == ({}, True)  # nosec

    def test_preconditions(self):
        with pytest.raises(DegenerateInput):
            rational_roots(MPoly.zero(), "x")
        with pytest.raises(PreconditionError):
            rational_roots(x + y, "x")
        with pytest.raises(ParametricInputError):
            rational_roots(alpha * x, "x")
