import pytest

from src.birmap.builtins import builtin
from src.birmap.maps import MapWord, make_linear
from src.core.errors import DegenerateInput, ParametricInputError, PreconditionError
from src.dforms.forms import Proj1Form
from src.exactalg.mpoly import MPoly, variables
from src.expr.parser import parse_form, parse_polynomial, parse_rational
from src.foliation.foliation import (
    curve_invariant,
    degree_sequence,
    from_affine,
    from_form,
    generic_pullback_degree,
    proportional,
    pullback_foliation,
    pullback_word,
    ratio,
)
from src.foliation.integrals import (
    darboux_first_integral_check,
    rational_first_integral_check,
)

x, y, z = variables("x y z")
alpha = MPoly.var("alpha")

PENCIL = Proj1Form(-y, x, MPoly.zero())
OMEGA1 = "{x^2 - y^3, x*y^2}"
# moves (−1 : −1 : 1) to the origin
SHIFT = make_linear([[1, 0, 1], [0, 1, 1], [0, 0, 1]])


class TestDegree:
    def test_pencil_has_degree_zero(self):
        assert from_form(PENCIL).degree == 0  # nosec

    def test_affine_model(self):
        foliation = from_affine(parse_form(OMEGA1))
        assert foliation.degree == 2  # nosec
        assert not foliation.was_reduced  # nosec

    def test_numeric_common_factor_removed(self):
        """测试数值形式的公因子被除去，次数按约化后的形式计算"""
        foliation = from_form(PENCIL.scale(x + y))
        assert foliation.degree == 0  # nosec
        assert foliation.removed == x + y  # nosec
        assert foliation.complete  # nosec

    def test_parametric_flagged_incomplete(self):
        form = Proj1Form(-alpha * y, alpha * x, MPoly.zero()).scale(x + y)
        foliation = from_form(form)
        assert not foliation.complete  # nosec
        assert foliation.degree == 1  # nosec

    def test_parametric_strict(self):
        form = Proj1Form(-alpha * y, alpha * x, MPoly.zero()).scale(x + y)
        with pytest.raises(ParametricInputError):
            from_form(form, strict=True)

    def test_generic_pullback_degree(self):
        assert generic_pullback_degree(2, 2) == 6  # nosec
        assert generic_pullback_degree(0, 1) == 0  # nosec
        assert generic_pullback_degree(2, 3) == 10  # nosec
        with pytest.raises(PreconditionError):
            generic_pullback_degree(2, 0)


class TestPullback:
    def test_pencil_through_fixed_point_of_sigma(self):
        """测试 σ 保持过 (0:0:1) 的直线束，拉回后次数仍为 0"""
        pulled = pullback_foliation(builtin("sigma"), from_form(PENCIL))
        assert pulled.degree == 0  # nosec
        assert pulled.removed == z**2  # nosec
        assert proportional(pulled.form, PENCIL)  # nosec

    def test_pencil_in_general_position_becomes_conics(self):
        letters = MapWord((SHIFT, builtin("sigma")))
        assert degree_sequence(letters, from_form(PENCIL)) == [0, 2]  # nosec

    def test_pullback_word_applies_leftmost_first(self):
        """测试词的拉回先作用最左边的字母"""
        letters = MapWord((SHIFT, builtin("sigma")))
        steps = pullback_word(letters, from_form(PENCIL))
        assert len(steps) == 2  # nosec
        first = pullback_foliation(SHIFT, from_form(PENCIL))
        assert ratio(steps[0], first) is not None  # nosec

    def test_psi1_reduces_cusp_model(self):
        pulled = pullback_foliation(builtin("psi1"), from_affine(parse_form(OMEGA1)))
        expected = parse_form("[y*(2*x*z - y^2), x*(y^2 - x*z), -x^2*y]")
        assert pulled.degree == 2  # nosec
        assert proportional(pulled.form, expected)  # nosec

    def test_cubic_sends_cusp_model_to_pencil(self):
        pulled = pullback_foliation(builtin("cubic"), from_affine(parse_form(OMEGA1)))
        assert pulled.degree == 0  # nosec
        assert proportional(pulled.form, parse_form("[z, 0, -x]"))  # nosec

    def test_involution_twice_is_identity_on_foliations(self):
        foliation = from_affine(parse_form("{y*(1 + y), -x*(1 + x)}"))
        sigma = builtin("sigma")
        back = pullback_foliation(sigma, pullback_foliation(sigma, foliation))
        assert proportional(back.form, foliation.form)  # nosec


class TestInvariantCurves:
    def test_coordinate_lines_of_pencil(self):
        foliation = from_form(PENCIL)
        assert curve_invariant(foliation, x)  # nosec
        assert curve_invariant(foliation, x - 2 * y)  # nosec
        assert not curve_invariant(foliation, z)  # nosec

    def test_constant_curve(self):
        assert curve_invariant(from_form(PENCIL), MPoly.const(3))  # nosec

    def test_bad_curves(self):
        with pytest.raises(PreconditionError):
            curve_invariant(from_form(PENCIL), MPoly.zero())
        with pytest.raises(PreconditionError):
            curve_invariant(from_form(PENCIL), x + 1)

    def test_conic_of_a_conic_pencil(self):
        """测试二次曲线束 f/g 中每条曲线都是不变曲线"""
        f, g = parse_polynomial("x^2 - y*z"), parse_polynomial("y^2 - x*z")
        fx, fy, fz = (f.diff(n) for n in "xyz")
        gx, gy, gz = (g.diff(n) for n in "xyz")
        form = Proj1Form(f * gx - g * fx, f * gy - g * fy, f * gz - g * fz)
        foliation = from_form(form)
        assert curve_invariant(foliation, f)  # nosec
        assert curve_invariant(foliation, f + 2 * g)  # nosec


class TestFirstIntegrals:
    def test_pencil(self):
        foliation = from_form(PENCIL)
        assert rational_first_integral_check(foliation, parse_rational("y / x"))  # nosec
        assert not rational_first_integral_check(foliation, x)  # nosec

    def test_constant_is_rejected(self):
        with pytest.raises(DegenerateInput):
            rational_first_integral_check(from_form(PENCIL), 5)

    def test_cusp_model(self):
        """测试 Ω₁ 的有理首次积分 (3x² − y³)/(3x³)"""
        foliation = from_affine(parse_form(OMEGA1))
        h = parse_rational("(3*x^2 - y^3) / (3*x^3)")
        assert rational_first_integral_check(foliation, h)  # nosec

    def test_darboux(self):
        foliation = from_affine(parse_form("{x^2 - x*y - y^3, x*(x + y^2)}"))
        r = parse_rational("(2*x^2 + x + 2*x*y + y^2) / x^2")
        s = parse_rational("-y / x")
        assert darboux_first_integral_check(foliation, r, s)  # nosec
        assert not darboux_first_integral_check(foliation, r, -s)  # nosec

    def test_darboux_constant(self):
        assert not darboux_first_integral_check(from_form(PENCIL), 1, 0)  # nosec
        with pytest.raises(DegenerateInput):
            darboux_first_integral_check(from_form(PENCIL), 0, x)
