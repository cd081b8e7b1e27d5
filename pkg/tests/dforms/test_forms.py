import pytest

from src.core.errors import DegenerateInput, PreconditionError
from src.dforms.forms import (
    Aff1Form,
    Proj1Form,
    affine_wedge,
    dehomogenize,
    exact_form,
    exterior_derivative,
    homogenize_affine,
    integrability,
    is_closed,
    wedge11,
)
from src.dforms.rational import RationalFn
from src.exactalg.mpoly import MPoly, monomial_of, variables
from src.expr.parser import parse_form

x, y, z = variables("x y z")
alpha = MPoly.var("alpha")

PENCIL = Proj1Form(-y, x, MPoly.zero())


class TestProj1Form:
    def test_euler_identity_enforced(self):
        """测试构造时检查欧拉恒等式"""
        with pytest.raises(PreconditionError):
            Proj1Form(x, y, z)

    def test_homogeneity_enforced(self):
        with pytest.raises(PreconditionError):
            Proj1Form(-y * z, x * z, z)

    def test_zero_form(self):
        zero = MPoly.zero()
        with pytest.raises(DegenerateInput):
            Proj1Form(zero, zero, zero)

    def test_check_can_be_skipped(self):
        form = Proj1Form(x, y, z, check=False)
        assert not form.euler_contract().is_zero()  # nosec

    def test_coefficient_degree(self):
        assert PENCIL.coefficient_degree() == 1  # nosec
        form = parse_form("[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]")
        assert form.coefficient_degree() == 3  # nosec

    def test_strip_monomial_content(self):
        form = PENCIL.scale(x * z)
        stripped, mono = form.strip_monomial_content()
        assert mono == monomial_of(x=1, z=1)  # nosec
        assert stripped == PENCIL  # nosec

    def test_ratio_to(self):
        assert PENCIL.scale(3).ratio_to(PENCIL) == 3  # nosec
        assert PENCIL.ratio_to(Proj1Form(y, -x, MPoly.zero())) == -1  # nosec
        assert not PENCIL.equals_up_to_scalar(Proj1Form(z, MPoly.zero(), -x))  # nosec

    def test_subs_parameters(self):
        form = Proj1Form(-alpha * y, alpha * x, MPoly.zero())
        assert form.subs({"alpha": 2}) == PENCIL.scale(2)  # nosec

    def test_subs_geometric_rejected(self):
        """测试对几何变量代入被拒绝（那是拉回而非特化）"""
        with pytest.raises(PreconditionError):
            PENCIL.subs({"x": 1})


class TestWedgeAndDerivative:
    def test_wedge_with_itself_vanishes(self):
        form = parse_form("[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]")
        assert wedge11(form, form).is_zero()  # nosec

    def test_wedge_is_antisymmetric(self):
        other = Proj1Form(z, MPoly.zero(), -x)
        forward, backward = wedge11(PENCIL, other), wedge11(other, PENCIL)
        assert all(  # nosec
            a == -b for a, b in zip(forward.components, backward.components)
        )

    def test_wedge_prints_zero(self):
        assert str(wedge11(PENCIL, PENCIL.scale(5))) == "ZERO"  # nosec

    def test_exterior_derivative(self):
        assert exterior_derivative(PENCIL).components == (0, 0, 2)  # nosec

    def test_pencil_is_integrable(self):
        assert integrability(PENCIL).is_zero()  # nosec

    def test_non_integrable_form(self):
        """测试 y dx + z dy + x dz 不满足可积条件"""
        form = Proj1Form(y, z, x, check=False)
        assert integrability(form) == -(x + y + z)  # nosec

    def test_exact_form(self):
        assert exact_form(x * y) == Proj1Form(y, x, MPoly.zero(), check=False)  # nosec


class TestAffineForms:
    def test_zero_rejected(self):
        with pytest.raises(DegenerateInput):
            Aff1Form(0, 0)
        assert Aff1Form.zero_allowed(0, 0).is_zero()  # nosec

    def test_closedness(self):
        assert is_closed(Aff1Form(y, x))  # nosec
        assert not is_closed(Aff1Form(y, -x))  # nosec
        # dx/x + dy/y
        assert is_closed(Aff1Form(RationalFn(1, x), RationalFn(1, y)))  # nosec

    def test_affine_wedge(self):
        assert affine_wedge(Aff1Form(1, 0), Aff1Form(0, 1)) == 1  # nosec
        assert affine_wedge(Aff1Form(y, -x), Aff1Form(y, -x)).is_zero()  # nosec

    def test_scale(self):
        scaled = Aff1Form(y, -x).scale(RationalFn(1, x * y))
        assert scaled == Aff1Form(RationalFn(1, x), RationalFn(-1, y))  # nosec

    def test_polynomial_coefficients(self):
        with pytest.raises(PreconditionError):
            Aff1Form(RationalFn(1, x), 1).polynomial_coefficients()


class TestCharts:
    def test_homogenize_linear(self):
        assert homogenize_affine(Aff1Form(y, -x)) == Proj1Form(y, -x, MPoly.zero())  # nosec

    def test_homogenize_strips_z(self):
        """测试齐次化后除去 z 的单项式公因子"""
        omega = parse_form("{x^2 - y^3, x*y^2}")
        form = homogenize_affine(omega)
        expected = Proj1Form(x**2 * z - y**3, x * y**2, -(x**3))
        assert form == expected  # nosec
        assert form.coefficient_degree() == 3  # nosec

    def test_dehomogenize_inverts_homogenize(self):
        omega = parse_form("{x^2 - y^3, x*y^2}")
        assert dehomogenize(homogenize_affine(omega)) == omega  # nosec

    def test_homogenize_parametric(self):
        omega = parse_form("{y*(alpha + gamma*y), -x*(alpha + kappa*x)}")
        form = homogenize_affine(omega)
        assert form.euler_contract().is_zero()  # nosec
        assert form.coefficient_degree() == 3  # nosec
