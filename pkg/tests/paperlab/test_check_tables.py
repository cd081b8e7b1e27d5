import pytest

from src.expr.parser import parse_polynomial, parse_rational
from src.foliation.foliation import from_form
from src.foliation.integrals import darboux_first_integral_check
from src.paperlab import families, lemmas
from src.paperlab.checks import invariance, one_singularity, transversal

POLYNOMIAL_LITERALS = [
    *transversal.RICCATI,
    transversal.OMEGA3_THETA1,
    *transversal.OMEGA8_FACTORS,
    *(curve for _, curve, _ in invariance.INVARIANT_CURVES),
    *(lemma.monomial for lemma in lemmas.MONOMIAL_LEMMAS),
    *(c for lemma in lemmas.MONOMIAL_LEMMAS for c in lemma.conditions),
    *(m for monomials in lemmas.INFEASIBLE.values() for m in monomials),
    *lemmas.SIGMA_MONOMIALS,
    *(t for texts in families.PRINTED.values() for t in texts),
]

RATIONAL_LITERALS = [t for pair in one_singularity.DARBOUX.values() for t in pair]


class TestLiterals:
    @pytest.mark.parametrize("text", POLYNOMIAL_LITERALS)
    def test_polynomial_literals_parse(self, text):
        assert not parse_polynomial(text).is_zero()  # nosec

    @pytest.mark.parametrize("text", RATIONAL_LITERALS)
    def test_rational_literals_parse(self, text):
        """测试检查表中的有理函数字面量都能被解析"""
        assert parse_rational(text).num  # nosec

    @pytest.mark.parametrize("name", families.names())
    def test_family_literals_parse(self, name):
        assert families.family(name).form.components  # nosec

    def test_named_forms_exist(self):
        names = set(families.names())
        tabulated = {n for forms in invariance.INVARIANT_FORMS.values() for n in forms}
        tabulated |= {n for forms in invariance.NOT_INVARIANT.values() for n in forms}
        tabulated |= {family for family, _, _ in invariance.INVARIANT_CURVES}
        tabulated |= {lemma.family for lemma in lemmas.MONOMIAL_LEMMAS}
        tabulated |= set(one_singularity.DARBOUX)
        assert tabulated <= names  # nosec


class TestDarboux:
    @pytest.mark.parametrize("name", sorted(one_singularity.DARBOUX))
    def test_first_integrals_hold(self, name):
        """测试 Ω₂ 与 Ω₃ 的 Darboux 首次积分 R·exp(S) 成立"""
        r_text, s_text = one_singularity.DARBOUX[name]
        foliation = from_form(families.family(name).form)
        assert darboux_first_integral_check(  # nosec
            foliation, parse_rational(r_text), parse_rational(s_text)
        )
