import pytest

from src.expr.parser import parse_polynomial
from src.foliation.foliation import Foliation, pullback_foliation
from src.paperlab.families import family, general_quadratic_form
from src.paperlab.lemmas import (
    FAMILY_LEMMAS,
    INFEASIBLE,
    MONOMIAL_LEMMAS,
    computed_obstructions,
    monomial_lemma,
    span_matches,
    sufficiency_holds,
)
from src.paperlab.obstructions import monomial_div_obstructions

LEMMA_IDS = [lemma.id for lemma in MONOMIAL_LEMMAS]


class TestMonomialLemmas:
    @pytest.mark.parametrize("lemma_id", LEMMA_IDS)
    def test_conditions_are_linear(self, lemma_id):
        assert monomial_lemma(lemma_id).condition_set().is_linear()  # nosec

    @pytest.mark.parametrize("lemma_id", LEMMA_IDS)
    def test_sufficiency(self, lemma_id):
        """测试列出的条件使单项式整除拉回形式"""
        assert sufficiency_holds(monomial_lemma(lemma_id))  # nosec

    @pytest.mark.parametrize("lemma_id", LEMMA_IDS)
    def test_span(self, lemma_id):
        """测试计算出的障碍与列出的条件张成相同的线性空间"""
        assert span_matches(monomial_lemma(lemma_id))  # nosec

    def test_computed_obstructions_are_cached(self):
        assert computed_obstructions("sigma.x2yz") is computed_obstructions("sigma.x2yz")  # nosec

    def test_solution_pivots_are_listed_parameters(self):
        lemma = monomial_lemma("rho.z4")
        solution = lemma.solution()
        assert len(solution) == len(lemma.conditions)  # nosec
        assert {"c0", "b0", "c3", "b4", "b2"} <= set(solution)  # nosec


class TestInfeasibleMonomials:
    @pytest.mark.parametrize(
        "map_name, monomial",
        [(m, mono) for m, monos in INFEASIBLE.items() for mono in monos],
    )
    def test_obstructions_are_not_empty(self, map_name, monomial):
        lemma = next(lemma for lemma in MONOMIAL_LEMMAS if lemma.map_name == map_name)
        obstructions = monomial_div_obstructions(
            lemma.phi, general_quadratic_form(), parse_polynomial(monomial)
        )
        assert not obstructions.is_empty()  # nosec
        assert obstructions.is_linear()  # nosec


class TestFamilyLemmas:
    @pytest.mark.parametrize("lemma", FAMILY_LEMMAS, ids=lambda lemma: lemma.id)
    def test_family_keeps_degree_two(self, lemma):
        """测试高次映射把对应族的叶状结构拉回后仍为 2 次"""
        pulled = pullback_foliation(lemma.phi, Foliation(family(lemma.family).form, 2))
        assert pulled.degree == lemma.degree  # nosec
