import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.birmap.builtins import xi_word
from src.core.errors import DegenerateInput
from src.foliation.foliation import degree_sequence
from src.paperlab.lemmas import SIGMA_MONOMIALS
from src.paperlab.sampling import (
    automorphism,
    bindings,
    foliation_sample,
    invertible_matrix,
    rational,
    stream,
    xi_entries,
    xi_member,
)


class TestStreams:
    def test_same_seed_and_id_repeat(self):
        """测试相同 (seed, check id) 产生相同的随机序列"""
        first = [stream(7, "degseq.rho").random() for _ in range(5)]
        again = [stream(7, "degseq.rho").random() for _ in range(5)]
        assert first == again  # nosec

    def test_streams_are_independent(self):
        assert stream(7, "degseq.rho").random() != stream(7, "degseq.tau").random()  # nosec
        assert stream(7, "degseq.rho").random() != stream(8, "degseq.rho").random()  # nosec

    @given(st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_rational_bounds(self, seed):
        rng = stream(seed, "rational")
        value = rational(rng, bound=4, nonzero=True)
        assert value != 0  # nosec
        assert abs(value) <= 4  # nosec

    def test_bindings(self):
        values = bindings(stream(1, "bindings"), ["alpha", "beta"])
        assert set(values) == {"alpha", "beta"}  # nosec
        assert all(values.values())  # nosec


class TestAutomorphisms:
    @given(st.integers(0, 10**6))
    @settings(max_examples=20, deadline=None)
    def test_invertible(self, seed):
        rows = invertible_matrix(stream(seed, "matrix"))
        assert sympy.Matrix(rows).det() != 0  # nosec

    def test_automorphism_is_linear(self):
        ell = automorphism(stream(3, "ell"), name="l1")
        assert ell.is_linear()  # nosec
        assert ell.name == "l1"  # nosec


class TestFoliationSample:
    @pytest.mark.parametrize("name", ["omega3", "omega6", "omega7", "omega9"])
    def test_degree_two_members(self, name):
        """测试随机抽取的族成员是 2 次叶状结构"""
        foliation, values = foliation_sample(stream(11, name), name)
        assert foliation.degree == 2  # nosec
        assert foliation.form.is_numeric()  # nosec
        assert all(values.values())  # nosec

    def test_deterministic(self):
        first, values = foliation_sample(stream(5, "omega3"), "omega3")
        again, values_again = foliation_sample(stream(5, "omega3"), "omega3")
        assert values == values_again  # nosec
        assert first.form == again.form  # nosec

    def test_fixed_values_kept(self):
        _, values = foliation_sample(stream(2, "fixed"), "omega7", {"alpha": 1})
        assert values["alpha"] == 1  # nosec

    def test_impossible_degree(self):
        with pytest.raises(DegenerateInput):
            foliation_sample(stream(1, "eta"), "eta_prime", degree=5, attempts=3)


class TestXiWord:
    def test_entries_give_an_automorphism(self):
        entries = xi_entries(stream(4, "xi"))
        letters = xi_word(entries)
        assert len(letters) == 3  # nosec
        assert letters.letters[1].is_linear()  # nosec
        assert entries["f"] * (entries["a"] * entries["e"] - entries["b"] * entries["c"])  # nosec

    def test_member_keeps_degree(self):
        """测试由 ℓ₂ 构造的 𝒮₂ 成员在 σℓ₂σ 下两端次数均为 2"""
        rng = stream(9, "xi")
        letters = xi_word(xi_entries(rng))
        member, (last, first) = xi_member(rng, letters.letters[1])
        assert member.degree == 2  # nosec
        assert last in SIGMA_MONOMIALS and first in SIGMA_MONOMIALS  # nosec
        sequence = degree_sequence(letters, member)
        assert sequence[0] == sequence[-1] == 2  # nosec
