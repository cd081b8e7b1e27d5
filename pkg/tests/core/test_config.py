from typing import Optional

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import Field, ValidationError

from src.config import DEFAULT_SEED, SessionConfig, load_config
from src.core.config import CONFIG_FILES_ENV, BaseSettings, refer_to_field, split_csv


class TestBaseSettings:
    class SampleSettings(BaseSettings):
        main_field: Optional[str] = Field(default="default_value")
        linked_field: Optional[str] = refer_to_field(refer_to="main_field")
        another_field: Optional[str] = Field(default="default_another")

    def test_refer_to_field_with_value(self):
        """测试refer_to_field在有值时不引用其他字段"""
        settings = self.SampleSettings(main_field="custom", linked_field="explicit")
        assert settings.linked_field == "explicit"  # nosec

    def test_refer_to_field_without_value(self):
        """测试refer_to_field在无值时引用其他字段"""
        settings = self.SampleSettings(main_field="source_value")
        assert settings.linked_field == "source_value"  # nosec

    def test_refer_to_field_with_none(self):
        settings = self.SampleSettings(main_field=None)
        assert settings.linked_field is None  # nosec

    def test_invalid_reference(self):
        """测试引用不存在的字段"""

        class InvalidSettings(BaseSettings):
            bad_field: str = refer_to_field(refer_to="nonexistent_field")

        with pytest.raises(ValidationError):
            InvalidSettings()

    def test_field_priority(self, monkeypatch):
        """测试字段优先级：显式值 > 环境变量 > 默认值"""
        monkeypatch.setenv("MAIN_FIELD", "env_value")
        assert self.SampleSettings(main_field="explicit").main_field == "explicit"  # nosec
        assert self.SampleSettings().main_field == "env_value"  # nosec
        monkeypatch.delenv("MAIN_FIELD")
        assert self.SampleSettings().main_field == "default_value"  # nosec

    def test_multiple_config_files(self, monkeypatch, tmp_path):
        """测试加载多个配置文件，后面的覆盖前面的"""
        config1 = tmp_path / "config1.env"
        config1.write_text('MAIN_FIELD="file1"\nANOTHER_FIELD="file1_only"')
        config2 = tmp_path / "config2.env"
        config2.write_text('MAIN_FIELD="file2"')
        monkeypatch.setenv(CONFIG_FILES_ENV, f"{config1},{config2}")

        settings = self.SampleSettings()
        assert settings.main_field == "file2"  # nosec
        assert settings.another_field == "file1_only"  # nosec

    def test_env_overrides_config_files(self, monkeypatch, tmp_path):
        config = tmp_path / "config.env"
        config.write_text('MAIN_FIELD="file_value"')
        monkeypatch.setenv(CONFIG_FILES_ENV, str(config))
        monkeypatch.setenv("MAIN_FIELD", "env_value")
        assert self.SampleSettings().main_field == "env_value"  # nosec

    def test_secrets_directory_is_not_read(self, tmp_path):
        (tmp_path / "main_field").write_text("secret_value")
        assert self.SampleSettings(_secrets_dir=tmp_path).main_field == "default_value"  # nosec

    def test_nonexistent_config_file(self, monkeypatch, tmp_path):
        """测试当配置文件不存在时，不应引发错误"""
        monkeypatch.setenv(CONFIG_FILES_ENV, str(tmp_path / "nonexistent.env"))
        assert self.SampleSettings().main_field == "default_value"  # nosec


@pytest.mark.parametrize(
    "value, expected",
    [
        (None, []),
        ("", []),
        ("alpha, beta,,gamma ", ["alpha", "beta", "gamma"]),
        (["a", " b", ""], ["a", "b"]),
    ],
)
def test_split_csv(value, expected):
    assert split_csv(value) == expected  # nosec


class TestSessionConfig:
    @pytest.fixture(autouse=True)
    def clean_env(self, monkeypatch, tmp_path):
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv(CONFIG_FILES_ENV, raising=False)
        for name in ("SEED", "SAMPLE_SEED", "GEOMETRIC", "PARAMETERS", "WORKERS"):
            monkeypatch.delenv(f"CREMONA_{name}", raising=False)

    def test_defaults(self):
        config = load_config()
        assert config.SEED == DEFAULT_SEED  # nosec
        assert config.SAMPLE_SEED == DEFAULT_SEED  # nosec
        assert config.FORMAT == "text"  # nosec
        assert config.PARAMETERS == []  # nosec

    def test_sample_seed_follows_seed(self):
        """测试采样种子默认跟随报告种子"""
        assert load_config(SEED=3).SAMPLE_SEED == 3  # nosec
        config = load_config(SEED=3, SAMPLE_SEED=4)
        assert (config.SEED, config.SAMPLE_SEED) == (3, 4)  # nosec

    def test_none_overrides_are_dropped(self, monkeypatch):
        monkeypatch.setenv("CREMONA_SEED", "11")
        assert load_config(SEED=None).SEED == 11  # nosec

    def test_env_prefix(self, monkeypatch):
        """测试 CREMONA_ 前缀的环境变量"""
        monkeypatch.setenv("CREMONA_WORKERS", "4")
        monkeypatch.setenv("CREMONA_PARAMETERS", "p, q")
        config = SessionConfig()
        assert config.WORKERS == 4  # nosec
        assert config.PARAMETERS == ["p", "q"]  # nosec

    def test_config_file(self, monkeypatch, tmp_path):
        session = tmp_path / "session.env"
        session.write_text("CREMONA_SEED=99\nCREMONA_GEOMETRIC=XYZ")
        monkeypatch.setenv(CONFIG_FILES_ENV, str(session))
        config = SessionConfig()
        assert config.SEED == 99  # nosec
        assert config.GEOMETRIC == "XYZ"  # nosec

    @pytest.mark.parametrize("geometric", ["xy", "uvw", "XYz"])
    def test_geometric_spelling(self, geometric):
        with pytest.raises(ValidationError):
            load_config(GEOMETRIC=geometric)

    def test_workers_positive(self):
        with pytest.raises(ValidationError):
            load_config(WORKERS=0)

    def test_format(self):
        with pytest.raises(ValidationError):
            load_config(FORMAT="yaml")


@given(st.text(), st.one_of(st.none(), st.text()))
def test_property_based_refer_to_field(main_value, linked_value):
    """使用 Hypothesis 进行属性测试"""

    class PropSettings(BaseSettings):
        main_field: Optional[str]
        linked_field: Optional[str] = refer_to_field(refer_to="main_field")

    settings = PropSettings(main_field=main_value, linked_field=linked_value)

    if linked_value is not None:
        assert settings.linked_field == linked_value  # nosec
    else:
        assert settings.linked_field == main_value  # nosec
