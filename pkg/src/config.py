"""
Session configuration for the command-line driver and the replication suite.

Every value can be given on the command line, through `CREMONA_*` environment
variables, a `.env` file or the files listed in `CREMONA_CONFIG_FILES`.
"""

from typing import Literal

from dotenv import load_dotenv
from pydantic import Field, field_validator, model_validator
from pydantic_settings import SettingsConfigDict

from src import __version__
from src.core.config import BaseSettings, refer_to_field, split_csv

load_dotenv()

DEFAULT_SEED = 20140101


class SessionConfig(BaseSettings):
    """Symbol declarations, seed, output format and check filter of one session."""

    model_config = SettingsConfigDict(env_prefix="CREMONA_")

    PROJECT_NAME: str = "cremona-foliations"
    VERSION: str = __version__
    DEBUG: bool = Field(default=False, description="Log every reduction step")
    SEED: int = Field(
        default=DEFAULT_SEED,
        description="Seed recorded in reports; drives every sampled check",
    )
    SAMPLE_SEED: int | None = refer_to_field(
        refer_to="SEED", description="Seed of the sampling streams, defaults to SEED"
    )
    FORMAT: Literal["text", "structured"] = "text"
    CHECK_FILTER: str = Field(
        default="", description="Check id prefix or glob pattern, empty runs all"
    )
    GEOMETRIC: str = Field(
        default="xyz", description="Spelling of the geometric variables: xyz or XYZ"
    )
    PARAMETERS: list[str] | str = Field(
        default_factory=list,
        description="Extra parameter symbols, as a list or a comma separated string",
    )
    WORKERS: int = Field(default=1, ge=1, description="Checks executed concurrently")
    REPORT_TIMINGS: bool = Field(
        default=True,
        description="Record elapsed_ms; disable for byte-identical reports",
    )

    @field_validator("GEOMETRIC")
    @classmethod
    def check_geometric(cls, value: str) -> str:
        if value not in ("xyz", "XYZ"):
            raise ValueError("geometric variables must be exactly xyz or XYZ")
        return value

    @model_validator(mode="after")
    def set_dynamic_fields(self) -> "SessionConfig":
        if isinstance(self.PARAMETERS, str):
            self.PARAMETERS = split_csv(self.PARAMETERS)
        return self


def load_config(**overrides) -> SessionConfig:
    """Build a config, dropping overrides left as None so lower sources apply."""
    return SessionConfig(**{k: v for k, v in overrides.items() if v is not None})
