"""
Settings base for the library and the command-line driver.

Values are read from several sources with a fixed priority: explicit values,
environment variables, the files listed in `CREMONA_CONFIG_FILES` and finally
the default `.env` file. Fields created with `refer_to_field` fall back to
another field when left empty, which is how the sampling seed follows the
report seed unless it is set on its own.
"""

import os
from typing import Any, TypeVar

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import (
    DotEnvSettingsSource,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

T = TypeVar("T", bound="BaseSettings")

CONFIG_FILES_ENV = "CREMONA_CONFIG_FILES"


def split_csv(value: str | list[str] | None) -> list[str]:
    """Split a comma separated string into stripped, non-empty items."""
    if value is None:
        return []
    if isinstance(value, str):
        value = value.split(",")
    return [item.strip() for item in value if item and item.strip()]


def refer_to_field(*, refer_to: str, default: Any = None, **kwargs):
    """
    Create a field that takes another field's value when left empty.

    Works together with the `_fill_linked_fields` validator of `BaseSettings`.

    Args:
        refer_to: The name of the field to copy from.
        default: Default value if no link is available.
        **kwargs: Additional field arguments.
    """
    metadata = kwargs.pop("json_schema_extra", {})
    metadata["refer_to"] = refer_to
    return Field(default=default, json_schema_extra=metadata, **kwargs)


class BaseSettings(PydanticBaseSettings):
    """
    Settings loaded from the environment, `.env` and cascading config files.

    Subclasses set their own `env_prefix`; the list of extra config files is
    always read from `CREMONA_CONFIG_FILES`, later files overriding earlier ones.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[PydanticBaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """
        Priority order:
            1. Init values (highest priority)
            2. Environment variables
            3. Files named in CREMONA_CONFIG_FILES (last file wins)
            4. Default .env file (lowest priority)
        """
        config_files = split_csv(os.getenv(CONFIG_FILES_ENV))
        # reversed: earlier position in the tuple means higher priority
        custom_dotenv_sources = [
            DotEnvSettingsSource(settings_cls, env_file=path)
            for path in reversed(config_files)
        ]

        return (
            init_settings,
            env_settings,
            *custom_dotenv_sources,
            dotenv_settings,
        )

    @model_validator(mode="after")
    def _fill_linked_fields(self: T) -> T:
        """Copy the referred value into every empty `refer_to_field` field."""
        for field_name, model_field in self.__class__.model_fields.items():
            refer_key = (model_field.json_schema_extra or {}).get("refer_to")
            if refer_key:
                current_value = getattr(self, field_name)
                referred_value = getattr(self, refer_key, None)
                if current_value is None and referred_value is not None:
                    setattr(self, field_name, referred_value)
        return self
