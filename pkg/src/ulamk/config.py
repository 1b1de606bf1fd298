"""Configuration management."""

from functools import cache

from pydantic import ConfigDict, Field
from pydantic_settings import BaseSettings

from .consts import (
    BRUTE_FORCE_MAX_N,
    CLIQUE_WARN_N,
    DEFAULT_SEED,
    DENSE_GRAPH_MAX_N,
    POWER_MAX_ELEMENTS,
)


class Config(BaseSettings):
    """Run-wide settings, overridable through ULAMK_* environment variables."""

    model_config = ConfigDict(env_prefix="ULAMK_", case_sensitive=False, extra="ignore")
    seed: int = Field(
        default=DEFAULT_SEED,
        ge=0,
        lt=2**64,
        description="Default seed for generators and bench suites",
    )
    log_level: str = Field(
        default="WARNING",
        pattern=r"^(DEBUG|INFO|WARNING|ERROR)$",
        description="Logging level",
    )
    brute_force_max_n: int = Field(
        default=BRUTE_FORCE_MAX_N,
        gt=0,
        le=64,
        description="Largest n accepted by the brute-force oracle",
    )
    clique_warn_n: int = Field(
        default=CLIQUE_WARN_N,
        gt=0,
        description="The exact clique solver warns above this n (it still runs)",
    )
    power_max_elements: int = Field(
        default=POWER_MAX_ELEMENTS,
        gt=0,
        description="Cap on the element count of power constructions",
    )
    dense_graph_max_n: int = Field(
        default=DENSE_GRAPH_MAX_N,
        gt=0,
        description="Agreement graphs up to this n are stored as a dense bit matrix",
    )
    workers: int = Field(
        default=1, ge=1, le=256, description="Worker processes for bench sharding"
    )


@cache
def get_config() -> Config:
    """Get a cached Config instance.

    Raises:
        pydantic.ValidationError: If environment variables fail validation
            (e.g., invalid log_level, non-positive brute_force_max_n)
    """
    return Config()
