"""Configuration management for Steiner Toolkit."""

import os
from typing import Optional

from .exceptions import ConfigurationError


def _resolve(value: Optional[int], name: str, env_name: str, default: Optional[int]) -> Optional[int]:
    """Pick the explicit value, then the environment variable, then the default."""
    source = name
    if value is None:
        raw = os.getenv(env_name)
        if raw is None or raw.strip() == "":
            return default
        source = env_name
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{env_name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{source} must be positive, got {value}")
    return value


class Config:
    """Central configuration for computation caps and scan defaults."""

    def __init__(
        self,
        max_terminals: Optional[int] = None,
        max_oracle_n: Optional[int] = None,
        table_max_n: Optional[int] = None,
        jobs: Optional[int] = None,
        chunk_size: Optional[int] = None,
        random_retries: Optional[int] = None,
    ):
        self.max_terminals = _resolve(max_terminals, "max_terminals", "STEINER_MAX_TERMINALS", 10)
        self.max_oracle_n = _resolve(max_oracle_n, "max_oracle_n", "STEINER_MAX_ORACLE_N", 16)
        self.table_max_n = _resolve(table_max_n, "table_max_n", "STEINER_TABLE_MAX_N", 12)
        self.jobs = _resolve(jobs, "jobs", "STEINER_JOBS", os.cpu_count() or 1)
        self.chunk_size = _resolve(chunk_size, "chunk_size", "STEINER_CHUNK_SIZE", 64)
        self.random_retries = _resolve(random_retries, "random_retries", "STEINER_RANDOM_RETRIES", 20)

        if self.table_max_n > self.max_oracle_n:
            raise ConfigurationError(
                "STEINER_TABLE_MAX_N cannot exceed STEINER_MAX_ORACLE_N "
                f"({self.table_max_n} > {self.max_oracle_n})"
            )

    def __repr__(self) -> str:
        return (
            f"Config(max_terminals={self.max_terminals}, max_oracle_n={self.max_oracle_n}, "
            f"table_max_n={self.table_max_n}, jobs={self.jobs}, chunk_size={self.chunk_size}, "
            f"random_retries={self.random_retries})"
        )


# Default global config instance - created lazily
default_config = None


def get_default_config() -> Config:
    """Get or create the default configuration."""
    global default_config
    if default_config is None:
        default_config = Config()
    return default_config
