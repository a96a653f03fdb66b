"""Application settings and configuration management."""

from functools import lru_cache

import psutil
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
    )

    # Logging
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")

    # Enumeration
    jobs: int | None = Field(default=None, ge=1, alias="BRAIDSIG_JOBS")
    progress_every: int = Field(default=25, ge=1, alias="BRAIDSIG_PROGRESS_EVERY")
    max_verify_strands: int = Field(
        default=5, ge=2, alias="BRAIDSIG_MAX_VERIFY_STRANDS"
    )
    max_verify_length: int = Field(
        default=14, ge=1, alias="BRAIDSIG_MAX_VERIFY_LENGTH"
    )

    # MCP server
    server_host: str = Field(default="0.0.0.0", alias="SERVER_HOST")
    server_port: int = Field(default=8000, alias="SERVER_PORT")

    def effective_jobs(self, requested: int | None = None) -> int:
        """Worker count for enumeration: explicit request, setting, or core count."""
        if requested is not None:
            return max(1, requested)
        if self.jobs is not None:
            return self.jobs
        return psutil.cpu_count(logical=True) or 1


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
