from typing import Optional

from pydantic import BaseModel, Field, field_validator

from .anneal_models import AnnealConfig

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class LoggingConfig(BaseModel):
    level: str = "WARNING"

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value}")
        return value


class SearchConfig(BaseModel):
    max_classes: Optional[int] = Field(default=None, gt=0)  # None: unlimited
    max_depth: Optional[int] = Field(default=None, ge=0)
    threads: int = Field(default=1, ge=1)


class CertificateConfig(BaseModel):
    max_classes: Optional[int] = Field(default=100_000, gt=0)
    max_depth: Optional[int] = Field(default=None, ge=0)


class AnnealSection(AnnealConfig):
    max_restarts: int = Field(default=1, ge=1)


class GeneratorConfig(BaseModel):
    default_seed: int = Field(default=0, ge=0)


class FlipToolConfig(BaseModel):
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    certificate: CertificateConfig = Field(default_factory=CertificateConfig)
    anneal: AnnealSection = Field(default_factory=AnnealSection)
    generators: GeneratorConfig = Field(default_factory=GeneratorConfig)
