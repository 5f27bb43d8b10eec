import functools
import logging
import os
from typing import Optional

from pydantic import BaseModel, Field, HttpUrl, ValidationError

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    log_level: str = Field(default="WARNING", alias="COMBI_LOG_LEVEL")
    environment: str = Field(default="development", alias="COMBI_ENVIRONMENT")
    grafana_loki_url: Optional[HttpUrl] = Field(default=None, alias="GRAFANA_LOKI_URL")
    workers: int = Field(default=1, ge=1, alias="COMBI_WORKERS")
    root_tolerance: float = Field(default=1e-7, gt=0, alias="COMBI_ROOT_TOLERANCE")
    match_tolerance: float = Field(default=1e-8, gt=0, alias="COMBI_MATCH_TOLERANCE")
    hamiltonian_cap: int = Field(default=16, ge=1, alias="COMBI_HAMILTONIAN_CAP")
    coloring_cap: int = Field(default=20, ge=1, alias="COMBI_COLORING_CAP")
    deletion_cap: int = Field(default=18, ge=0, alias="COMBI_DELETION_CAP")
    hall_cap: int = Field(default=20, ge=1, alias="COMBI_HALL_CAP")
    tour_cap: int = Field(default=10, ge=1, alias="COMBI_TOUR_CAP")


ENV_KEYS = (
    "COMBI_LOG_LEVEL",
    "COMBI_ENVIRONMENT",
    "GRAFANA_LOKI_URL",
    "COMBI_WORKERS",
    "COMBI_ROOT_TOLERANCE",
    "COMBI_MATCH_TOLERANCE",
    "COMBI_HAMILTONIAN_CAP",
    "COMBI_COLORING_CAP",
    "COMBI_DELETION_CAP",
    "COMBI_HALL_CAP",
    "COMBI_TOUR_CAP",
)


@functools.lru_cache()
def load_config() -> Settings:
    # Only pass variables that are set, so the model defaults apply to the rest
    config_data = {}
    for key in ENV_KEYS:
        value = os.getenv(key)
        if value is not None:
            config_data[key] = value
    try:
        settings = Settings(**config_data)  # type: ignore
        logger.debug("Configuration validated successfully with Pydantic.")
        return settings
    except ValidationError as e:
        logger.error("Configuration validation failed with Pydantic errors: %s", e.json(indent=2))
        raise
