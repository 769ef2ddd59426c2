"""
Runtime settings for fcgenus, read from the environment (and a .env file).
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


class Settings(BaseModel):
    """Environment-backed defaults; CLI flags override them per run."""

    log_level: str = "WARNING"
    log_dir: str = "logs"
    log_to_file: bool = False
    oracle_max_vertices: int = Field(default=8, gt=0)
    oracle_max_edges: int = Field(default=14, gt=0)
    oracle_max_trees: int = Field(default=1_000_000, gt=0)
    counterexample_dir: str = "counterexamples"
    workers: int = Field(default=4, gt=0)

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            log_level=os.getenv("FCGENUS_LOG_LEVEL", "WARNING").upper(),
            log_dir=os.getenv("FCGENUS_LOG_DIR", "logs"),
            log_to_file=_env_bool("FCGENUS_LOG_TO_FILE", False),
            oracle_max_vertices=int(os.getenv("FCGENUS_ORACLE_MAX_VERTICES", "8")),
            oracle_max_edges=int(os.getenv("FCGENUS_ORACLE_MAX_EDGES", "14")),
            oracle_max_trees=int(os.getenv("FCGENUS_ORACLE_MAX_TREES", "1000000")),
            counterexample_dir=os.getenv("FCGENUS_COUNTEREXAMPLE_DIR", "counterexamples"),
            workers=int(os.getenv("FCGENUS_WORKERS", "4")),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
