from typing import Literal, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="SQCOLOUR_")

    explicit_threshold: int = 2**28  # explicit colourings / enumeration

    max_construct_k: int = 20

    search_max_n: int = 4096  # compute_S ascent ceiling

    budget_nodes: Optional[int] = None

    budget_seconds: Optional[float] = 600.0

    symmetry_breaking: bool = True

    sat_solver: str = "minisat22"

    extremal_exact_threshold: int = 64

    extremal_dp_bits: int = 20

    threshold_exponent: int = 3

    increment_exponent: int = 3

    length_exponent: int = 3

    length_constant: float = 1.0  # c in Q := c α² N′ / log N′

    min_progression_length: int = 2

    max_q0: int = 64

    envelope_constant: float = 10.0

    arc_constant: float = 0.1

    weyl_grid_size: int = 4096

    threads: Optional[int] = None

    seed: int = 0

    output_format: Literal["text", "json-lines"] = "text"

    log_level: Optional[str] = None  # overrides the root level of logging.yaml


settings = Settings()
