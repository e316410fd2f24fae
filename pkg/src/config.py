from dataclasses import dataclass
import os


@dataclass(frozen=True)
class Settings:
    LIMIT_FLATS: int = int(os.getenv("GAINCOUNT_LIMIT_FLATS", "1000000"))
    LIMIT_POINTS: int = int(os.getenv("GAINCOUNT_LIMIT_POINTS", "100000000"))
    LOG_LEVEL: str = os.getenv("GAINCOUNT_LOG_LEVEL", "WARNING")
    # The CLI flags --limit-flats / --limit-points override these per call.


settings = Settings()
