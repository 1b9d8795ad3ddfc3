"""
Configuration management for the polymatroid syzygy toolkit.
Provides centralized paths and constants. The environment (and a local .env)
may only redirect logging; every computational setting is a constant here or
a command-line flag, so results never depend on the shell they run in.
"""

import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
CONFIG_DIR = BASE_DIR / "config"
DATA_DIR = BASE_DIR / "data"
FIXTURES_DIR = DATA_DIR / "fixtures"
EXAMPLES_DIR = DATA_DIR / "examples"
LOGS_DIR = BASE_DIR / "logs"

VALID_LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Config:
    """Central configuration class"""

    # Logging
    LOG_LEVEL = os.getenv("POLYMATROID_LOG_LEVEL", "WARNING").upper()
    LOG_FILE: Optional[str] = os.getenv("POLYMATROID_LOG_FILE")

    # Rank tables have 2^p - 1 entries
    MAX_GROUND_SET = 16

    # Valuative harness: rational sample grid (1/3)Z^p
    SAMPLE_GRID_DENOMINATOR = 3
    VALUATIVE_SPLITS = 10

    # Snapper integrality is sampled on the box {0..3}^p
    SNAPPER_SAMPLE_BOUND = 3

    # Worker pools and randomized split selection
    DEFAULT_PARALLEL = 1
    DEFAULT_SEED = 0

    # Fixture corpus bounds
    CORPUS_MAX_P = 4
    CORPUS_MAX_CAGE = 4

    @classmethod
    def validate(cls) -> bool:
        """Validate that configuration values are usable"""
        if cls.LOG_LEVEL not in VALID_LOG_LEVELS:
            raise ValueError(
                f"Invalid log level: {cls.LOG_LEVEL}. "
                f"Expected one of {', '.join(VALID_LOG_LEVELS)}."
            )

        positive_fields = [
            ("MAX_GROUND_SET", cls.MAX_GROUND_SET),
            ("SAMPLE_GRID_DENOMINATOR", cls.SAMPLE_GRID_DENOMINATOR),
            ("DEFAULT_PARALLEL", cls.DEFAULT_PARALLEL),
            ("CORPUS_MAX_P", cls.CORPUS_MAX_P),
            ("CORPUS_MAX_CAGE", cls.CORPUS_MAX_CAGE),
        ]
        invalid = [name for name, value in positive_fields if value < 1]
        if invalid:
            raise ValueError(f"Configuration values must be positive: {', '.join(invalid)}")

        return True

    @classmethod
    def get_log_file(cls) -> Optional[Path]:
        """Get the log file path, if file logging was requested"""
        if not cls.LOG_FILE:
            return None
        path = Path(cls.LOG_FILE)
        if not path.is_absolute():
            path = LOGS_DIR / path
        return path
