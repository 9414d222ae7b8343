"""
Runtime configuration for the isocant toolkit.

Values come from environment variables (optionally loaded from env/.env) and are
re-read every time a Config is constructed, so a CLI run or a test can override them.
"""

import os

from dotenv import load_dotenv

load_dotenv("env/.env")

DEFAULT_SEED = 0x5EED1500CA17


class Config:
    """Isocant Configuration"""

    VERTEX_DIMENSION_CAP = 24
    FACET_DIMENSION_CAP = 24
    CLOSED_FORM_DIMENSION_CAP = 64
    LP_DIMENSION_CAP = 4
    ZONOTOPE_GENERATOR_CAP = 24

    def __init__(self) -> None:
        self.MC_SAMPLES = int(os.getenv("ISOCANT_MC_SAMPLES", "1000000"))
        self.MC_SEED = int(os.getenv("ISOCANT_MC_SEED", hex(DEFAULT_SEED)), 0)
        self.MC_WORKERS = int(os.getenv("ISOCANT_MC_WORKERS", "4"))
        self.MC_CHUNK = int(os.getenv("ISOCANT_MC_CHUNK", "65536"))
        self.LOG_LEVEL = os.getenv("ISOCANT_LOG_LEVEL", "WARNING").upper()
