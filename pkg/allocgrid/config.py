import os
import logging
from dotenv import load_dotenv

# Configure logging for config
logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()
logger.debug(f"🔧 Environment loaded - Current working directory: {os.getcwd()}")
logger.debug(f"🔧 .env file exists: {os.path.exists('.env')}")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        logger.warning(f"⚠️ {name}={raw!r} is not an integer, using default {default}")
        return default


class Settings:
    def __init__(self):
        self.PROJECT_NAME: str = "allocgrid"

        # Bumped whenever the JSON envelope emitted by the CLI changes shape
        self.SCHEMA_VERSION: int = 1

        # Brute-force oracle: maximum number of quantized allocations to enumerate
        self.MAX_ENUM: int = _int_env("ALLOCGRID_MAX_ENUM", 10**7)

        # Subset-sum DP: refuse common denominators above this
        self.MAX_DENOMINATOR: int = _int_env("ALLOCGRID_MAX_DENOMINATOR", 10**7)

        # Power-set evaluator guard (2^n subsets)
        self.ENUM_NODE_LIMIT: int = min(_int_env("ALLOCGRID_ENUM_NODE_LIMIT", 25), 25)

        # Process pool width; 1 keeps everything in-process
        self.WORKERS: int = max(_int_env("ALLOCGRID_WORKERS", 1), 1)

        # Monte Carlo seed-splitting unit
        self.MC_CHUNK_TRIALS: int = max(_int_env("ALLOCGRID_MC_CHUNK", 65536), 1)

        # Output
        self.DECIMAL_PLACES: int = 6
        self.LOG_LEVEL: str = os.getenv("ALLOCGRID_LOG_LEVEL", "WARNING").upper()

        logger.debug(
            f"🔧 Settings initialized - MAX_ENUM: {self.MAX_ENUM}, "
            f"MAX_DENOMINATOR: {self.MAX_DENOMINATOR}, WORKERS: {self.WORKERS}"
        )


settings = Settings()
