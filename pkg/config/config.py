import os
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


# Logging
LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
CONSOLE_LOG_LEVEL = os.getenv("CONSOLE_LOG_LEVEL", "WARNING")

# HTTP server
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))
API_RELOAD = _env_bool("API_RELOAD")
API_KEY = os.getenv("API_KEY")
ORACLE_WORKERS = int(os.getenv("ORACLE_WORKERS", "1"))

# Library limits. These are not read from the environment so that results never
# depend on the machine they were computed on.
MAX_GROUP_ORDER = 10000
WITNESS_MAX_VERTICES = 16
ORACLE_MAX_N = 6
ORACLE_MAX_M = 12
RESTRICTED_SEARCH_LIMIT = 5_000_000
