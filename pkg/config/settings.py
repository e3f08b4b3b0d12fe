"""Configuration settings for the Schreier/Baernstein toolkit."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent

# Logging Configuration
LOG_LEVEL = os.getenv("SCHREIER_LOG_LEVEL", "WARNING").upper()
LOG_FILE = os.getenv("SCHREIER_LOG_FILE") or None

# Randomized trials
# Unset means "derive the seed from the command arguments".
_seed = os.getenv("SCHREIER_DEFAULT_SEED")
DEFAULT_SEED = int(_seed) if _seed else None
DEFAULT_TRIALS = int(os.getenv("SCHREIER_DEFAULT_TRIALS", "10000"))

# Nilpotency certification
EXHAUSTIVE_LIMIT = int(os.getenv("SCHREIER_EXHAUSTIVE_LIMIT", "1000000"))
WORKERS = int(os.getenv("SCHREIER_WORKERS", "1"))

# Output Configuration
SIGNIFICANT_DIGITS = int(os.getenv("SCHREIER_SIGNIFICANT_DIGITS", "12"))
