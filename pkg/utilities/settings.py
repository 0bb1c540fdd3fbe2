"""
Run-wide defaults for the sampler, read once from the environment.

Values come from a `.env` file in the working directory (or the process
environment) so that long benchmark batches can be tuned without touching
code:

- PLP_STEP_LIMIT     resolution steps allowed per evaluation (default 1000000)
- PLP_BRANCH_LIMIT   evaluation-tree leaves the exact oracle may visit (default 1000000)
- PLP_WORLD_LIMIT    complete worlds the world-enumeration oracle may visit (default 1048576)
- PLP_Q_FLOOR        lower bound on Q inside adapted distributions (default 1e-6)
- PLP_LOG_LEVEL      logging level name (default WARNING)
"""

import logging
import os
import sys
from datetime import datetime

from dotenv import load_dotenv

load_dotenv()
STEP_LIMIT = int(float(os.getenv("PLP_STEP_LIMIT", "1000000")))
BRANCH_LIMIT = int(float(os.getenv("PLP_BRANCH_LIMIT", "1000000")))
WORLD_LIMIT = int(float(os.getenv("PLP_WORLD_LIMIT", "1048576")))
Q_FLOOR = float(os.getenv("PLP_Q_FLOOR", "1e-6"))
LOG_LEVEL = os.getenv("PLP_LOG_LEVEL", "WARNING").upper()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level=None):
    level = level or LOG_LEVEL
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT, force=True)


def print_the_time(label, stream=None):
    print(f"{label}:\t{datetime.now().strftime('%Y-%m-%d %H:%M:%S')}", file=stream or sys.stderr)
