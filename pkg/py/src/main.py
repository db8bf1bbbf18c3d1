# Run the command-line client.
import logging
import sys

import cmds
from client import LabClient
from cogs.bounds_cog import BoundChecker
from cogs.energy_cog import EnergyCounter
from cogs.probability_cog import LemmaChecker
from cogs.scan_cog import Scanner
from cogs.sequences_cog import SequenceCounter
from dotenv import load_dotenv

log = logging.getLogger(__name__)
logging.basicConfig(level=logging.INFO, stream=sys.stderr)

# Apply environment variables from a `.env` file, if present.
load_dotenv()


def build_client() -> LabClient:
    return LabClient(
        misc_commands=[cmds.constants],
        cogs=[SequenceCounter, EnergyCounter, Scanner, BoundChecker, LemmaChecker],
    )


if __name__ == "__main__":
    sys.exit(build_client().run())
