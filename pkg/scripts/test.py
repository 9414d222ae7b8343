"""Run the pytest suite with coverage."""

import subprocess
import sys


def test():
    completed = subprocess.run(["poetry", "run", "pytest", *sys.argv[1:]], check=False)
    sys.exit(completed.returncode)
