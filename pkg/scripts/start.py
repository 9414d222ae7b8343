"""Run the isocant CLI, forwarding any arguments: `poetry run start -- volume --d 3 --ell 2 --a 1`."""

import subprocess
import sys


def start():
    completed = subprocess.run(["poetry", "run", "python", "src/app.py", *sys.argv[1:]], check=False)
    sys.exit(completed.returncode)
