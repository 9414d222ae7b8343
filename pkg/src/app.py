"""
Isocant Entry Point

Runs the command-line front end:

    poetry run python src/app.py volume --d 3 --ell 2 --a 1
    poetry run start -- mahler --d 40 --certificate
"""

import sys

from cli import run


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
