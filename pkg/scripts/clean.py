"""Remove build output, caches and coverage reports."""

import shutil
from pathlib import Path

GENERATED = ("dist", "__pycache__", ".pytest_cache", ".mypy_cache", "coverage")


def clean():
    base = Path("./")

    for e in base.rglob("**/*"):
        if any(e.match(name) for name in GENERATED) and e.is_dir():
            print(e)
            shutil.rmtree(e)
