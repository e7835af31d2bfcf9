"""Rewrite tests/golden from the current CLI output.

    python scripts/regen_golden.py

Run from the repository root, then review the diff before committing.
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from cli_cases import CASES, SVG_CASES  # noqa: E402

from skeinfill.cli import main  # noqa: E402


def run_case(name: str, tmp: Path) -> Path:
    argv = [a.replace("{tmp}", str(tmp)) for a in CASES[name]]
    out = tmp / f"{name}.json"
    code = main(argv + ["--out", str(out)])
    if code != 0:
        raise SystemExit(f"{name}: exit {code}")
    return out


def main_() -> None:
    golden = ROOT / "tests" / "golden"
    golden.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as d:
        tmp = Path(d)
        for name in CASES:
            shutil.copy(run_case(name, tmp), golden / f"{name}.json")
            if name in SVG_CASES:
                shutil.copy(tmp / SVG_CASES[name], golden / SVG_CASES[name])
            print("wrote", name)


if __name__ == "__main__":
    import os

    os.chdir(ROOT)
    main_()
