"""Rewrite the CLI golden files from the current implementation.

Run after an intentional output change, then review the diff by hand:

    python3 scripts/regen_golden.py
"""

import io
import shlex
from pathlib import Path

from intdiff.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def cases():
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, args = line.split("\t", 1)
            yield name, shlex.split(args)


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue()


if __name__ == "__main__":
    for name, argv in cases():
        for suffix, extra in ((".txt", []), (".json", ["--json"])):
            code, text = run(extra + argv)
            if code:
                raise SystemExit(f"{name}: exit {code}")
            (GOLDEN / (name + suffix)).write_text(text)
        print(name)
