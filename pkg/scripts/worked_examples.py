"""Drive the command-line interface over the bundled worked examples.

Prints the full tabulation trace for each fixture election, the cloning
pair that flips the winner from Y to Z, and the four-candidate lift where
the Bucklin winner set stays put while the stage tiebreak moves.  Output
is deterministic; it doubles as a smoke test after an install.

Usage:
    python3 scripts/worked_examples.py
"""

import contextlib
import io
import sys
import tempfile
from pathlib import Path

from skatevote.cli import main as cli_main
from skatevote.fileformat import serialize_election
from skatevote.fixtures import (
    bucklin_pr_after,
    bucklin_pr_before,
    bucklin_tie_election,
    clone_pair_base,
    clone_pair_cloned,
    dance_final,
    stage_two_tiebreak_election,
)

CASES = [
    ("six-couple dance final", dance_final(), ["trace"]),
    ("Bucklin two-way tie at stage 2", bucklin_tie_election(), ["trace", "--rule", "bucklin"]),
    ("stage-2 score tie broken on sumpos", stage_two_tiebreak_election(), ["trace"]),
    ("cloning pair, base profile", clone_pair_base(), ["trace"]),
    ("cloning pair, Z2 added", clone_pair_cloned(), ["trace"]),
    ("lift example, before", bucklin_pr_before(), ["trace"]),
    ("lift example, after raising b", bucklin_pr_after(), ["trace"]),
]


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    if code != 0:
        raise SystemExit(f"command failed ({code}): {argv}")
    return buf.getvalue()


def main():
    with tempfile.TemporaryDirectory() as tmp:
        for title, election, argv in CASES:
            path = Path(tmp) / "election.txt"
            path.write_text(serialize_election(election))
            print(f"=== {title} ===")
            print(run(argv + [str(path)]), end="")
            print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
