"""Plain-text election format.

::

    # comment
    candidates: X,Y,Z
    X > Y > Z
    3: Z > Y > X

Blank lines and ``#`` lines are ignored.  A ballot line is an optional
``<weight>:`` prefix (default 1) followed by a ``>``-separated ranking that
must mention every declared candidate exactly once.  ``serialize_election``
emits the canonical form (single space around ``>``, weight prefix omitted
when 1); parse(serialize(e)) reproduces e including ballot order.
"""

from __future__ import annotations

from .election import Ballot, Election, valid_candidate_name
from .errors import ParseError


def iter_significant(text: str):
    """Yield (line_no, stripped_line) for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def parse_candidates_line(no: int, line: str) -> tuple[str, ...]:
    head, _, tail = line.partition(":")
    if head.strip() != "candidates":
        raise ParseError(no, "expected a 'candidates:' line")
    names = tuple(tok.strip() for tok in tail.split(","))
    if names == ("",):
        raise ParseError(no, "empty candidate list")
    seen = set()
    for name in names:
        if not valid_candidate_name(name):
            raise ParseError(no, f"bad candidate name: {name!r}")
        if name in seen:
            raise ParseError(no, f"duplicate candidate: {name!r}")
        seen.add(name)
    return names


def parse_ballot_line(no: int, line: str, declared: tuple[str, ...]) -> Ballot:
    weight = 1
    body = line
    if ":" in line:
        prefix, _, body = line.partition(":")
        prefix = prefix.strip()
        try:
            weight = int(prefix)
        except ValueError:
            raise ParseError(no, f"ballot weight is not an integer: {prefix!r}") from None
        if weight < 0:
            raise ParseError(no, f"ballot weight must be >= 0: {weight}")
    tokens = tuple(tok.strip() for tok in body.split(">"))
    dset = set(declared)
    seen = set()
    for tok in tokens:
        if tok not in dset:
            raise ParseError(no, f"unknown candidate in ballot: {tok!r}")
        if tok in seen:
            raise ParseError(no, f"candidate repeated in ballot: {tok!r}")
        seen.add(tok)
    if len(tokens) != len(declared):
        missing = sorted(dset - seen)
        raise ParseError(no, f"ballot does not rank every candidate (missing {missing})")
    return Ballot(tokens, weight)


def parse_election(text: str) -> Election:
    """Parse and validate an election; ParseError carries the line number."""
    candidates = None
    ballots = []
    for no, line in iter_significant(text):
        if candidates is None:
            candidates = parse_candidates_line(no, line)
        else:
            ballots.append(parse_ballot_line(no, line, candidates))
    if candidates is None:
        raise ParseError(0, "no 'candidates:' line found")
    return Election(candidates, tuple(ballots)).check()


def serialize_ballot(ballot: Ballot) -> str:
    body = " > ".join(ballot.ranking)
    return body if ballot.weight == 1 else f"{ballot.weight}: {body}"


def serialize_election(election: Election) -> str:
    election.check()
    lines = ["candidates: " + ",".join(election.candidates)]
    lines.extend(serialize_ballot(b) for b in election.ballots)
    return "\n".join(lines) + "\n"
