"""
Plain-text profile format.

Line 1 holds ``m n``; each of the following n lines lists one voter's
approved candidates as space-separated 0-based indices. A blank line is an
empty ballot.
"""

from abcratio.core import DomainError, Profile, members


class ParseError(ValueError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class UnsupportedFormatError(ParseError):
    """Well-formed input using a feature the parser deliberately rejects."""


def parse_profile(text):
    """Parse the plain-text format into a :class:`Profile`."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing 'm n' header", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'm n', got {lines[0]!r}", 1)
    try:
        m, n = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {lines[0]!r}", 1) from None
    if m < 1 or n < 1:
        raise ParseError("m and n must be positive", 1)
    body = lines[1:]
    extra = body[n:]
    if any(line.strip() for line in extra):
        raise ParseError(f"more than n={n} ballot lines", n + 2)
    body = body[:n] + [""] * (n - len(body))
    ballots = []
    for offset, line in enumerate(body):
        try:
            ballot = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer candidate in {line!r}", offset + 2) from None
        for c in ballot:
            if not 0 <= c < m:
                raise ParseError(f"candidate {c} out of range for m={m}", offset + 2)
        ballots.append(ballot)
    try:
        return Profile(m, ballots)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_profile(profile):
    lines = [f"{profile.num_candidates} {profile.num_voters}"]
    for mask in profile.masks:
        lines.append(" ".join(map(str, members(mask))))
    return "\n".join(lines) + "\n"


def read_profile(path):
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def write_profile(profile, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_profile(profile))
