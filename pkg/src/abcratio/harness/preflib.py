"""
Reader and writer for PrefLib election files with strict (possibly
incomplete) rankings.

Both the current format (``# NUMBER ALTERNATIVES: m`` metadata and ballot
lines ``count: 2,1,4``) and the legacy format (a candidate-count line, one
name line per candidate, a summary line, then ``count,2,1,4``) are read.
Candidates are 1-based in the file and 0-based in memory.
"""

import re
from dataclasses import dataclass

from abcratio.core import ParameterError, Profile
from abcratio.harness.profile_io import ParseError, UnsupportedFormatError

_ALTERNATIVES = re.compile(r"^#\s*NUMBER\s+ALTERNATIVES\s*:\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class RankedBallot:
    """``multiplicity`` identical voters ranking candidates in ``ranking`` order."""

    multiplicity: int
    ranking: tuple

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be positive, got {self.multiplicity}")
        if len(set(self.ranking)) != len(self.ranking):
            raise ValueError(f"ranking {self.ranking} repeats a candidate")


def _int(token, lineno):
    token = token.strip()
    if not token.isdigit():
        raise ParseError(f"expected a non-negative integer, got {token!r}", lineno)
    return int(token)


def _ranking(tokens, lineno, m):
    ranking = []
    for tok in tokens:
        c = _int(tok, lineno)
        if c < 1 or (m is not None and c > m):
            raise ParseError(f"candidate {c} out of range 1..{m}", lineno)
        ranking.append(c - 1)
    if len(set(ranking)) != len(ranking):
        raise ParseError("ranking repeats a candidate", lineno)
    return tuple(ranking)


def parse_preflib(data):
    """
    Parse a PrefLib file.

    Parameters
    ----------
    data : bytes or str

    Returns
    -------
    (list of RankedBallot, int)
        The ballots and the number of candidates.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 text ({exc.reason})") from None
    lines = data.splitlines()
    m = None
    content = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _ALTERNATIVES.match(line)
            if match:
                m = int(match.group(1))
            continue
        content.append((lineno, line))

    legacy = bool(content) and ":" not in content[0][1] and "," not in content[0][1]
    if legacy:
        lineno, line = content[0]
        m = _int(line, lineno)
        if len(content) < m + 2:
            raise ParseError("legacy header is truncated", content[-1][0])
        content = content[m + 2 :]

    ballots = []
    for lineno, line in content:
        if "{" in line or "}" in line:
            raise UnsupportedFormatError("tied candidates are not supported", lineno)
        if legacy:
            count, _, rest = line.partition(",")
        else:
            count, sep, rest = line.partition(":")
            if not sep:
                raise ParseError(f"expected 'count: ranking', got {line!r}", lineno)
        multiplicity = _int(count, lineno)
        if multiplicity < 1:
            raise ParseError("multiplicity must be positive", lineno)
        tokens = [tok for tok in rest.split(",")] if rest.strip() else []
        ballots.append(RankedBallot(multiplicity, _ranking(tokens, lineno, m)))
    if not ballots:
        raise ParseError("no ballots")
    if m is None:
        m = max((max(b.ranking) + 1 for b in ballots if b.ranking), default=0)
    if m < 1:
        raise ParseError("file names no candidates")
    return ballots, m


def format_preflib(ballots, num_candidates):
    """Serialise ballots in the current PrefLib format."""
    lines = [f"# NUMBER ALTERNATIVES: {num_candidates}"]
    for ballot in ballots:
        lines.append(f"{ballot.multiplicity}: " + ",".join(str(c + 1) for c in ballot.ranking))
    return "\n".join(lines) + "\n"


def read_preflib(path):
    with open(path, "rb") as fh:
        return parse_preflib(fh.read())


def top_i_approvals(ballots, i, num_candidates=None):
    """
    Approval profile where each voter approves the top ``i`` candidates of
    their ranking (or the whole ranking when shorter).
    """
    if i < 1:
        raise ParameterError(f"i must be at least 1, got {i}")
    if num_candidates is None:
        num_candidates = max((max(b.ranking) + 1 for b in ballots if b.ranking), default=1)
    approvals = []
    for ballot in ballots:
        approvals.extend([ballot.ranking[:i]] * ballot.multiplicity)
    return Profile(num_candidates, approvals)
