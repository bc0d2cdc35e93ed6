# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Rendering of check results

Records are one JSON object per line with the keys `id`, `verdict`,
`parameters`, `representatives`, `expected`, `observed` and
`counterexample`, in that order. Tables are for people.
"""

import json
from typing import IO, Iterable, List

from PackCritS.verify.checks import TheoremCheck, Verdict


def _key(obj):
    # json only accepts str keys; dict keys here are str or int
    if isinstance(obj, dict):
        return {str(k): _key(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_key(v) for v in obj]
    return obj


def to_json_line(check: TheoremCheck) -> str:
    """One check as a single-line JSON record."""
    return json.dumps(_key(check.to_record()), separators=(",", ":"))


def write_records(checks: Iterable[TheoremCheck], stream: IO[str]) -> None:
    """Write checks to `stream` as JSON lines."""
    for c in checks:
        stream.write(to_json_line(c) + "\n")


def format_table(checks: Iterable[TheoremCheck]) -> str:
    """
    Checks as an aligned table of id, verdict and a one-line summary.

    Example:
        >>> from PackCritS.verify.checks import TheoremCheck, Verdict
        >>> c = TheoremCheck("x", {}, [], 1, 1, Verdict.PASS)
        >>> print(format_table([c]))
        id  verdict  summary
        x   PASS     0 representatives
    """
    rows: List[List[str]] = [["id", "verdict", "summary"]]
    for c in checks:
        summary = f"{len(c.representatives)} representatives"
        if isinstance(c.observed, dict) and "cases" in c.observed:
            summary = (
                f"{c.observed['cases']} cases, "
                f"{c.observed['violations']} violations"
            )
        if c.verdict is not Verdict.PASS and c.counterexample:
            summary += f"; first: {json.dumps(_key(c.counterexample[0]))}"
        rows.append([c.id, c.verdict.value, summary])
    widths = [max(len(r[i]) for r in rows) for i in range(2)]
    return "\n".join(
        f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]}".rstrip()
        for r in rows
    )


def summarize(checks: Iterable[TheoremCheck]) -> dict:
    """Counts of each verdict."""
    counts = {v.value: 0 for v in Verdict}
    for c in checks:
        counts[c.verdict.value] += 1
    return counts
