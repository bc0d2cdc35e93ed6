# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from typing import Sequence, Tuple


def auto_str(klass):
    def __str__(self):
        members = vars(self) if hasattr(self, "__dict__") else dict()
        public_members = ", ".join(
            "%s=%s" % item
            for item in members.items()
            if not item[0].startswith("_")
        )
        return f"{type(self).__name__}({public_members})"

    klass.__str__ = __str__
    return klass


def parse_edge_text(text: str) -> Tuple[int, int]:
    """Parse `"u,v"` (or `"u v"`) into a vertex pair."""
    tokens = text.replace(",", " ").split()
    if len(tokens) != 2:
        raise ValueError(f"expected an edge 'u,v', not {text!r}")
    return int(tokens[0]), int(tokens[1])


def format_edge(e: Sequence[int]) -> str:
    return f"{e[0]},{e[1]}"
