# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Exceptions raised by PackCritS.

Every error subclasses the closest built-in exception so that callers may
catch either the specific class or, e.g., `ValueError`.
"""

from typing import Any, List, Optional, Tuple


class MissingEdge(ValueError):
    """The requested edge is not an edge of the graph."""


class MissingVertex(ValueError):
    """The requested vertex is not a vertex of the graph."""


class DeleteLastVertex(ValueError):
    """Deleting a vertex would produce the (unsupported) empty graph."""


class SizeLimit(ValueError):
    """The input is larger than the configured bound of an operation."""


class Disconnected(ValueError):
    """The operation requires a connected graph."""


class MalformedGraph6(ValueError):
    """
    A graph6 string could not be decoded.

    Args:
        message:
            A description of the problem.
        offset:
            The byte offset into the input at which decoding failed.
    """

    def __init__(self, message: str, offset: int):
        super(MalformedGraph6, self).__init__(f"{message} (byte {offset})")
        self.offset = offset


class MalformedEdgeList(ValueError):
    """
    An edge list could not be parsed.

    Args:
        message:
            A description of the problem.
        offset:
            The byte offset of the start of the offending line.
    """

    def __init__(self, message: str, offset: int):
        super(MalformedEdgeList, self).__init__(f"{message} (byte {offset})")
        self.offset = offset


class MalformedSequence(ValueError):
    """A packing sequence or pattern text could not be parsed."""


class InfeasiblePattern(ValueError):
    """The constraints of a sequence pattern admit no packing sequence."""


class PartialColoring(ValueError):
    """A coloring does not assign a positive color to every vertex."""


class InvalidInputColoring(ValueError):
    """A coloring handed to a construction is not a valid packing coloring."""


class UnknownFamily(ValueError):
    """No graph family of the given name exists."""


class ParameterOutOfRange(ValueError):
    """A family parameter lies outside the family's domain."""


class UnknownTheorem(ValueError):
    """No verification check is registered under the given id."""


class Timeout(RuntimeError):
    """
    The exact search ran out of its node or wall-clock budget.

    Args:
        message:
            A description of the exhausted budget.
        lower:
            The best known lower bound on the quantity being computed.
        upper:
            The best known upper bound on the quantity being computed.
        nodes:
            The number of search nodes explored before giving up.
        partial:
            An optional partial result (e.g. a criticality report with the
            entries computed so far).
    """

    def __init__(
        self,
        message: str,
        lower: Optional[int] = None,
        upper: Optional[int] = None,
        nodes: int = 0,
        partial: Any = None,
    ):
        super(Timeout, self).__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        self.partial = partial


class ClaimViolation(RuntimeError):
    """
    A color class of problematic pairs admits no single covering vertex.

    Args:
        color:
            The color whose problematic pairs cannot be covered.
        pairs:
            The problematic pairs of that color.
        message:
            Overrides the default description.
    """

    def __init__(
        self,
        color: int,
        pairs: List[Tuple[int, int]],
        message: Optional[str] = None,
    ):
        if message is None:
            message = (
                f"no vertex covers all {len(pairs)} problematic pairs of "
                f"color {color}: {pairs}"
            )
        super(ClaimViolation, self).__init__(message)
        self.color = color
        self.pairs = pairs
