# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Packing sequences and sequence classes

A `PackingSequence` is a non-decreasing sequence of positive integers
`(s_1, s_2, ...)` given by a finite prefix and a tail rule. Under the
`CONSTANT` rule every term past the prefix repeats the last prefix value;
under `INCREMENT` the terms keep growing by one. `(1, inc)` is the packing
sequence `(1, 2, 3, ...)` and `(k, const)` is the distance-`k` sequence.

A `SequencePattern` describes a class of packing sequences by constraining
its leading terms, each to an exact value (`FIXED`) or to a lower bound
(`AT_LEAST`). Terms beyond the constrained positions are only required to
keep the sequence non-decreasing.

Both types have a compact text syntax:

Example:
    >>> from PackCritS.sequence import parse_sequence, parse_pattern, matches
    >>> seq = parse_sequence("1,3,3,const")
    >>> seq.s_at(9)
    3
    >>> matches(parse_pattern("1,>=3"), seq)
    True
"""

from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from PackCritS.errors import InfeasiblePattern, MalformedSequence


class Tail(Enum):
    CONSTANT = "const"
    INCREMENT = "inc"


class PackingSequence:
    """
    A non-decreasing positive integer sequence with a finite description.

    Two sequences compare equal when all of their terms agree, regardless of
    how long a prefix was used to describe them.

    Args:
        prefix:
            The leading terms, at least one.
        tail:
            The rule generating the terms past the prefix.

    Raises:
        MalformedSequence:
            If the prefix is empty, non-positive, or decreasing.
    """

    __slots__ = ("_prefix", "_tail")

    def __init__(
        self, prefix: Iterable[int], tail: Tail = Tail.CONSTANT
    ):
        prefix = tuple(int(s) for s in prefix)
        if len(prefix) == 0:
            raise MalformedSequence("a packing sequence needs a prefix")
        if prefix[0] < 1:
            raise MalformedSequence(
                f"packing sequence terms must be positive, not {prefix[0]}"
            )
        for i in range(1, len(prefix)):
            if prefix[i] < prefix[i - 1]:
                raise MalformedSequence(
                    f"packing sequence decreases at position {i + 1}: "
                    f"{prefix[i - 1]} > {prefix[i]}"
                )
        self._prefix = prefix
        self._tail = Tail(tail)

    @property
    def prefix(self) -> Tuple[int, ...]:
        return self._prefix

    @property
    def tail(self) -> Tail:
        return self._tail

    def s_at(self, i: int) -> int:
        """
        The `i`-th term, 1-based.

        Raises:
            ValueError:
                If `i < 1`.
        """
        if i < 1:
            raise ValueError(f"sequence positions start at 1, not {i}")
        m = len(self._prefix)
        if i <= m:
            return self._prefix[i - 1]
        if self._tail is Tail.CONSTANT:
            return self._prefix[-1]
        return self._prefix[-1] + (i - m)

    def terms(self, k: int) -> Tuple[int, ...]:
        """The first `k` terms."""
        return tuple(self.s_at(i) for i in range(1, k + 1))

    def _key(self) -> Tuple[Tuple[int, ...], Tail]:
        prefix = list(self._prefix)
        if self._tail is Tail.CONSTANT:
            while len(prefix) > 1 and prefix[-2] == prefix[-1]:
                prefix.pop()
        else:
            while len(prefix) > 1 and prefix[-2] + 1 == prefix[-1]:
                prefix.pop()
        return tuple(prefix), self._tail

    def __eq__(self, other) -> bool:
        if not isinstance(other, PackingSequence):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"PackingSequence({format_sequence(self)!r})"


PACKING = PackingSequence((1,), Tail.INCREMENT)


def distance_sequence(k: int) -> PackingSequence:
    """The constant sequence `(k, k, ...)` of distance-`k` colorings."""
    return PackingSequence((k,), Tail.CONSTANT)


def parse_sequence(text: str) -> PackingSequence:
    """
    Parse `"1,3,3,const"` or `"1,inc"` style text.

    A missing tail token means `const`.

    Raises:
        MalformedSequence:
            If a token is not a positive integer or the terms decrease.
    """
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise MalformedSequence(f"empty packing sequence {text!r}")
    tail = Tail.CONSTANT
    if tokens[-1].lower() in ("const", "inc"):
        tail = Tail(tokens.pop().lower())
    prefix = list()
    for t in tokens:
        try:
            prefix.append(int(t))
        except ValueError:
            raise MalformedSequence(
                f"invalid packing sequence term {t!r} in {text!r}"
            )
    return PackingSequence(prefix, tail)


def format_sequence(seq: PackingSequence) -> str:
    return ",".join(str(s) for s in seq.prefix) + "," + seq.tail.value


class Constraint(Enum):
    FIXED = "=="
    AT_LEAST = ">="


class SequencePattern:
    """
    A class of packing sequences given by constraints on the leading terms.

    Args:
        constraints:
            Pairs `(Constraint, value)`, one per leading position.

    Raises:
        MalformedSequence:
            If there are no constraints or a value is not positive.
    """

    __slots__ = ("_constraints",)

    def __init__(self, constraints: Iterable[Tuple[Constraint, int]]):
        cs = tuple((Constraint(c), int(v)) for c, v in constraints)
        if len(cs) == 0:
            raise MalformedSequence("a sequence pattern needs a constraint")
        for _, v in cs:
            if v < 1:
                raise MalformedSequence(
                    f"pattern values must be positive, not {v}"
                )
        self._constraints = cs

    @property
    def constraints(self) -> Tuple[Tuple[Constraint, int], ...]:
        return self._constraints

    def __len__(self) -> int:
        return len(self._constraints)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SequencePattern):
            return NotImplemented
        return self._constraints == other._constraints

    def __hash__(self) -> int:
        return hash(self._constraints)

    def __str__(self) -> str:
        return format_pattern(self)

    def __repr__(self) -> str:
        return f"SequencePattern({format_pattern(self)!r})"

    def lower_bounds(self) -> List[int]:
        """
        Smallest feasible value of each constrained term.

        Raises:
            InfeasiblePattern:
                If the constraints force a decrease.
        """
        lb = 1
        out = list()
        for i, (kind, v) in enumerate(self._constraints):
            if kind is Constraint.FIXED:
                if v < lb:
                    raise InfeasiblePattern(
                        f"{self} forces s_{i + 1} = {v} below the "
                        f"preceding bound {lb}"
                    )
                lb = v
            else:
                lb = max(lb, v)
            out.append(lb)
        return out

    def upper_bounds(self) -> List[Optional[int]]:
        """
        Largest value of each constrained term allowed by later `FIXED`
        constraints, or None when unbounded.
        """
        ub: Optional[int] = None
        out: List[Optional[int]] = [None] * len(self._constraints)
        for i in range(len(self._constraints) - 1, -1, -1):
            kind, v = self._constraints[i]
            if kind is Constraint.FIXED:
                ub = v if ub is None else min(ub, v)
            out[i] = ub
        return out


def parse_pattern(text: str) -> SequencePattern:
    """
    Parse `"1,3,>=4"` style text: plain integers are fixed, `>=v` bounded.

    Raises:
        MalformedSequence:
            If a token cannot be parsed.
    """
    constraints = list()
    for t in (t.strip() for t in text.split(",")):
        if not t:
            continue
        kind = Constraint.FIXED
        if t.startswith(">="):
            kind = Constraint.AT_LEAST
            t = t[2:].strip()
        try:
            constraints.append((kind, int(t)))
        except ValueError:
            raise MalformedSequence(f"invalid pattern token {t!r} in {text!r}")
    return SequencePattern(constraints)


def format_pattern(pattern: SequencePattern) -> str:
    return ",".join(
        (">=" if kind is Constraint.AT_LEAST else "") + str(v)
        for kind, v in pattern.constraints
    )


def matches(
    pattern: SequencePattern,
    seq: PackingSequence,
    depth: Optional[int] = None,
) -> bool:
    """
    Whether `seq` belongs to the class described by `pattern`.

    Example:
        >>> from PackCritS.sequence import parse_pattern, parse_sequence
        >>> matches(parse_pattern("1,1"), parse_sequence("1,inc"))
        False
        >>> matches(parse_pattern("1,1"), parse_sequence("1,1,2,inc"))
        True

    Args:
        pattern:
            The class.
        seq:
            The candidate sequence.
        depth:
            Number of leading terms to inspect, at least the pattern length.
            Terms past the pattern are held to a final `>=` constraint; a
            final fixed value constrains its own index only. Defaults to
            the pattern length.

    Raises:
        ValueError:
            If `depth` is shorter than the pattern.
    """
    if depth is None:
        depth = len(pattern)
    if depth < len(pattern):
        raise ValueError(
            f"depth {depth} is shorter than the pattern {pattern}"
        )
    last_kind, last_v = pattern.constraints[-1]
    for i in range(1, depth + 1):
        if i <= len(pattern):
            kind, v = pattern.constraints[i - 1]
        elif last_kind is Constraint.AT_LEAST:
            kind, v = last_kind, last_v
        else:
            break
        s = seq.s_at(i)
        if kind is Constraint.FIXED and s != v:
            return False
        if kind is Constraint.AT_LEAST and s < v:
            return False
    return True


def _walk(
    pattern: SequencePattern, raised: Sequence[int]
) -> List[int]:
    prefix: List[int] = list()
    for i, (kind, v) in enumerate(pattern.constraints):
        prev = prefix[-1] if prefix else 1
        if kind is Constraint.FIXED:
            prefix.append(v)
        else:
            prefix.append(max(v, raised[i], prev))
    return prefix


def representatives(
    pattern: SequencePattern, k: int
) -> List[PackingSequence]:
    """
    A small deterministic set of members of a sequence class.

    The first member is the minimal one: every bounded term at its bound and
    a constant tail. Up to three perturbations follow: bounded terms raised
    by three (within any later fixed value), an extra increasing term if it
    falls within the first `k` positions, and an incrementing tail. Members
    that agree with an earlier one on the first `max(k, len(pattern) + 2)`
    terms are dropped.

    Example:
        >>> from PackCritS.sequence import parse_pattern
        >>> [str(s) for s in representatives(parse_pattern("1,3,>=4"), 4)]
        ['1,3,4,const', '1,3,7,const', '1,3,4,5,const', '1,3,4,inc']

    Args:
        pattern:
            The class.
        k:
            The number of colors the caller cares about, at least 1.

    Raises:
        InfeasiblePattern:
            If no non-decreasing sequence satisfies the constraints.
    """
    if k < 1:
        raise ValueError(f"representatives needs k >= 1, not {k}")
    pattern.lower_bounds()
    n_cons = len(pattern)
    minimal = _walk(pattern, [0] * n_cons)
    uppers = pattern.upper_bounds()
    raised = [
        (
            v + 3
            if uppers[i] is None
            else max(v, min(v + 3, uppers[i]))  # type: ignore
        )
        if kind is Constraint.AT_LEAST
        else 0
        for i, (kind, v) in enumerate(pattern.constraints)
    ]
    candidates = [
        PackingSequence(minimal, Tail.CONSTANT),
        PackingSequence(_walk(pattern, raised), Tail.CONSTANT),
    ]
    if n_cons + 1 <= k:
        candidates.append(
            PackingSequence(minimal + [minimal[-1] + 1], Tail.CONSTANT)
        )
    candidates.append(PackingSequence(minimal, Tail.INCREMENT))

    depth = max(k, n_cons + 2)
    seen = set()
    reps = list()
    for seq in candidates:
        key = seq.terms(depth)
        if key in seen:
            continue
        seen.add(key)
        reps.append(seq)
    return reps
