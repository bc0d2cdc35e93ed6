# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Backtracking engine for S-packing k-colorability.

Vertices are colored in descending degree order (ties by index). Each color
keeps the bitset of its class; color `i` is feasible for `v` iff no vertex of
the class lies within distance `s_i` of `v`. Among consecutive colors with
equal `s_i`, a color is only opened once its predecessor is in use.
"""

from time import perf_counter
from typing import Dict, List, Optional, Sequence, Tuple

from PackCritS._src.config import config
from PackCritS.errors import Timeout
from PackCritS.graph import DistanceMatrix, Graph, all_pairs_distance
from PackCritS.sequence import PackingSequence

_CLOCK_PERIOD = 1 << 12


class PackingSearch:
    """
    Single-threaded search state over one graph and packing sequence.

    Args:
        g:
            The graph.
        seq:
            The packing sequence.
        dm:
            Optional precomputed distance matrix of `g`.
        node_budget:
            Maximum number of search nodes over the lifetime of the object.
            Defaults to the `packcrits_node_budget` option.
        time_budget:
            Wall-clock seconds over the lifetime of the object, 0 for no
            limit. Defaults to the `packcrits_time_budget` option.
    """

    def __init__(
        self,
        g: Graph,
        seq: PackingSequence,
        dm: Optional[DistanceMatrix] = None,
        node_budget: Optional[int] = None,
        time_budget: Optional[float] = None,
    ):
        self.g = g
        self.seq = seq
        self.dm = all_pairs_distance(g) if dm is None else dm
        self.node_budget = (
            config.state.node_budget if node_budget is None else node_budget
        )
        self.time_budget = (
            config.state.time_budget if time_budget is None else time_budget
        )
        self.nodes = 0
        self._start = perf_counter()
        self._balls: Dict[int, Tuple[int, ...]] = dict()
        degrees = g.degrees()
        self.order = sorted(g.vertices(), key=lambda v: (-degrees[v], v))

    def balls(self, r: int) -> Tuple[int, ...]:
        """Per-vertex bitsets of the vertices within distance `r`."""
        if r not in self._balls:
            self._balls[r] = self.dm.ball_masks(r)
        return self._balls[r]

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise Timeout(
                f"node budget of {self.node_budget} exhausted",
                nodes=self.nodes,
            )
        if self.time_budget and self.nodes % _CLOCK_PERIOD == 0:
            if perf_counter() - self._start > self.time_budget:
                raise Timeout(
                    f"time budget of {self.time_budget}s exhausted",
                    nodes=self.nodes,
                )

    def color(self, k: int) -> Optional[List[int]]:
        """
        Search for an S-packing coloring with colors `1..k`.

        Returns:
            The color of each vertex, or None if no such coloring exists.

        Raises:
            Timeout:
                If a budget runs out before the question is settled.
        """
        n = self.g.n
        radius = [0] + [self.seq.s_at(i) for i in range(1, k + 1)]
        balls = [()] + [self.balls(radius[i]) for i in range(1, k + 1)]
        opens_after = [False] * (k + 1)
        for i in range(2, k + 1):
            opens_after[i] = radius[i] == radius[i - 1]
        classes = [0] * (k + 1)
        assignment = [0] * n
        order = self.order

        def extend(pos: int) -> bool:
            self._tick()
            if pos == n:
                return True
            v = order[pos]
            bit = 1 << v
            for i in range(1, k + 1):
                if opens_after[i] and classes[i - 1] == 0:
                    continue
                if classes[i] & balls[i][v]:
                    continue
                classes[i] |= bit
                assignment[v] = i
                if extend(pos + 1):
                    return True
                classes[i] &= ~bit
            assignment[v] = 0
            return False

        if extend(0):
            return assignment
        return None

    def first_fit(self, order: Optional[Sequence[int]] = None) -> List[int]:
        """
        Greedy coloring in search order, or in `order` when given, each
        vertex taking its smallest feasible color. An unused color is always
        feasible.
        """
        assignment = [0] * self.g.n
        classes: List[int] = [0]
        for v in self.order if order is None else order:
            i = 1
            while True:
                if i == len(classes):
                    classes.append(0)
                if classes[i] & self.balls(self.seq.s_at(i))[v] == 0:
                    break
                i += 1
            classes[i] |= 1 << v
            assignment[v] = i
        return assignment
