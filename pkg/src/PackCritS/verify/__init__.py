# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from .checks import (
    TheoremCheck,
    Verdict,
    VerifyOptions,
    check_ids,
    explore_cut_edges,
    explore_paths,
    verify_all,
    verify_theorem,
)
from .enumerate import (
    connected_graphs_up_to,
    enumerate_connected_graphs,
    find_k_critical,
    find_k_vertex_critical,
    trees,
)
