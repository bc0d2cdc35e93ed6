# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""Public PackCritS modules and functions."""

import importlib.metadata

try:
    __version__ = importlib.metadata.version("packcrits")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"

from PackCritS._src.config import config as config
