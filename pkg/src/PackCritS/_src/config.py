# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Process-wide configuration.

Options are plain named values with defaults, optionally overridden by an
upper-case environment variable of the same name and, once
`config.parse_flags_with_absl()` has run, by `--packcrits_*` command line
flags. Every option mirrors itself into `config.state` through an update hook.
"""

import itertools
import os
import sys
from typing import Callable, Dict, Optional


def int_env(varname: str, default: int) -> int:
    """Read an environment variable and interpret it as an integer."""
    val = os.getenv(varname, str(default))
    try:
        return int(val)
    except ValueError:
        raise ValueError(
            f"invalid integer value {val!r} for environment {varname!r}"
        )


class Config:
    def __init__(self):
        self.values: Dict = dict()
        self.meta: Dict = dict()
        self.use_absl = False
        self._update_hooks: Dict = dict()

    def update(self, name: str, val) -> None:
        if self.use_absl:
            setattr(self.absl_flags.FLAGS, name, val)
        else:
            self.check_exists(name)
        self.values[name] = val

        hook = self._update_hooks.get(name, None)
        if hook:
            hook(val)

    def read(self, name: str):
        if self.use_absl:
            return getattr(self.absl_flags.FLAGS, name)
        self.check_exists(name)
        return self.values[name]

    def __getattr__(self, name: str):
        values = self.__dict__.get("values", dict())
        if name in values:
            return self.read(name)
        raise AttributeError(f"Unrecognized config option: {name}")

    def check_exists(self, name: str) -> None:
        if name not in self.values:
            raise AttributeError(f"Unrecognized config option: {name}")

    def add_option(
        self,
        name: str,
        default,
        help: str,
        update_hook: Optional[Callable] = None,
    ) -> None:
        if name in self.values:
            raise ValueError(f"Config option {name} already defined")
        self.values[name] = default
        self.meta[name] = help
        if update_hook:
            self._update_hooks[name] = update_hook
            update_hook(default)

    def define_int_state(
        self,
        name: str,
        default: int,
        help: str,
        update_hook: Optional[Callable[[int], None]] = None,
    ) -> None:
        """
        Define an integer option whose default can be overridden by the
        environment variable `name.upper()`.
        """
        self.add_option(
            name,
            int_env(name.upper(), default),
            help,
            update_hook=update_hook,
        )

    def config_with_absl(self) -> None:
        from absl import flags as absl_flags

        self.use_absl = True
        self.absl_flags = absl_flags
        for name, val in self.values.items():
            if name not in absl_flags.FLAGS:
                absl_flags.DEFINE_integer(name, val, self.meta[name])

    def complete_absl_config(self, absl_flags) -> None:
        for name in self.values:
            self.update(name, getattr(absl_flags.FLAGS, name))


class PackCritSState:
    def __init__(self):
        self.node_budget = 10**8
        self.time_budget = 0
        self.canon_limit = 10
        self.brute_force_limit = 8
        self.enumeration_limit = 8
        self.already_configured_with_absl = False


class PackCritSConfig(Config):
    def __init__(self):
        super(PackCritSConfig, self).__init__()
        self.state = PackCritSState()

    def parse_flags_with_absl(self) -> None:
        if self.state.already_configured_with_absl is False:
            # Only the --packcrits... flags before the first "--" belong to us.
            argv = itertools.takewhile(lambda a: a != "--", sys.argv)
            argv = ["", *(a for a in argv if a.startswith("--packcrits"))]

            import absl.flags

            self.config_with_absl()
            absl.flags.FLAGS(argv, known_only=True)
            self.complete_absl_config(absl.flags)
            self.state.already_configured_with_absl = True


config = PackCritSConfig()


def _update_node_budget(val):
    config.state.node_budget = val


config.define_int_state(
    name="packcrits_node_budget",
    default=10**8,
    help="Maximum number of search nodes explored per solver call.",
    update_hook=_update_node_budget,
)


def _update_time_budget(val):
    config.state.time_budget = val


config.define_int_state(
    name="packcrits_time_budget",
    default=0,
    help="Wall-clock seconds per solver call (0 disables the limit).",
    update_hook=_update_time_budget,
)


def _update_canon_limit(val):
    config.state.canon_limit = val


config.define_int_state(
    name="packcrits_canon_limit",
    default=10,
    help="Largest graph order accepted by canonical_form.",
    update_hook=_update_canon_limit,
)


def _update_brute_force_limit(val):
    config.state.brute_force_limit = val


config.define_int_state(
    name="packcrits_brute_force_limit",
    default=8,
    help="Largest graph order accepted by the brute-force oracle.",
    update_hook=_update_brute_force_limit,
)


def _update_enumeration_limit(val):
    config.state.enumeration_limit = val


config.define_int_state(
    name="packcrits_enumeration_limit",
    default=8,
    help="Largest order produced by the internal graph enumerator.",
    update_hook=_update_enumeration_limit,
)
