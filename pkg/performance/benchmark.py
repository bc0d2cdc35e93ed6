# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

import argparse
import pickle

from time import perf_counter_ns

from PackCritS.critical import edge_bounds, is_critical
from PackCritS.families import generate
from PackCritS.sequence import parse_sequence
from PackCritS.solver import brute_force_chi, chi_s
from PackCritS.verify import VerifyOptions, verify_theorem
from PackCritS.verify.checks import _chi_result
from PackCritS.verify.enumerate import (
    _connected_graphs,
    enumerate_connected_graphs,
)


def print_line():
    print(
        "=================================================="
        "=================================================="
    )


def parse_args():
    parser = argparse.ArgumentParser(
        description="Benchmark major functions of PackCritS"
    )
    parser.add_argument(
        "-o",
        "--out-file",
        type=str,
        default=None,
        help="pickle archive file for results.",
    )
    parser.add_argument(
        "-i",
        "--iterations",
        type=int,
        default=1,
        help="number of timing iterations to run.",
    )
    parser.add_argument(
        "-n",
        "--nmax",
        type=int,
        default=7,
        help="largest order to enumerate.",
    )
    parser.add_argument(
        "-c",
        "--check",
        action="append",
        default=None,
        help="check id to time; may be repeated.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=False,
        help="if set, print verbose messages.",
    )
    return parser.parse_args()


def main():
    args = parse_args()
    if args.check is None:
        args.check = ["manycases.i", "edgebound.ii", "construction.doubling"]

    pipeline = BenchmarkPipeline(args)

    pipeline()
    pipeline.serialize()


def count_connected_graphs(n):
    _connected_graphs.cache_clear()
    return sum(1 for _ in enumerate_connected_graphs(n))


def run_check(id, options):
    _chi_result.cache_clear()
    return verify_theorem(id, options).verdict.name


class BenchmarkPipeline:
    def __init__(self, params):
        self._params = params
        self.values = dict()
        self.timings = dict()
        self._options = VerifyOptions(n_max=min(params.nmax, 6))
        self.chi_fn = benchmark_fn(chi_s, self._params)
        self.brute_fn = benchmark_fn(brute_force_chi, self._params)
        self.critical_fn = benchmark_fn(is_critical, self._params)
        self.bounds_fn = benchmark_fn(edge_bounds, self._params)
        self.enumerate_fn = benchmark_fn(
            count_connected_graphs, self._params
        )
        self.check_fn = benchmark_fn(run_check, self._params)

    def profile(self, name, value_timing):
        value, timing = value_timing
        self.values[name] = value
        self.timings[name] = timing
        if self._params.verbose is True:
            print(f"{name} : {value} in {self.timings[name]}s")
        return value

    def __call__(self):
        print(f"Begin pipeline for {self._params.iterations} iterations")
        print_line()
        # solver profiling
        self.profile(
            "chi P14 (2,3,11)",
            self.chi_fn(generate("path:14"), parse_sequence("2,3,11,const")),
        )
        self.profile(
            "chi C11 (1,2,2,2)",
            self.chi_fn(
                generate("cycle:11"), parse_sequence("1,2,2,2,const")
            ),
        )
        self.profile(
            "chi K5 brute force",
            self.brute_fn(generate("complete:5"), parse_sequence("1,inc")),
        )
        # criticality profiling
        for spec, text in [
            ("star_bridge:3", "1,3,const"),
            ("clique_path:2", "2,5,const"),
            ("X:10", "1,inc"),
        ]:
            self.profile(
                f"critical {spec} ({text})",
                self.critical_fn(generate(spec), parse_sequence(text)),
            )
        self.profile(
            "edge bounds G4 (1,inc)",
            self.bounds_fn(generate("G4"), parse_sequence("1,inc")),
        )
        # enumeration profiling
        for n in range(5, self._params.nmax + 1):
            self.profile(f"enumerate n={n}", self.enumerate_fn(n))
        # verification profiling
        for id in self._params.check:
            self.profile(f"verify {id}", self.check_fn(id, self._options))
        print_line()

    def serialize(self):
        if self._params.out_file is not None:
            with open(self._params.out_file, "wb") as f:
                pickle.dump(self.timings, f)


def benchmark_fn(fn, params):
    def profiler_fn(*args, **kwargs):
        value = None
        timing = 0.0
        for _ in range(params.iterations):
            start_time = perf_counter_ns()
            value = fn(*args, **kwargs)
            end_time = perf_counter_ns()
            timing += (end_time - start_time) / 1e9
        return value, timing / params.iterations

    return profiler_fn


if __name__ == "__main__":
    main()
