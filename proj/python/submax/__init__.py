"""Deterministic submodular maximization under a matroid constraint.

Thin wrappers over the native module: instances go in as JSON text (or
dicts), reports come back as parsed dicts.
"""

import json as _json

from submax._core import (  # noqa: F401
    bench_csv,
    brute_force_json,
    estimate_json,
    greedy_partition_json,
    solve_json,
    verify_jsonl,
)

__all__ = [
    "solve",
    "estimate",
    "verify",
    "bench",
    "brute_force_opt",
    "greedy_partition",
]


def _as_text(instance):
    if isinstance(instance, str):
        return instance
    return _json.dumps(instance)


def solve(instance, epsilon="1/2", mode="deterministic", seed=0, paranoid=False,
          with_opt=False, ff_cap=24):
    return _json.loads(
        solve_json(_as_text(instance), epsilon, mode, seed, paranoid, with_opt, ff_cap))


def estimate(instance, epsilon="1/2", with_opt=False, ff_cap=24):
    return _json.loads(estimate_json(_as_text(instance), epsilon, with_opt, ff_cap))


def verify(instance, seed=0):
    lines = verify_jsonl(_as_text(instance), seed).splitlines()
    return [_json.loads(line) for line in lines if line]


def bench(families, n_list, epsilon="1/2", trials=1):
    return bench_csv(list(families), list(n_list), epsilon, trials)


def brute_force_opt(instance):
    return _json.loads(brute_force_json(_as_text(instance)))


def greedy_partition(instance, ell=1):
    return _json.loads(greedy_partition_json(_as_text(instance), ell))
