"""Shared helpers for the golden-value generators.

Each generator script builds a dict of reference values at 40-digit working
precision, rounds them to the nearest double, and either writes the golden
JSON file (default) or re-derives everything and compares against the
committed file (--check).  Exit code 77 means the precision library is not
installed; the test harness treats that as a skip.
"""

import argparse
import json
import math
import sys
from pathlib import Path


def require_mpmath():
    try:
        import mpmath  # noqa: F401
    except ImportError:
        print("mpmath not available; skipping", file=sys.stderr)
        sys.exit(77)
    import mpmath as mp

    mp.mp.dps = 40
    return mp


def _compare(path, expected, actual, failures):
    if isinstance(expected, dict):
        if sorted(expected) != sorted(actual):
            failures.append(f"{path}: key sets differ")
            return
        for k in expected:
            _compare(f"{path}.{k}", expected[k], actual[k], failures)
    elif isinstance(expected, list):
        if len(expected) != len(actual):
            failures.append(f"{path}: length {len(actual)} != {len(expected)}")
            return
        for i, (e, a) in enumerate(zip(expected, actual)):
            _compare(f"{path}[{i}]", e, a, failures)
    elif isinstance(expected, float):
        scale = max(abs(expected), abs(actual), 1e-300)
        if abs(expected - actual) / scale > 1e-13:
            failures.append(f"{path}: {actual!r} != {expected!r}")
    elif expected != actual:
        failures.append(f"{path}: {actual!r} != {expected!r}")


def run(build_fn, default_output):
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", action="store_true",
                        help="recompute and compare against the committed file")
    parser.add_argument("--output", type=Path,
                        default=Path(__file__).resolve().parent.parent / "golden" / default_output)
    args = parser.parse_args()

    data = build_fn()

    if args.check:
        committed = json.loads(args.output.read_text())
        failures = []
        _compare("$", committed, data, failures)
        if failures:
            for f in failures:
                print("MISMATCH", f, file=sys.stderr)
            sys.exit(1)
        print(f"{args.output.name}: {count_leaves(data)} values regenerate exactly")
        return

    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {args.output}")


def count_leaves(node):
    if isinstance(node, dict):
        return sum(count_leaves(v) for v in node.values())
    if isinstance(node, list):
        return sum(count_leaves(v) for v in node)
    return 1


def as_double(v):
    f = float(v)
    if not math.isfinite(f):
        raise ValueError(f"non-finite golden value {v}")
    return f
