"""Shared fixtures and brute-force oracles.

The oracles here are deliberately independent of the library's enumeration
strategy: rows are generated by explicit label walking and multisets by
combinations-with-replacement, so agreement is a real check.
"""

import os
import subprocess
import sys
from itertools import combinations_with_replacement
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("det", derandomize=True)
settings.load_profile("det")

PKG_ROOT = Path(__file__).resolve().parents[1]


def naive_row_labels(length, start, k, sign):
    """Box labels of a row, computed by stepping with explicit wraparound."""
    labels = []
    lab = start
    for _ in range(length):
        labels.append(lab)
        if sign == "+":
            lab -= 1
            if lab == 0:
                lab = k
        else:
            lab += 1
            if lab == k + 1:
                lab = 1
    return labels


def naive_diagram_counts(rows, k, sign):
    counts = [0] * k
    for length, start in rows:
        for lab in naive_row_labels(length, start, k, sign):
            counts[lab - 1] += 1
    return tuple(counts)


def brute_force_diagrams(k, sign, dims):
    """All row multisets with the given label counts, as sorted tuples of
    (length, start) pairs."""
    total = sum(dims)
    rows = [(length, start) for length in range(1, total + 1) for start in range(1, k + 1)]
    found = set()
    for nrows in range(total + 1):
        for combo in combinations_with_replacement(rows, nrows):
            if sum(length for length, _ in combo) != total:
                continue
            if naive_diagram_counts(combo, k, sign) == tuple(dims):
                found.add(tuple(sorted(combo)))
    return found


def compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, slots - 1):
            yield (first,) + rest


@pytest.fixture
def run_cli():
    def run(*argv):
        env = dict(os.environ)
        env["PYTHONPATH"] = str(PKG_ROOT / "src")
        return subprocess.run(
            [sys.executable, "-m", "gradedorbits", *argv],
            capture_output=True,
            text=True,
            env=env,
            cwd=PKG_ROOT,
        )

    return run
