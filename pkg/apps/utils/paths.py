"""Paths for Utils App."""

from pathlib import Path


def sibling_path(path, suffix):
    """Generates the path of a companion file next to a run output.

    ``results/sweep.csv`` with suffix ``.curvature.csv`` becomes
    ``results/sweep.curvature.csv``.
    """
    path = Path(path)
    return path.with_name(f"{path.stem}{suffix}")


def ensure_parent(path):
    """Creates the parent directory of an output file if needed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path
