"""CSV and JSON outputs of simulation runs.

CSV files use '.' decimals, '\\n' line endings, a header row and 17 significant
digits so that reading them back reproduces every float exactly.
"""

import logging
import math
from collections.abc import Mapping
from dataclasses import asdict
from dataclasses import is_dataclass
from pathlib import Path

import numpy as np
import pandas as pd
from django.conf import settings
from rest_framework.renderers import JSONRenderer

from apps.utils.paths import ensure_parent

from .exceptions import OutputPathError

logger = logging.getLogger(__name__)

CSV_OPTIONS = {"index": False, "float_format": "%.17g", "lineterminator": "\n"}


def _unwritable(path, exc):
    msg = "Cannot write output file"
    return OutputPathError(msg, path=str(path), reason=exc.strerror or str(exc))


def write_csv(rows, path, columns=None, footer=None):
    """Write ``rows`` (tuples or mappings) with a header and an optional footer."""
    frame = pd.DataFrame.from_records(list(rows), columns=columns)
    path = Path(path)
    try:
        ensure_parent(path)
        frame.to_csv(path, **CSV_OPTIONS)
        if footer is not None:
            with path.open("a", encoding="utf-8", newline="\n") as handle:
                handle.write(f"# {footer}\n")
    except OSError as exc:
        raise _unwritable(path, exc) from exc
    logger.info("Wrote %d rows to %s", len(frame), path)
    return path


def read_csv(path):
    """Read a CSV written by ``write_csv``, skipping footer comments."""
    return pd.read_csv(path, comment="#", float_precision="round_trip")


def json_ready(value):
    """Plain JSON types with non-finite floats turned into null."""
    if is_dataclass(value) and not isinstance(value, type):
        value = asdict(value)
    if isinstance(value, Mapping):
        return {str(key): json_ready(item) for key, item in value.items()}
    if isinstance(value, list | tuple | np.ndarray):
        return [json_ready(item) for item in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, Path):
        return str(value)
    return value


def write_json(summary, path):
    """Write ``summary`` with the physical-units annotation block."""
    data = json_ready({**summary, "physical_units": settings.PHYSICAL_UNITS})
    content = JSONRenderer().render(data, renderer_context={"indent": 2})
    path = Path(path)
    try:
        ensure_parent(path)
        path.write_bytes(content + b"\n")
    except OSError as exc:
        raise _unwritable(path, exc) from exc
    logger.info("Wrote summary to %s", path)
    return path
