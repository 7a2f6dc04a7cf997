"""The default verification grid and grid-file loading."""

from __future__ import annotations

import json
from itertools import product
from pathlib import Path

from .struve import StruveParams

__all__ = ["default_grid", "default_shapes", "load_grid"]

DEFAULT_Q = (1, 2, 3)
DEFAULT_P = (-0.5, 0.5, 2.0)
DEFAULT_B = (1.0, 2.0)
DEFAULT_C = (0.5, 1.0, 2.0)
DEFAULT_DELTA = (0.5, 1.0, 2.0)


def default_grid() -> tuple[StruveParams, ...]:
    """All combinations of the default parameter values, in a fixed order."""
    return tuple(
        StruveParams(q=q, p=p, b=b, c=c, delta=d)
        for q, p, b, c, d in product(
            DEFAULT_Q, DEFAULT_P, DEFAULT_B, DEFAULT_C, DEFAULT_DELTA
        )
    )


def default_shapes() -> tuple[tuple[int, float, float, float], ...]:
    """The (q, p, b, delta) combinations of the default grid, c left free."""
    return tuple(product(DEFAULT_Q, DEFAULT_P, DEFAULT_B, DEFAULT_DELTA))


def load_grid(path: str | Path) -> tuple[StruveParams, ...]:
    """Read a JSON array of {q, p, b, c, delta} objects."""
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, list):
        raise ValueError(f"grid file {path} must hold a JSON array")
    points = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ValueError(f"grid entry {i} is not an object: {entry!r}")
        try:
            points.append(
                StruveParams(
                    q=int(entry["q"]),
                    p=float(entry["p"]),
                    b=float(entry["b"]),
                    c=float(entry["c"]),
                    delta=float(entry["delta"]),
                )
            )
        except KeyError as exc:
            raise ValueError(f"grid entry {i} is missing key {exc}") from exc
    return tuple(points)
