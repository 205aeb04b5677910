"""Bundled and user-supplied benchmark networks.

Only the tiny karate club network ships with the package. Larger classic
networks are looked up in a data directory (LPAKIT_DATA environment variable,
falling back to ./data) so tests depending on them can skip cleanly when the
files are absent.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph import Graph, parse_edge_list


def karate_graph() -> Graph:
    """The 34-node karate club network bundled with the package."""
    text = resources.files("lpakit.data").joinpath("karate.edges").read_text("utf-8")
    return parse_edge_list(text)


def data_dir() -> Path:
    return Path(os.environ.get("LPAKIT_DATA", "data"))


def dataset_path(name: str) -> Path | None:
    """Path to '<name>.edges' in the data directory, or None when missing."""
    p = data_dir() / f"{name}.edges"
    return p if p.is_file() else None


def load_dataset(name: str) -> Graph:
    p = dataset_path(name)
    if p is None:
        raise FileNotFoundError(f"dataset {name!r} not found under {data_dir()}")
    with open(p, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh)
