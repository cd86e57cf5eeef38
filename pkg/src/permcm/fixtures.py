"""The four drawn example graphs shipped as JSON under ``permcm/data``."""

from __future__ import annotations

import json
from importlib import resources

from .graph import Graph, graph_from_dict
from .perm import Realizer

NAMES = ("fig1", "fig3", "fig4", "fig5")

# line orders printed under the drawings
FIG1_REALIZER = Realizer((4, 2, 3, 1, 5), (3, 5, 4, 1, 2))
FIG3_PI = (5, 4, 6, 1, 3, 2)
FIG4_REALIZER = Realizer((1, 3, 5, 7, 2, 4, 6, 8), (2, 1, 4, 3, 6, 5, 8, 7))


def load(name: str) -> Graph:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {NAMES}")
    text = resources.files("permcm").joinpath("data", f"{name}.json").read_text()
    return graph_from_dict(json.loads(text))
