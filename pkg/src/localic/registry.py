"""Registry of all theorem checks, keyed by stable id.

The ids and scopes are mirrored in ``check_manifest.json`` next to this
module; a meta-test keeps the two in sync so a check can't silently drop
out of the suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .remoteness import CONTEXT_CHECKS, FRAME_CHECKS
from .diagrams import CHAIN_CHECKS, SQUARE_CHECKS, TRIANGLE_CHECKS

SCOPES = ("frame", "context", "square", "chain", "triangle")


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    scope: str
    runner: Callable

    def __post_init__(self):
        if self.scope not in SCOPES:
            raise ValueError(f"unknown scope {self.scope!r}")


def _build_registry() -> dict[str, TheoremCheck]:
    reg: dict[str, TheoremCheck] = {}
    for scope, table in (("frame", FRAME_CHECKS),
                         ("context", CONTEXT_CHECKS),
                         ("square", SQUARE_CHECKS),
                         ("chain", CHAIN_CHECKS),
                         ("triangle", TRIANGLE_CHECKS)):
        for check_id, fn in table.items():
            if check_id in reg:
                raise ValueError(f"duplicate check id {check_id}")
            reg[check_id] = TheoremCheck(check_id, scope, fn)
    return reg


REGISTRY: dict[str, TheoremCheck] = _build_registry()


def load_manifest() -> list[dict]:
    text = resources.files("localic").joinpath(
        "check_manifest.json").read_text()
    return json.loads(text)["checks"]


def checks_in_scope(scope: str) -> list[TheoremCheck]:
    return sorted((c for c in REGISTRY.values() if c.scope == scope),
                  key=lambda c: c.id)
