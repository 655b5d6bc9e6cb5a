"""Built-in task suite: fourteen tasks spanning six categories."""

from __future__ import annotations

from ..registry import TaskRegistry
from . import algebra, algorithmic, arithmetic, cognition, games, logic

ALL_SPECS = (
    *arithmetic.SPECS,
    *algebra.SPECS,
    *cognition.SPECS,
    *algorithmic.SPECS,
    *games.SPECS,
    *logic.SPECS,
)


def build_registry() -> TaskRegistry:
    registry = TaskRegistry()
    for spec in ALL_SPECS:
        registry.register(spec)
    return registry
