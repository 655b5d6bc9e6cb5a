"""Difficulty curricula: ordered parameter levels and percentile resolution.

A curriculum maps each generator parameter to an ordered list of levels,
easiest first. A percentile in [0, 100] picks, for each parameter with L
levels, level index round_half_up(percentile / 100 * (L - 1)). Each
parameter also carries a default level index used when no difficulty is
requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import DifficultyError


@dataclass(frozen=True)
class CurriculumParam:
    """One difficulty knob: named, with >= 2 ordered levels."""

    name: str
    levels: tuple[Any, ...]
    default_index: int = 0

    def __post_init__(self) -> None:
        if len(self.levels) < 2:
            raise DifficultyError(
                f"param {self.name!r} needs >= 2 levels, got {len(self.levels)}"
            )
        if not 0 <= self.default_index < len(self.levels):
            raise DifficultyError(
                f"param {self.name!r}: default index {self.default_index} out of range"
            )


@dataclass(frozen=True)
class Curriculum:
    params: tuple[CurriculumParam, ...]

    def __post_init__(self) -> None:
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise DifficultyError(f"duplicate param names in curriculum: {names}")

    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def defaults(self) -> dict[str, Any]:
        return {p.name: p.levels[p.default_index] for p in self.params}

    def level_index_for_percentile(self, param: CurriculumParam, percentile: float) -> int:
        if not 0 <= percentile <= 100:
            raise DifficultyError(f"percentile {percentile} outside [0, 100]")
        # Fraction arithmetic keeps x.5 cases exact so half-up rounding is
        # bit-stable (Python's round() would round half to even).
        x = Fraction(percentile) * (len(param.levels) - 1) / 100
        idx = int(x + Fraction(1, 2))  # floor(x + 1/2) for x >= 0
        return idx

    def resolve_percentile(self, percentile: float) -> dict[str, Any]:
        """Level values for every param at the given percentile."""
        return {
            p.name: p.levels[self.level_index_for_percentile(p, percentile)]
            for p in self.params
        }

    def resolve_overrides(self, overrides: Mapping[str, int]) -> dict[str, Any]:
        """Level values with explicit per-param level indices; missing params
        fall back to their defaults."""
        by_name = {p.name: p for p in self.params}
        unknown = set(overrides) - set(by_name)
        if unknown:
            raise DifficultyError(f"unknown curriculum params: {sorted(unknown)}")
        out: dict[str, Any] = {}
        for name, param in by_name.items():
            if name in overrides:
                idx = overrides[name]
                if not 0 <= idx < len(param.levels):
                    raise DifficultyError(
                        f"param {name!r}: level index {idx} out of range 0..{len(param.levels) - 1}"
                    )
                out[name] = param.levels[idx]
            else:
                out[name] = param.levels[param.default_index]
        return out

    def resolve(self, difficulty: float | Mapping[str, int] | None) -> dict[str, Any]:
        """Dispatch on the three accepted difficulty shapes."""
        if difficulty is None:
            return self.defaults()
        if isinstance(difficulty, Mapping):
            return self.resolve_overrides(difficulty)
        if isinstance(difficulty, bool) or not isinstance(difficulty, (int, float)):
            raise DifficultyError(f"unsupported difficulty spec: {difficulty!r}")
        return self.resolve_percentile(difficulty)
