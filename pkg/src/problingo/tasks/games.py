"""Games tasks: Conway's Game of Life on a bounded (non-wrapping) board."""

from __future__ import annotations

from typing import Any, Mapping

from ..curriculum import Curriculum, CurriculumParam
from ..packs import LanguagePack
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng

FILL_DENSITY = 0.35


def life_step(board: list[list[int]]) -> list[list[int]]:
    """One generation; cells outside the board are permanently dead."""
    n = len(board)
    m = len(board[0])
    nxt = [[0] * m for _ in range(n)]
    for r in range(n):
        for c in range(m):
            live = 0
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    if dr == 0 and dc == 0:
                        continue
                    rr, cc = r + dr, c + dc
                    if 0 <= rr < n and 0 <= cc < m:
                        live += board[rr][cc]
            if board[r][c]:
                nxt[r][c] = 1 if live in (2, 3) else 0
            else:
                nxt[r][c] = 1 if live == 3 else 0
    return nxt


def simulate(board: list[list[int]], steps: int) -> list[list[int]]:
    for _ in range(steps):
        board = life_step(board)
    return board


def board_rows(board: list[list[int]]) -> list[str]:
    return ["".join(str(cell) for cell in row) for row in board]


def gen_game_of_life(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    n = params["size"]
    board = [[1 if rng.random() < FILL_DENSITY else 0 for _ in range(n)] for _ in range(n)]
    final = simulate(board, params["steps"])
    answer = " ".join(board_rows(final))
    return {"board": board, "steps": params["steps"]}, answer


def check_game_of_life(payload: Mapping[str, Any], candidate: Any) -> bool:
    if not isinstance(candidate, list) or not candidate:
        return False
    expected = board_rows(simulate([list(r) for r in payload["board"]], payload["steps"]))
    return list(candidate) == expected


def bind_game_of_life(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    return {"board": "\n".join(board_rows(payload["board"])), "steps": payload["steps"]}


GAME_OF_LIFE = TaskSpec(
    task_id="game_of_life",
    category=Category.GAMES,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.GRID,
    curriculum=Curriculum((
        CurriculumParam("size", (4, 6, 10), default_index=1),
        CurriculumParam("steps", (1, 2, 4), default_index=0),
    )),
    generate=gen_game_of_life,
    check=check_game_of_life,
    bind=bind_game_of_life,
    placeholders={"question": frozenset({"board", "steps"})},
    complexity_proxy=lambda p: len(p["board"]) ** 2 * p["steps"],
)

SPECS = (GAME_OF_LIFE,)
