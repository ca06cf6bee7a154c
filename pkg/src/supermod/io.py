"""File formats: game JSON, payoff-array CSV, verdict JSON and CI-model text."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .errors import GameInputError
from .gamecore import Game, VariableSet, make_game

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")

PathLike = Union[str, Path]


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise GameInputError(f"values must be integers or 'p/q' strings, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    text = text.strip()
    if not _RATIONAL.match(text):
        raise GameInputError(f"malformed rational {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise GameInputError(f"zero denominator in {text!r}") from None


def game_from_dict(data) -> Game:
    if not isinstance(data, dict) or "variables" not in data:
        raise GameInputError("a game document needs a 'variables' list and a 'values' object")
    labels = data["variables"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise GameInputError("'variables' must be a list of strings")
    ground = VariableSet(tuple(labels))
    values = data.get("values", {})
    if not isinstance(values, dict):
        raise GameInputError("'values' must be an object")
    entries = {}
    for key, val in values.items():
        if not key.strip():
            raise GameInputError("the empty set may not appear as a key")
        entries[key] = parse_rational(val)
    return make_game(ground, entries)


def game_to_dict(m: Game) -> dict:
    entries = sorted(m.nonzero().items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0]))
    return {
        "variables": list(m.labels),
        "values": {m.ground.format(s): format_rational(v) for s, v in entries},
    }


def loads_game(text: str) -> Game:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameInputError(f"invalid JSON: {exc}") from None
    return game_from_dict(data)


def dumps_game(m: Game) -> str:
    return json.dumps(game_to_dict(m), indent=2, ensure_ascii=False) + "\n"


def load_game(path: PathLike) -> Game:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GameInputError(f"cannot read {path}: {exc.strerror}") from None
    return loads_game(text)


def dump_game(m: Game, path: PathLike) -> None:
    Path(path).write_text(dumps_game(m), encoding="utf-8")


def parse_payoff_csv(text: str):
    from .coregeo import PayoffArray

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GameInputError("empty CSV")
    ground = VariableSet(tuple(s.strip() for s in lines[0].split(",")))
    rows = []
    for ln in lines[1:]:
        cells = [parse_rational(c) for c in ln.split(",")]
        if len(cells) != ground.n:
            raise GameInputError(f"row {ln!r} has {len(cells)} entries, expected {ground.n}")
        rows.append(tuple(cells))
    return PayoffArray.from_vectors(ground, rows)


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
