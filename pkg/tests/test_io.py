import json
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import games
from supermod.catalog import named
from supermod.errors import DuplicateSubset, GameInputError, UnknownLabel
from supermod.io import (
    dump_game,
    dumps_game,
    game_from_dict,
    game_to_dict,
    load_game,
    loads_game,
    parse_payoff_csv,
    parse_rational,
)


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(5) == 5
    assert parse_rational(" 2 ") == 2


@pytest.mark.parametrize("bad", ["1.5", "1e3", "1/0", "1 / 2", "", 0.5, True, None, [1]])
def test_parse_rational_rejects(bad):
    with pytest.raises(GameInputError):
        parse_rational(bad)


def test_document_shape():
    d = game_to_dict(named("measure"))
    assert d["variables"] == ["a", "b", "c", "d"]
    assert list(d["values"])[0] == "a,b,c" and d["values"]["a,b,c"] == "1/2"
    assert d["values"]["a,b,c,d"] == "1"


@pytest.mark.parametrize(
    "doc, error",
    [
        ({"variables": ["a", "b"], "values": {"": 0}}, GameInputError),
        ({"variables": ["a", "b"], "values": {"a,b": 1, "b,a": 1}}, DuplicateSubset),
        ({"variables": ["a", "b"], "values": {"a,c": 1}}, UnknownLabel),
        ({"variables": ["a", "b"], "values": {"a": 0.5}}, GameInputError),
        ({"variables": ["a", "a"], "values": {}}, GameInputError),
        ({"variables": "ab", "values": {}}, GameInputError),
        ({"values": {}}, GameInputError),
        ({"variables": ["a", "b"], "values": []}, GameInputError),
    ],
)
def test_malformed_documents(doc, error):
    with pytest.raises(error):
        game_from_dict(doc)


def test_empty_set_key_is_refused_even_when_zero():
    with pytest.raises(GameInputError):
        loads_game('{"variables": ["a", "b"], "values": {" ": 0}}')


def test_invalid_json():
    with pytest.raises(GameInputError):
        loads_game("{")


def test_file_round_trip(tmp_path):
    m = named("thirteen")
    path = tmp_path / "g.json"
    dump_game(m, path)
    assert load_game(path) == m
    with pytest.raises(GameInputError):
        load_game(tmp_path / "missing.json")


def test_shipped_data_files():
    from pathlib import Path

    data = Path(__file__).resolve().parent.parent / "data"
    for key in ("simplex", "squares", "exact-nonconvex", "thirteen", "pairs", "measure", "matroid", "loop-matroid", "split-sum"):
        assert load_game(data / f"{key}.json") == named(key)


def test_csv():
    x = parse_payoff_csv("a,b\n1/2,0\n0,1/2\n")
    assert x.vectors == ((Fraction(1, 2), 0), (0, Fraction(1, 2)))
    with pytest.raises(GameInputError):
        parse_payoff_csv("a,b\n1\n")
    with pytest.raises(GameInputError):
        parse_payoff_csv("")


@given(games(max_n=5))
def test_round_trip(m):
    text = dumps_game(m)
    assert loads_game(text) == m
    assert json.loads(text)["variables"] == list(m.labels)
