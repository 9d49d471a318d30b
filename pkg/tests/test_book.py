import json

import pytest

from squarewar.book import (
    BOOK_FORMAT_VERSION,
    ProofNode,
    SolveReport,
    StrategyBook,
    proof_depth,
    win_stone,
)
from squarewar.coords import Coord, parse_coord
from squarewar.errors import StructuralError


def _tiny_book() -> StrategyBook:
    leaf = ProofNode(
        black_move=parse_coord("I9"),
        threats=(parse_coord("H9"), parse_coord("J9")),
        win_at=9,
    )
    root = ProofNode(
        black_move=parse_coord("I11"),
        threats=(parse_coord("J11"),),
        replies={parse_coord("J11"): leaf},
    )
    book = StrategyBook()
    book.cases[(parse_coord("K1"), parse_coord("J11"))] = root
    return book


def test_win_stone_and_depth():
    book = _tiny_book()
    root = book.cases[(parse_coord("K1"), parse_coord("J11"))]
    assert win_stone(root) == 9
    assert proof_depth(root) == 2
    assert not root.is_win()
    assert root.replies[parse_coord("J11")].is_win()


def test_json_round_trip():
    book = _tiny_book()
    text = book.dumps()
    loaded = StrategyBook.loads(text)
    assert loaded.dumps() == text
    assert loaded.size == 19 and loaded.mode == "paper"
    assert loaded.version == BOOK_FORMAT_VERSION
    assert set(loaded.cases) == set(book.cases)


def test_file_round_trip(tmp_path):
    book = _tiny_book()
    path = tmp_path / "book.json"
    book.save(str(path))
    assert StrategyBook.load(str(path)).dumps() == book.dumps()


def test_serialized_shape():
    obj = _tiny_book().to_obj()
    assert obj["meta"] == {"n": 19, "mode": "paper", "m": 31, "version": BOOK_FORMAT_VERSION}
    (case,) = obj["cases"]
    assert case["stone2"] == "K1" and case["stone4"] == "J11"
    root = case["root"]
    assert root["black"] == "I11"
    assert root["threats"] == ["J11"]
    assert root["win_at"] is None
    assert root["replies"]["J11"]["win_at"] == 9


def test_cases_serialized_in_row_major_order(paper_book):
    obj = paper_book.to_obj()
    keys = [
        (parse_coord(c["stone2"]), parse_coord(c["stone4"])) for c in obj["cases"]
    ]

    def rm(pair):
        (s2, s4) = pair
        return (s2.row, s2.col, s4.row, s4.col)

    assert keys == sorted(keys, key=rm)
    assert len(keys) == 842


def test_structural_errors():
    with pytest.raises(StructuralError):
        StrategyBook.from_obj({"cases": []})  # missing meta
    with pytest.raises(StructuralError):
        StrategyBook.from_obj({"meta": {"n": 19, "mode": "paper", "m": 31, "version": "1"}})
    good = _tiny_book().to_obj()
    bad = json.loads(json.dumps(good))
    del bad["cases"][0]["root"]["threats"]
    with pytest.raises(StructuralError):
        StrategyBook.from_obj(bad)
    with pytest.raises(StructuralError):
        StrategyBook.loads("{not json")


def test_report_shape_and_semantics():
    rep = SolveReport(
        c_e=842,
        c_w=842,
        w_a=True,
        max_win_stone=15,
        histogram={11: 476, 15: 366},
        elapsed_ms=400,
    )
    obj = rep.to_obj()
    assert list(obj) == ["c_e", "c_w", "w_a", "max_win_stone", "histogram", "elapsed_ms"]
    assert obj["histogram"] == {"11": 476, "15": 366}
    slower = SolveReport(842, 842, True, 15, {11: 476, 15: 366}, elapsed_ms=9000)
    assert slower.semantic_key() == rep.semantic_key()
    different = SolveReport(842, 841, False, 15, {11: 476, 15: 365}, elapsed_ms=400)
    assert different.semantic_key() != rep.semantic_key()
