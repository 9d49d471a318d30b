import pytest
from fastapi.testclient import TestClient

from squarewar.service import create_app


@pytest.fixture()
def client(paper_book):
    return TestClient(create_app(book=paper_book))


@pytest.fixture()
def bookless():
    return TestClient(create_app(book=None))


def move(client, gid, coord):
    return client.post(f"/games/{gid}/moves", json={"coord": coord})


def test_health(client, bookless):
    assert client.get("/health").json() == {"status": "ok", "book_cases": 842}
    assert bookless.get("/health").json()["book_cases"] == 0


def test_create_game(client):
    res = client.post("/games")
    assert res.status_code == 201
    state = res.json()
    assert state["history"] == ["J10"]
    assert state["to_move"] == "white"
    assert state["mode"] == "opening" and state["case"] == "pending"
    assert state["last_engine_move"] == "J10"
    assert state["size"] == 19 and len(state["board"]) == 19
    assert state["board"][9][9] == "B" and state["board"][0][0] == "."
    assert state["threats"] == {"black": [], "white": []}
    assert state["status"] == {
        "over": False,
        "winner": None,
        "winning_square": None,
        "winning_stone": None,
    }
    assert state["columns"][8] == "I" and len(state["columns"]) == 19
    assert state["frame"] is None


def test_get_matches_last_post(client):
    gid = client.post("/games").json()["id"]
    posted = move(client, gid, "Q5").json()
    assert posted["history"] == ["J10", "Q5", "I10"]
    assert posted["last_engine_move"] == "I10"
    assert posted["frame"] == "identity"
    fetched = client.get(f"/games/{gid}").json()
    assert fetched == posted


def test_scripted_case_exposed(client):
    gid = client.post("/games").json()["id"]
    move(client, gid, "Q5")
    state = move(client, gid, "C3").json()
    assert state["case"] == "out-of-W"
    assert state["mode"] == "scripted"
    assert state["threats"]["black"] == ["J11"]
    assert state["threats"]["white"] == []
    assert state["to_move"] == "white"


def test_full_game_over_http(client):
    gid = client.post("/games").json()["id"]
    state = move(client, gid, "Q5").json()
    state = move(client, gid, "C3").json()
    plies = 0
    while not state["status"]["over"]:
        assert state["threats"]["black"], "no block to play"
        state = move(client, gid, state["threats"]["black"][0]).json()
        plies += 1
        assert plies < 10
    status = state["status"]
    assert status["winner"] == "black"
    assert status["winning_stone"] == 11
    assert sorted(status["winning_square"]) == sorted(["I9", "J9", "I10", "J10"])
    assert state["to_move"] is None
    assert state["mode"] == "finished"
    assert len(state["history"]) == 11
    # any further move is refused
    res = move(client, gid, "A1")
    assert res.status_code == 409
    assert res.json()["error"] == "game_over"


def test_booked_case_over_http(client):
    gid = client.post("/games").json()["id"]
    move(client, gid, "K1")
    state = move(client, gid, "H9").json()
    assert state["case"] == "in-W"
    assert state["mode"] == "booked"
    while not state["status"]["over"]:
        state = move(client, gid, state["threats"]["black"][0]).json()
    assert state["status"]["winner"] == "black"
    assert state["status"]["winning_stone"] <= 15


def test_move_errors(client):
    gid = client.post("/games").json()["id"]
    res = move(client, gid, "J10")
    assert res.status_code == 422 and res.json()["error"] == "occupied"
    res = move(client, gid, "A20")
    assert res.status_code == 400 and res.json()["error"] == "malformed_coordinate"
    res = move(client, gid, "not a point")
    assert res.status_code == 400 and res.json()["error"] == "malformed_coordinate"
    res = client.post(f"/games/{gid}/moves", json={"point": "A1"})
    assert res.status_code == 400 and res.json()["error"] == "malformed_body"
    res = client.post(
        f"/games/{gid}/moves",
        content=b"not json",
        headers={"content-type": "application/json"},
    )
    assert res.status_code == 400 and res.json()["error"] == "malformed_body"
    # the game is untouched by refused moves
    assert client.get(f"/games/{gid}").json()["history"] == ["J10"]


def test_unknown_game_is_404(client):
    assert client.get("/games/nope").status_code == 404
    assert move(client, "nope", "A1").status_code == 404
    assert client.delete("/games/nope").status_code == 404


def test_delete_game(client):
    gid = client.post("/games").json()["id"]
    assert client.delete(f"/games/{gid}").status_code == 204
    assert client.get(f"/games/{gid}").status_code == 404


def test_oldest_game_evicted_at_cap(paper_book):
    client = TestClient(create_app(book=paper_book, max_games=2))
    a = client.post("/games").json()["id"]
    b = client.post("/games").json()["id"]
    c = client.post("/games").json()["id"]
    assert client.get(f"/games/{a}").status_code == 404
    assert client.get(f"/games/{b}").status_code == 200
    assert client.get(f"/games/{c}").status_code == 200


def test_book_miss_is_a_server_error(bookless):
    gid = bookless.post("/games").json()["id"]
    move(bookless, gid, "Q5")
    res = move(bookless, gid, "J11")  # inside W, nothing to consult
    assert res.status_code == 500
    assert res.json()["error"] == "book_miss"
