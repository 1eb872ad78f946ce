"""CLI surface: formats, exit codes, determinism, round trips, cache."""

import json

import pytest

from pgpairs.cli import (
    GridRequest,
    decode_ints,
    main,
    run_grid,
    run_pair,
    _dump_json,
)
from pgpairs.errors import PGError


def test_run_pair_json_fields():
    text, code = run_pair(7, 7)
    assert code == 0
    rep = json.loads(text)
    assert rep["schema_version"] == 1
    assert rep["euler"] == -98
    assert rep["hodge"]["middle_hodge"] == [1, 50, 50, 1]
    assert rep["poincare_x"] == rep["poincare_y"]
    assert rep["motivic_equivalence"]["status"] == "applies"


def test_run_pair_markdown_contains_key_values():
    text, code = run_pair(8, 4, "markdown")
    assert code == 0
    assert "| P(Y) | [1, 0, 22, 0, 1] |" in text
    assert "middle Betti b_8(X) | 24" in text
    assert "| middle_betti_link | pass |" in text


def test_run_pair_csv_round_trip_keys():
    text, code = run_pair(6, 5, "csv")
    assert code == 0
    assert text.startswith("key,value\n")
    assert "pair.dim_x,3" in text
    assert "variable_betti,10" in text


def test_json_round_trip_is_lossless():
    from pgpairs.pairs import build_pair_report

    report = build_pair_report(8, 4)
    assert decode_ints(json.loads(_dump_json(report))) == report
    huge = 2**80
    payload = {"value": huge, "nested": [1, huge, -huge]}
    rendered = _dump_json(payload)
    assert f'"{huge}"' in rendered
    assert decode_ints(json.loads(rendered)) == payload


def test_exit_codes_via_main(capsys):
    assert main(["pair", "--n", "7", "--k", "7"]) == 0
    capsys.readouterr()
    assert main(["pair", "--n", "6", "--k", "7"]) == 2
    err = capsys.readouterr().err
    assert json.loads(err)["error"] == "OutOfSmoothRange"
    assert main(["pair", "--n", "4", "--k", "1"]) == 2
    capsys.readouterr()
    assert main(["eval", "Gr(2,5) == P(4) * SumEven(5)"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["eval", "Gr(2,4) == Gr(2,5)"]) == 1
    assert capsys.readouterr().out.strip() == "false"
    assert main(["eval", "(1 + L) div (1 + L*L)"]) == 1
    capsys.readouterr()
    assert main(["eval", "1 ++"]) == 2
    capsys.readouterr()
    assert main(["eval", "P(3) * P(2)"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "1 + 2*L + 3*L^2 + 3*L^3 + 2*L^4 + L^5"
    assert main(["pair", "--n", "7", "--k", "7", "--checks", "nope"]) == 2
    capsys.readouterr()
    assert main(["nonsense"]) == 2
    capsys.readouterr()


def test_grid_small_sweep_passes():
    text, code = run_grid(GridRequest(4, 6, 1, 10, ()))
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(payload["rows"])
    pairs = [(r["n"], r["k"]) for r in payload["rows"]]
    assert pairs == sorted(pairs)
    assert (6, 6) in pairs and (4, 1) not in pairs


def test_grid_empty_intersection():
    text, code = run_grid(GridRequest(4, 4, 7, 10, ()))
    assert code == 0
    payload = json.loads(text)
    assert payload["rows"] == []
    assert payload["summary"] == {"pass": 0, "fail": 0, "skip": 4}


def test_grid_check_subset_l_equivalence():
    text, code = run_grid(GridRequest(5, 9, 4, 10, ("l_equivalence",)))
    assert code == 0
    payload = json.loads(text)
    for row in payload["rows"]:
        if row["n"] % 2 == 1:
            assert row["checks"]["l_equivalence"] == "pass"


def test_grid_unknown_check_rejected():
    with pytest.raises(PGError):
        run_grid(GridRequest(4, 5, 1, 2, ("bogus",)))


def test_grid_deterministic_across_parallelism():
    serial, code1 = run_grid(GridRequest(4, 7, 1, 10, ()))
    threaded, code2 = run_grid(GridRequest(4, 7, 1, 10, (), parallelism=4))
    assert serial == threaded
    assert code1 == code2 == 0


def test_grid_markdown_and_csv_render():
    text, _ = run_grid(GridRequest(4, 6, 2, 6, (), output_format="markdown"))
    assert "| n | k | status |" in text
    text, _ = run_grid(GridRequest(4, 6, 2, 6, (), output_format="csv"))
    assert text.splitlines()[0].startswith("n,k,status")


def test_grid_cache_warm_equals_cold(tmp_path):
    cache_dir = str(tmp_path / "tables")
    req = lambda: GridRequest(4, 6, 1, 6, (), cache_dir=cache_dir)
    cold, _ = run_grid(req())
    files = sorted(p.name for p in (tmp_path / "tables").iterdir())
    assert files and all(name.endswith(".json") for name in files)
    warm, _ = run_grid(req())
    assert cold == warm
    no_cache, _ = run_grid(GridRequest(4, 6, 1, 6, ()))
    assert no_cache == cold


def test_grid_via_main(capsys):
    code = main(
        ["grid", "--n-min", "4", "--n-max", "5", "--k-min", "1", "--k-max", "6", "--jobs", "2"]
    )
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["fail"] == 0
