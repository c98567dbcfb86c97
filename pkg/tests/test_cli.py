import io
import json
import math

import numpy as np
import pytest

from frameduals import Frame, WeightSequence, named_example, random_frame
from frameduals.cli import run_command
from frameduals.errors import InvalidProbabilities, ParseError
from frameduals.frameio import format_frame, load_frame_file, parse_frame_text, save_frame_file


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_round_trip_is_bit_exact(tmp_path):
    for k in range(20):
        F = random_frame(3, 5, k)
        q = WeightSequence.relaxed(np.random.default_rng(k).uniform(0.1, 9, 5))
        path = tmp_path / f"f{k}.frame"
        save_frame_file(path, F, q)
        G, w, p = load_frame_file(path)
        assert G.synthesis.tobytes() == F.synthesis.tobytes()
        assert np.array_equal(w.q, q.q) and p is None


def test_bundled_files_match_named_examples():
    for name in ("example_4", "example_5"):
        code, out, _ = run("examples", "--name", name)
        assert code == 0
        F, q, p = parse_frame_text(out)
        G, w = named_example(name)
        assert F == G and np.array_equal(q.q, w.q)
        assert np.allclose(1 - (3 - 1) / (2 * q.q), p.p)


def test_parse_errors():
    with pytest.raises(ParseError, match="line 3, column 3"):
        parse_frame_text("frame 1 2\n1 0\n1 x\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_frame_text("frame two 3\n")
    with pytest.raises(ParseError, match="non-finite"):
        parse_frame_text("frame 1 1\ninf 0\n")
    with pytest.raises(ParseError, match="expected 2 numbers"):
        parse_frame_text("frame 1 1\n1 0 0\n")
    with pytest.raises(InvalidProbabilities, match="probabilities must sum to 1"):
        parse_frame_text("frame 1 2\n1 0\n1 0\nprobs 0.5 0.4\n")


def test_comments_and_rationals():
    F, q, p = parse_frame_text("# c\nframe 1 2  # header\n1/3 0\n2 -0.5\n")
    assert F.synthesis[0, 0] == 1 / 3 and F.synthesis[0, 1] == 2 - 0.5j


def test_analyze_example_5():
    code, out, _ = run("analyze", "--frame", "example_5.frame", "--lambda", "0,1")
    assert code == 0
    assert "1.49071" in out and "1.33333" in out
    code, out, _ = run("analyze", "--frame", "example_5", "--lambda", "0,1", "--json")
    data = json.loads(out)
    vals = [m["value"] for m in data["measures"]]
    assert vals[0] == pytest.approx(2 * math.sqrt(5) / 3, abs=1e-15)
    assert vals[1] == pytest.approx(4 / 3, abs=1e-15)


def test_optimize_example_4():
    code, out, _ = run("optimize", "--frame", "example_4.frame", "--lambda", "0.5", "--json")
    assert code == 0
    run_ = json.loads(out)["runs"][0]
    assert run_["result"]["best_value"] == pytest.approx(1, abs=1e-12)
    assert run_["canonical_optimal"] and not run_["flags"]
    code, out, _ = run("optimize", "--frame", "example_4.frame", "--lambda", "0.5")
    assert "best_value: 1" in out and "distance_to_canonical: 0" in out


def test_construct(tmp_path):
    code, out, _ = run("construct", "--weights", "1.5,1.5,1.5", "--dim", "2", "--out", str(tmp_path / "c.frame"))
    assert code == 0 and "ok: yes" in out
    F, q, _ = load_frame_file(tmp_path / "c.frame")
    assert np.allclose(F.frame_operator(), np.eye(2), atol=1e-10)
    code, out, _ = run("construct", "--weights", "1.5,1.5,1.5", "--dim", "2", "--json")
    assert json.loads(out)["parseval_residual"] <= 1e-10


def test_verify_and_simulate():
    code, out, _ = run("verify", "--frame", "example_5", "--trials", "10")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run("simulate", "--frame", "example_5", "--trials", "20000", "--seed", "4", "--json")
    data = json.loads(out)
    assert sum(data["location_counts"]) == 20000 and data["within_bound"]


def test_examples_out(tmp_path):
    code, out, _ = run("examples", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "example_4.frame").exists() and (tmp_path / "example_5.frame").exists()


def test_exit_codes(tmp_path):
    assert run("analyze", "--frame", "missing.frame")[0] == 1
    assert run("analyze", "--frame", "example_5", "--lambda", "1.5")[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("analyze")[0] == 1
    bad = tmp_path / "bad.frame"
    bad.write_text("frame 2 1\n1 0 0 0\n")
    code, _, err = run("analyze", "--frame", str(bad), "--weights", "1")
    assert code == 1 and "error" in err
    nw = tmp_path / "nw.frame"
    save_frame_file(nw, Frame(np.eye(2)))
    code, _, err = run("analyze", "--frame", str(nw))
    assert code == 1 and "no weights" in err
    assert run("construct", "--weights", "1,1,1", "--dim", "2")[0] == 1
