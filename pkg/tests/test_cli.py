import io
import json

import jsonschema
import pytest

from pureo import schemas
from pureo.cli import EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN, main
from pureo.designs import FANO, construct_sts
from pureo.monomials import Monomial, divisor_closure, h_vector, is_pure


def run(*argv):
    buf = io.StringIO()
    code = main([str(a) for a in argv], out=buf)
    return code, buf.getvalue()


def run_json(schema, *argv):
    code, text = run(*argv, "--format", "json")
    payload = json.loads(text)
    jsonschema.validate(payload, schemas.load(schema))
    return code, payload


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return _write


class TestCheck:
    def test_macaulay_failure(self):
        code, out = run("check", "1,3,6,8,8,10")
        assert code == EXIT_OK
        assert "o_sequence: false@5" in out
        code, js = run_json("check", "check", "1,3,6,8,8,10")
        assert js["o_sequence"] is False and js["o_sequence_fails_at"] == 5

    def test_trivial(self):
        code, js = run_json("check", "check", "1")
        assert code == EXIT_OK
        assert js["o_sequence"] and js["differentiable"] and js["si_sequence"]

    def test_not_differentiable(self):
        _, js = run_json("check", "check", "1,8,16,24,36")
        assert js["o_sequence"] and js["differentiable"] is False

    def test_parse_error(self, capsys):
        code, _ = run("check", "1,3,x")
        assert code == EXIT_ERROR
        assert "error" in capsys.readouterr().err


class TestDecide:
    def test_not_pure(self):
        code, js = run_json("verdict", "decide", "1,4,10,13,13,9,3")
        assert code == EXIT_OK
        assert js["status"] == "not_pure" and js["witness"] is None

    def test_pure_with_witness(self):
        code, js = run_json("verdict", "decide", "1,4,10,13,12,9,3")
        assert code == EXIT_OK and js["status"] == "pure"
        X = divisor_closure(Monomial.parse(g) for g in js["witness"])
        assert h_vector(X) == (1, 4, 10, 13, 12, 9, 3) and is_pure(X)

    def test_chain(self):
        _, js = run_json("verdict", "decide", "1,1,1,1")
        assert [str(Monomial.parse(g)) for g in js["witness"]] == [str(Monomial.parse("y1^3"))]

    def test_unknown_exit_code(self):
        code, js = run_json("verdict", "decide", "1,4,10,13,13,9,3", "--budget", "5")
        assert code == EXIT_UNKNOWN and js["status"] == "unknown"

    def test_budget_from_env(self, monkeypatch):
        monkeypatch.setenv("PUREO_BUDGET", "5")
        code, _ = run("decide", "1,4,10,13,13,9,3")
        assert code == EXIT_UNKNOWN

    def test_witness_file(self, write):
        p = write("w.txt", "# three generators\ny1^3*y2^2*y3\ny1^3*y2*y4^2\ny1^3*y3^2*y4\n")
        code, js = run_json("verdict", "decide", "1,4,10,13,12,9,3", "--witness", p)
        assert code == EXIT_OK and js["status"] == "pure"
        code, _ = run("decide", "1,4,10,13,14,9,3", "--witness", p)
        assert code == EXIT_ERROR

    def test_bad_budget(self):
        assert run("decide", "1,2,1", "--budget", "0")[0] == EXIT_ERROR


class TestEnumerate:
    def test_type_two_socle_three(self):
        code, js = run_json("enumeration", "enumerate", "--e", 3, "--t", 2)
        assert code == EXIT_OK and js["complete"]
        assert js["sequences"] == sorted(js["sequences"])
        assert all(s[-1] == 2 and len(s) == 4 for s in js["sequences"])
        assert js["count"] == len(js["sequences"]) == 9

    def test_text_is_one_per_line(self):
        _, out = run("enumerate", "--r", 2, "--e", 2)
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        assert lines == sorted(lines) and len(lines) >= 1

    def test_incomplete_exits_unknown(self):
        code, js = run_json("enumeration", "enumerate", "--r", 3, "--e", 4, "--budget", 50)
        assert code == EXIT_UNKNOWN and not js["complete"]

    def test_interval_scan(self):
        code, js = run_json("interval_scan", "interval-scan", "--e", 6, "--t", 3, "--r", 4)
        assert code == EXIT_OK
        assert [g["missing"] for g in js["gaps"]] == [[[1, 4, 10, 13, 13, 9, 3]]]

    def test_missing_dimensions(self):
        assert run("enumerate", "--t", 2)[0] == EXIT_ERROR


class TestConstruct:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (("ci", "4+1+1"), [1, 3, 4, 4, 4, 3, 1]),
            (("truncation", "--r", 4, "--e", 4), [1, 4, 10, 20, 35]),
            (("sum", "1,4,10,20,35", "1,4,6,4,1"), [1, 8, 16, 24, 36]),
            (("nonunimodal", 2), [1, 49, 81, 79, 81]),
        ],
    )
    def test_sequences(self, argv, expected):
        code, js = run_json("construct", "construct", *argv)
        assert code == EXIT_OK and js["h"] == expected

    def test_c_e_and_partitions(self):
        assert run_json("construct", "construct", "c-e", 3)[1]["value"] == "1/30"
        js = run_json("construct", "construct", "partitions", 5, "--r", 2)[1]
        assert js["count"] == 2 and js["partitions"] == [[4, 1], [3, 2]]

    def test_nonunimodal_maxima(self):
        js = run_json("construct", "construct", "nonunimodal", 4)[1]
        assert js["local_maxima"] == 4

    def test_missing_argument(self):
        assert run("construct", "ci")[0] == EXIT_ERROR


class TestSteiner:
    def test_construct_nine(self):
        code, js = run_json("steiner", "steiner", "--construct", 9)
        assert code == EXIT_OK
        assert len(js["blocks"]) == 12 and js["steiner"]

    def test_verify_file(self, write):
        p = write("fano.txt", FANO.to_text())
        _, js = run_json("steiner", "steiner", "--verify", p)
        assert js["steiner"] and js["f"] == [1, 7, 21, 7]
        p = write("bad.txt", FANO.without((1, 2, 3)).to_text())
        _, js = run_json("steiner", "steiner", "--verify", p)
        assert not js["steiner"] and js["violation"] == [1, 2]

    def test_count_plane_brc(self):
        assert run_json("steiner", "steiner", "--count", 7)[1]["labeled_count"] == 30
        js = run_json("steiner", "steiner", "--plane", 2)[1]
        assert js["h"] == [1, 7, 21, 7]
        assert run_json("steiner", "steiner", "--brc", 6)[1]["brc"] == "fails"
        assert run_json("steiner", "steiner", "--f-vector", 3, 4, 8)[1]["f"] == [1, 8, 28, 56, 14]

    def test_impossible(self):
        assert run("steiner", "--f-vector", 2, 3, 6)[0] == EXIT_ERROR
        assert run("steiner", "--construct", 8)[0] == EXIT_ERROR


class TestComplex:
    def test_actions(self, write):
        p = write("d.txt", "4\n1 2 3\n2 3 4\n")
        assert run_json("complex", "complex", "f", p)[1] == {"f": [1, 4, 5, 2], "pure": True}
        assert run_json("complex", "complex", "h", p)[1]["h"] == [1, 1]
        assert run_json("complex", "complex", "nonfaces", p)[1]["nonfaces"] == [[1, 4]]
        assert run_json("complex", "complex", "matroid", p)[1]["matroid"] is True

    def test_non_matroid(self, write):
        p = write("d.txt", "4\n1 2\n3 4\n")
        js = run_json("complex", "complex", "matroid", p)[1]
        assert js == {"matroid": False, "witness": [1, 2, 3]}
        assert run("complex", "stanley", p)[0] == EXIT_ERROR

    def test_stanley(self, write):
        p = write("u.txt", "3\n1 2\n1 3\n2 3\n")
        code, js = run_json("complex", "complex", "stanley", p)
        assert code == EXIT_OK and js["status"] == "pure" and js["h"] == [1, 1, 1]

    def test_corpus(self):
        code, js = run_json("matroid_corpus", "complex", "matroid", "--all", 4)
        assert code == EXIT_OK
        assert js["count"] == 1 + 2 + 4 + 9
        assert all(m["verdict"] == "pure" for m in js["matroids"])


class TestWlp:
    def test_profile(self):
        code, js = run_json("profile", "wlp", "--gens", "y1^2*y2^2*y3^2")
        assert code == EXIT_OK
        assert js["h"] == [1, 3, 6, 7, 6, 3, 1] and js["wlp"] and js["slp"]

    def test_text_labels_symmetric_failure(self):
        # h = (1,3,6,6,3) and l: A_2 -> A_3 has rank 5
        gens = "y1^2*y2^2, y1^2*y3^2, y2^2*y3^2"
        code, out = run("wlp", "--gens", gens, "--max-power", 1)
        assert code == EXIT_OK
        assert "rank(2,1) = 5" in out
        assert "wlp: false (fails for the symmetric form)" in out
        js = run_json("profile", "wlp", "--gens", gens, "--max-power", 1)[1]
        assert js["wlp"] is False and js["slp"] is None

    def test_crosscheck(self):
        code, js = run_json("crosscheck", "wlp", "--crosscheck", 50, "--seed", 7)
        assert code == EXIT_OK and js["mismatches"] == [] and js["seed"] == 7

    def test_gens_file(self, write):
        p = write("g.txt", "y1*y2*y3\n")
        assert run_json("profile", "wlp", "--gens-file", p)[1]["h"] == [1, 3, 3, 1]

    def test_requires_input(self):
        assert run("wlp")[0] == EXIT_ERROR


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("decide", "1,4,10,13,13,9,3"),
            ("decide", "1,4,10,13,14,9,3"),
            ("decide", "1,4,10,13,13,9,3", "--budget", 300),
            ("enumerate", "--r", 3, "--e", 4),
            ("enumerate", "--r", 3, "--e", 4, "--budget", 2000),
            ("interval-scan", "--e", 6, "--t", 3, "--r", 4),
        ],
    )
    def test_jobs_do_not_change_bytes(self, argv):
        outs = {run(*argv, "--format", "json", "--jobs", j) for j in (1, 2, 3)}
        assert len(outs) == 1

    def test_seed_fixes_output(self):
        a = run("wlp", "--crosscheck", 30, "--seed", 3)
        assert a == run("wlp", "--crosscheck", 30, "--seed", 3)


def test_help_exits_cleanly():
    assert run("--help")[0] == EXIT_OK
    assert run("nonsense")[0] == EXIT_ERROR


def test_sts_round_trip_through_file(write):
    D = construct_sts(13)
    p = write("s.txt", D.to_text())
    _, js = run_json("steiner", "steiner", "--verify", p)
    assert js["steiner"] and len(js["blocks"]) == 26
