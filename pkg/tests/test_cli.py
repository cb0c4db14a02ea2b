from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from essring import Corpus, CorpusEntry, grassmann, noninvariant, quotient_mod
from essring.cli import main
from conftest import F2


def unit_row(n, *indices):
    return [str(int(i in indices)) for i in range(n)]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def ring_file(tmp_path, ring7):
    path = tmp_path / "ring7.json"
    path.write_bytes(ring7.dumps())
    return str(path)


@pytest.fixture
def ideal_file(tmp_path):
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps({"side": "right", "generators": [unit_row(7, 2)]}))
    return str(path)


def first_json(result):
    return json.loads(result.stdout_bytes.splitlines()[0])


class TestMake:
    def test_noninvariant(self, runner, ring7):
        result = runner.invoke(main, ["make", "noninvariant", "--n", "7"])
        assert result.exit_code == 0
        assert result.stdout_bytes == ring7.dumps() + b"\n"

    def test_grassmann_to_file(self, runner, tmp_path):
        out = tmp_path / "g.json"
        result = runner.invoke(main, ["make", "grassmann", "--d", "2", "--p", "3", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_bytes() == grassmann(2, 3).dumps() + b"\n"

    def test_scalar(self, runner):
        result = runner.invoke(main, ["make", "noninvariant", "--n", "7", "--scalar", "F2"])
        assert first_json(result)["scalar"] == {"kind": "integer-mod-m", "modulus": "2"}

    @pytest.mark.parametrize(
        "args",
        [
            ["make", "grassmann", "--d", "2"],
            ["make", "noninvariant", "--n", "3"],
            ["make", "noninvariant", "--n", "7", "--scalar", "reals"],
        ],
    )
    def test_bad_parameters(self, runner, args):
        result = runner.invoke(main, args)
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_missing_parameter_names_the_field(self, runner):
        result = runner.invoke(main, ["make", "grassmann", "--d", "2"])
        assert "invalid input at p" in result.output

    def test_family_alias(self, runner, ring7):
        result = runner.invoke(main, ["make", "example24", "--n", "7"])
        assert result.exit_code == 0
        assert result.stdout_bytes == ring7.dumps() + b"\n"
        assert "example24" not in runner.invoke(main, ["make", "--help"]).output


class TestRingCommands:
    def test_validate(self, runner, ring_file):
        result = runner.invoke(main, ["validate", ring_file])
        assert result.exit_code == 0
        assert first_json(result)["passed"] is True

    def test_validate_failure(self, runner):
        document = {
            "name": "broken",
            "scalar": {"kind": "integer"},
            "rank": 2,
            "one": ["0", "1"],
            "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
        }
        result = runner.invoke(main, ["validate", "-"], input=json.dumps(document))
        assert result.exit_code == 1
        assert first_json(result)["identity_failures"]

    def test_garbage(self, runner):
        result = runner.invoke(main, ["validate", "-"], input="{")
        assert result.exit_code == 2
        assert "invalid input at <document>" in result.output

    def test_bad_field(self, runner, ring7):
        data = json.loads(ring7.dumps())
        data["table"][1][2][3] = "x"
        result = runner.invoke(main, ["center", "-"], input=json.dumps(data))
        assert result.exit_code == 2
        assert "invalid input at table[1][2][3]" in result.output

    def test_center(self, runner, ring_file):
        result = runner.invoke(main, ["center", ring_file])
        assert result.exit_code == 0
        data = first_json(result)
        assert data["rank"] == 5
        assert data["basis"][0] == unit_row(7, 0)

    def test_quotient(self, runner, ring_file, ring7):
        result = runner.invoke(main, ["quotient", ring_file, "-p", "2"])
        assert result.exit_code == 0
        assert result.stdout_bytes == quotient_mod(ring7, 2).target.dumps() + b"\n"

        result = runner.invoke(main, ["quotient", ring_file, "-p", "1"])
        assert result.exit_code == 2


class TestCheck:
    def test_centrally_essential(self, runner, ring_file):
        result = runner.invoke(main, ["check", "ce", ring_file])
        assert result.exit_code == 0
        data = first_json(result)
        assert data["verdict"] == "yes"
        assert data["method"] == "rationalized"

    def test_not_centrally_essential(self, runner, tmp_path):
        path = tmp_path / "g.json"
        path.write_bytes(grassmann(2, 3).dumps())
        result = runner.invoke(main, ["check", "ce", str(path)])
        assert result.exit_code == 1
        data = first_json(result)
        assert data["verdict"] == "no"
        assert "evidence" in data

        result = runner.invoke(main, ["check", "ce", str(path), "--backend", "family"])
        assert result.exit_code == 2


class TestIdeal:
    def test_two_sided(self, runner, ring_file, ideal_file):
        result = runner.invoke(main, ["ideal", ring_file, "--spec", ideal_file, "--two-sided"])
        assert result.exit_code == 1
        data = first_json(result)
        assert data["two_sided"] is False
        assert "witness" in data

    def test_closure(self, runner, ring_file, ideal_file):
        result = runner.invoke(main, ["ideal", ring_file, "--spec", ideal_file, "--closure"])
        assert result.exit_code == 0
        closure = first_json(result)["closure"]
        assert closure["side"] == "right"
        assert closure["generators"] == [unit_row(7, i) for i in (2, 4, 5, 6)]

    def test_complement(self, runner, ring_file, ideal_file):
        result = runner.invoke(main, ["ideal", ring_file, "--spec", ideal_file, "--complement"])
        assert result.exit_code == 0
        assert unit_row(7, 3) in first_json(result)["complement"]["generators"]

    @pytest.mark.parametrize("flag", ["--closed", "--essential"])
    def test_questions(self, runner, ring_file, ideal_file, flag):
        result = runner.invoke(main, ["ideal", ring_file, "--spec", ideal_file, flag])
        assert result.exit_code == 1
        assert first_json(result)[flag.lstrip("-")] is False

    def test_question_is_required(self, runner, ring_file, ideal_file):
        result = runner.invoke(main, ["ideal", ring_file, "--spec", ideal_file])
        assert result.exit_code == 2

    def test_bad_ideal(self, runner, ring_file, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"side": "up", "generators": []}))
        result = runner.invoke(main, ["ideal", ring_file, "--spec", str(path), "--closed"])
        assert result.exit_code == 2
        assert "invalid input at side" in result.output


class TestVerifyCorpus:
    @pytest.fixture
    def corpus_file(self, tmp_path):
        corpus = Corpus([CorpusEntry(noninvariant(7, F2), {"centrally-essential": True, "finite": True})])
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(corpus.to_dict()))
        return str(path)

    def test_report(self, runner, corpus_file, tmp_path):
        out = tmp_path / "report.json"
        args = ["--primes", "2", "verify-corpus", "--corpus", corpus_file, "--samples", "10", "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        report = json.loads(out.read_bytes())
        assert report["corpus"] == ["noninvariant[n=7,mod:2]"]
        assert report["summary"]["fail"] == 0

        again = tmp_path / "again.json"
        runner.invoke(main, args[:-1] + [str(again)])
        assert again.read_bytes() == out.read_bytes()

    def test_failing_corpus(self, runner, tmp_path):
        corpus = Corpus([CorpusEntry(noninvariant(7, F2), {"commutative": True})])
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(corpus.to_dict()))
        result = runner.invoke(main, ["verify-corpus", "--corpus", str(path), "--samples", "5"])
        assert result.exit_code == 1

    def test_hidden_alias(self, runner, corpus_file, tmp_path):
        outputs = []
        for command in ("verify-corpus", "verify-paper"):
            out = tmp_path / f"{command}.json"
            args = ["--primes", "2", command, "--corpus", corpus_file, "--samples", "10", "--out", str(out)]
            assert runner.invoke(main, args).exit_code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert "verify-paper" not in runner.invoke(main, ["--help"]).output

    def test_bad_corpus(self, runner, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps({"rings": [{"family": {"family": "noninvariant", "n": 3}}]}))
        result = runner.invoke(main, ["verify-corpus", "--corpus", str(path)])
        assert result.exit_code == 2


class TestGlobalOptions:
    def test_config_file(self, runner, tmp_path, ring_file):
        config = tmp_path / "essring.json"
        config.write_text(json.dumps({"seed": 7, "witness-trials": 3}))
        result = runner.invoke(main, ["--config", str(config), "center", ring_file])
        assert result.exit_code == 0

    def test_bad_config_file(self, runner, tmp_path, ring_file):
        config = tmp_path / "essring.json"
        config.write_text(json.dumps({"samples": -1}))
        result = runner.invoke(main, ["--config", str(config), "center", ring_file])
        assert result.exit_code == 2
        assert "samples" in result.output

    def test_bad_primes(self, runner, ring_file):
        result = runner.invoke(main, ["--primes", "2,4", "center", ring_file])
        assert result.exit_code == 2
