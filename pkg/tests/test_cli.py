import io
import json

import pytest

from arasonlab import __version__
from arasonlab import cli
from arasonlab.cli import EXIT_FAILURES, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, decode_argument, run
from arasonlab.exceptions import PreconditionError, TheoremViolation, UsageError
from arasonlab.services.lab import CHECKS, LawCheck


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class AlwaysFails(LawCheck):
    name = "always_fails"

    def generate(self, gen):
        return {"delta": None, "forms": {}, "scalars": {"x": gen.entry()}}

    def verify(self, instance):
        raise TheoremViolation("always", {})


class BadGenerator(LawCheck):
    name = "bad_generator"

    def generate(self, gen):
        raise PreconditionError("generated scalar too large", invariant="entry height")

    def verify(self, instance):
        return None


class TestDecodeArgument:

    def test_json(self):
        assert decode_argument('{"diag": [1, -3]}', 1) == {"diag": [1, -3]}
        assert decode_argument("-7", 1) == -7

    def test_bare_tokens(self):
        assert decode_argument("3/4", 1) == "3/4"
        assert decode_argument("real", 1) == "real"

    def test_file(self, tmp_path):
        path = tmp_path / "form.json"
        path.write_text('{"delta": -1, "diag": [1, 2]}', encoding="utf-8")
        assert decode_argument(str(path), 1) == {"delta": -1, "diag": [1, 2]}

    def test_malformed(self):
        with pytest.raises(UsageError) as info:
            decode_argument("[1, 2", 2)
        assert str(info.value).startswith("malformed JSON in argument 2:")


class TestOperations:

    def test_profile(self):
        code, out, _ = invoke("qform", "profile", "[1, -3, 5]")
        assert code == EXIT_OK
        assert json.loads(out) == {"profile": {"dim": 3, "disc": 15, "hasse": [3, 5], "signature": 1}}

    def test_hilbert_with_bare_place(self):
        code, out, _ = invoke("brauer", "hilbert", "-1", "-1", "real")
        assert code == EXIT_OK
        assert json.loads(out) == {"hilbert": -1}

    def test_relative_invariant(self):
        code, out, _ = invoke("unitary", "rel-e3",
                              '{"delta": -1, "degree": 4, "diag": [1, 1, 1, 1]}',
                              '{"delta": -1, "degree": 4, "diag": [1, 1, -1, -1]}')
        assert code == EXIT_OK
        result = json.loads(out)
        assert result["value"] == 1
        assert result["space"]["modulus"] == "zero"

    def test_classify(self):
        code, out, _ = invoke("unitary", "classify",
                              '{"delta": -1, "diag": [1, 1]}', '{"delta": -1, "diag": [1, 2]}')
        assert code == EXIT_OK
        assert json.loads(out) == {"degree": 2, "isomorphic": True}

    def test_json_file_argument(self, tmp_path):
        path = tmp_path / "h.json"
        path.write_text('{"delta": -1, "diag": [1, 1]}', encoding="utf-8")
        code, out, _ = invoke("herm", "trace", str(path))
        assert code == EXIT_OK
        assert json.loads(out) == {"trace_form": {"diag": [1, 1, 1, 1]}}

    def test_text_format(self):
        code, out, _ = invoke("--format", "text", "qform", "isotropic", "[1, 1, 1]")
        assert code == EXIT_OK
        assert out.splitlines() == ["isotropic: false", "places.2: false", "places.real: false"]

    def test_timing(self):
        code, out, _ = invoke("--timing", "brauer", "norm", "2", "-1")
        assert code == EXIT_OK
        result = json.loads(out)
        assert result["norm"] is True
        assert "duration_s" in result

    def test_version(self):
        code, out, _ = invoke("version")
        assert code == EXIT_OK
        assert json.loads(out) == {"version": __version__}


class TestErrors:

    def test_precondition(self):
        code, out, err = invoke("unitary", "rel-e3",
                                '{"delta": -1, "diag": [1, 1, 1, 1]}', '{"delta": -1, "diag": [1, 1, 1, 3]}')
        assert code == EXIT_PRECONDITION
        assert json.loads(out)["invariant"] == "discriminant algebras differ"
        assert err.strip() == "precondition violated: discriminant algebras differ"

    def test_malformed_json(self):
        code, out, err = invoke("qform", "profile", "[1, -3,")
        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("usage error: malformed JSON in argument 1")

    def test_wrong_arity(self):
        code, _, err = invoke("qform", "isometric", "[1]")
        assert code == EXIT_USAGE
        assert "qform isometric FORM FORM" in err

    @pytest.mark.parametrize("argv", [
        ("qform", "no-such-op", "[1]"),
        ("nothing",),
        (),
    ])
    def test_bad_command_line(self, argv):
        assert invoke(*argv)[0] == EXIT_USAGE

    def test_malformed_form(self):
        assert invoke("qform", "profile", '{"entries": [1]}')[0] == EXIT_USAGE

    def test_internal_violation(self, monkeypatch):
        def broken(group, name, args):
            raise TheoremViolation("two paths disagree", {"where": "test"})

        monkeypatch.setattr(cli, "execute", broken)
        code, out, _ = invoke("qform", "e3", "[1]")
        assert code == EXIT_FAILURES
        assert json.loads(out)["details"] == {"where": "test"}


class TestCheckCommand:

    def test_passing_check(self):
        code, out, _ = invoke("check", "reciprocity", "--trials", "3", "--seed", "11", "--no-failure-log")
        assert code == EXIT_OK
        result = json.loads(out)
        assert result["status"] == "success"
        assert result["config"]["seed"] == 11
        assert result["stats"]["trials_run"] == 3

    def test_failing_check(self, monkeypatch):
        monkeypatch.setitem(CHECKS, AlwaysFails.name, AlwaysFails())
        code, out, _ = invoke("check", "always_fails", "--trials", "2", "--no-failure-log")
        assert code == EXIT_FAILURES
        assert json.loads(out)["status"] == "failed"

    def test_generation_precondition_is_a_failed_trial(self, monkeypatch):
        monkeypatch.setitem(CHECKS, BadGenerator.name, BadGenerator())
        code, out, _ = invoke("check", "bad_generator", "--trials", "2", "--no-failure-log")
        assert code == EXIT_FAILURES
        report = json.loads(out)["results"][0]
        assert [f["kind"] for f in report["failures"]] == ["generation", "generation"]

    def test_precondition_during_a_run(self, monkeypatch):
        def refuse(self, names):
            raise PreconditionError("reports directory unusable", invariant="writable reports dir")

        monkeypatch.setattr(cli.CheckRunner, "run", refuse)
        code, out, err = invoke("check", "reciprocity", "--trials", "1")
        assert code == EXIT_PRECONDITION
        assert json.loads(out)["invariant"] == "writable reports dir"
        assert "precondition violated" in err

    def test_exhaustive(self):
        code, out, _ = invoke("check", "hm_bruteforce", "--exhaustive", "--height", "6", "--no-failure-log")
        assert code == EXIT_OK
        report = json.loads(out)["results"][0]
        assert report["trials"] == report["trials_run"] > 0

    def test_replay(self):
        instance = '{"delta": null, "forms": {"q": [1, 1, 1]}, "scalars": {}}'
        code, out, _ = invoke("check", "replay", "hm_bruteforce", instance)
        assert code == EXIT_OK
        assert json.loads(out)["outcome"] == "anisotropic"

    @pytest.mark.parametrize("argv", [
        ("check", "no_such_law", "--trials", "1"),
        ("check", "reciprocity", "--delta-pool", "4"),
        ("check", "reciprocity", "--trials", "0"),
        ("check", "replay", "reciprocity"),
        ("check", "reciprocity", "--exhaustive"),
    ])
    def test_usage_errors(self, argv):
        assert invoke(*argv)[0] == EXIT_USAGE
