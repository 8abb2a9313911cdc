import logging
import time

from arasonlab.config import _substitute_env, config, lab_defaults, limits
from arasonlab.exceptions import PreconditionError, TheoremViolation, WitnessNotFoundError
from arasonlab.utils.logger import setup_logger
from arasonlab.utils.timing import elapsed_ms, timed


class TestSettings:

    def test_env_placeholder(self, monkeypatch):
        monkeypatch.setenv("ARASONLAB_TEST_DIR", "/tmp/elsewhere")
        assert _substitute_env({"a": ["${ARASONLAB_TEST_DIR}", 3]}) == {"a": ["/tmp/elsewhere", 3]}

    def test_env_fallback(self, monkeypatch):
        monkeypatch.delenv("ARASONLAB_REPORTS_DIR", raising=False)
        assert _substitute_env("${ARASONLAB_REPORTS_DIR}") == "reports"
        assert _substitute_env("${ARASONLAB_UNSET_FOR_TEST}") is None

    def test_plain_values_untouched(self):
        assert _substitute_env({"x": "$HOME", "y": 1}) == {"x": "$HOME", "y": 1}

    def test_lab_defaults(self):
        lab = lab_defaults()
        assert lab["seed"] == 7
        assert lab["delta_pool"] == [-1, 2, -2, 3, -3, 5, -7]
        assert lab["pfister_slot_limit"] > 0

    def test_limits(self):
        assert limits() == {"max_form_dim": 64, "max_entry_height": 10 ** 12}

    def test_base_dirs_are_absolute(self):
        assert all(path.startswith("/") for path in config["base_dirs"].values() if path)


class TestExceptions:

    def test_precondition_payload(self):
        err = PreconditionError("D(t0) and D(t) differ", invariant="discriminant algebras differ")
        assert err.to_dict() == {
            "status": "error",
            "error": "precondition",
            "invariant": "discriminant algebras differ",
            "message": "D(t0) and D(t) differ",
        }
        assert isinstance(err, ValueError)

    def test_invariant_defaults_to_message(self):
        assert PreconditionError("degree 4 required").invariant == "degree 4 required"

    def test_violation_is_an_assertion(self):
        err = TheoremViolation("mismatch")
        assert isinstance(err, AssertionError)
        assert err.details == {}
        assert WitnessNotFoundError("none", searched=3).searched == 3


class TestUtils:

    def test_timed(self):
        result = timed(lambda x: {"x": x}, 4)
        assert result["x"] == 4
        assert result["duration_s"] >= 0

    def test_timed_passes_non_dicts_through(self):
        assert timed(lambda: 5) == 5

    def test_elapsed_ms(self):
        start = time.perf_counter()
        assert elapsed_ms(start) >= 0

    def test_setup_logger(self):
        logger = setup_logger("arasonlab.test")
        assert logger.level == logging.DEBUG
        assert any(isinstance(h, logging.FileHandler) for h in logging.getLogger().handlers)
