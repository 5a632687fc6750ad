"""Test option handling."""
from unittest.mock import patch

import pytest

from schubertkit.config import get_option, get_options, load_options, set_options
from schubertkit.const import (
    CONF_DEGREE_CAP,
    CONF_JOBS,
    CONF_OUTPUT_FORMAT,
    DEFAULT_DEGREE_CAP,
    DEFAULT_JOBS,
    ENV_DEGREE_CAP,
)
from schubertkit.exceptions import InvalidOption


def test_defaults():
    """Test that defaults apply when nothing is given."""
    options = load_options()
    assert options[CONF_DEGREE_CAP] == DEFAULT_DEGREE_CAP
    assert options[CONF_JOBS] == DEFAULT_JOBS
    assert options[CONF_OUTPUT_FORMAT] == "text"


def test_environment_degree_cap():
    """Test that the degree cap is read from the environment."""
    with patch.dict("os.environ", {ENV_DEGREE_CAP: "7"}):
        assert load_options()[CONF_DEGREE_CAP] == 7


def test_override_beats_environment():
    """Test that explicit options win over the environment."""
    with patch.dict("os.environ", {ENV_DEGREE_CAP: "7"}):
        assert load_options({CONF_DEGREE_CAP: 9})[CONF_DEGREE_CAP] == 9


def test_none_overrides_are_ignored():
    """Test that None leaves the default in place."""
    assert load_options({CONF_JOBS: None})[CONF_JOBS] == DEFAULT_JOBS


@pytest.mark.parametrize(
    "overrides",
    [
        {CONF_DEGREE_CAP: 0},
        {CONF_JOBS: "many"},
        {CONF_OUTPUT_FORMAT: "xml"},
    ],
)
def test_invalid_options(overrides):
    """Test that invalid values raise InvalidOption."""
    with pytest.raises(InvalidOption):
        load_options(overrides)


def test_set_and_get():
    """Test the process-wide option set."""
    set_options({CONF_JOBS: 3, CONF_OUTPUT_FORMAT: "json"})
    assert get_option(CONF_JOBS) == 3
    assert get_options()[CONF_OUTPUT_FORMAT] == "json"


def test_get_options_returns_copy():
    """Test that callers cannot mutate the installed options."""
    get_options()[CONF_JOBS] = 99
    assert get_option(CONF_JOBS) == DEFAULT_JOBS
