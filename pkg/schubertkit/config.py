"""Option handling for schubertkit."""
from __future__ import annotations

import logging
import os
import threading
from collections.abc import Mapping
from typing import Any

import voluptuous as vol

from .const import (
    CONF_DEGREE_CAP,
    CONF_JOBS,
    CONF_OUTPUT_FORMAT,
    CONF_WORD_LIMIT,
    DEFAULT_DEGREE_CAP,
    DEFAULT_JOBS,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_WORD_LIMIT,
    ENV_DEGREE_CAP,
    OUTPUT_FORMATS,
)
from .exceptions import InvalidOption

_LOGGER = logging.getLogger(__name__)

OPTIONS_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DEGREE_CAP, default=DEFAULT_DEGREE_CAP): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=64)
        ),
        vol.Optional(CONF_WORD_LIMIT, default=DEFAULT_WORD_LIMIT): vol.All(
            vol.Coerce(int), vol.Range(min=1)
        ),
        vol.Optional(CONF_JOBS, default=DEFAULT_JOBS): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=256)
        ),
        vol.Optional(CONF_OUTPUT_FORMAT, default=DEFAULT_OUTPUT_FORMAT): vol.In(
            OUTPUT_FORMATS
        ),
    }
)

_lock = threading.Lock()
_current: dict[str, Any] | None = None


def load_options(overrides: Mapping[str, Any] | None = None) -> dict[str, Any]:
    """Resolve options from overrides, the environment and defaults."""
    raw: dict[str, Any] = {}
    env_cap = os.environ.get(ENV_DEGREE_CAP)
    if env_cap:
        _LOGGER.debug("Degree cap %s taken from %s", env_cap, ENV_DEGREE_CAP)
        raw[CONF_DEGREE_CAP] = env_cap
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value
    try:
        return OPTIONS_SCHEMA(raw)
    except vol.Invalid as err:
        raise InvalidOption(f"Invalid option: {err}") from err


def set_options(overrides: Mapping[str, Any] | None = None) -> dict[str, Any]:
    """Install the process-wide option set."""
    global _current
    options = load_options(overrides)
    with _lock:
        _current = options
    _LOGGER.debug("Options installed: %s", options)
    return options


def get_options() -> dict[str, Any]:
    """Return the current options, loading defaults on first use."""
    global _current
    with _lock:
        if _current is None:
            _current = load_options()
        return dict(_current)


def get_option(key: str, default: Any = None) -> Any:
    """Return one option value."""
    return get_options().get(key, default)


def reset_options() -> None:
    """Forget installed options so the next read reloads them."""
    global _current
    with _lock:
        _current = None
