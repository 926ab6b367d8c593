import os
from dataclasses import dataclass, replace
from pathlib import Path
import toml
from typing import Dict, Any, Optional

DEFAULT_ORDER_CAP = 20000
DEFAULT_BRUTE_BUDGET = 10**9
DEFAULT_ENUMERATION_CAP = 10**6
DEFAULT_THREADS = 1


@dataclass(frozen=True)
class Limits:
    """Desk-scale limits handed to the counting and closure routines."""

    order_cap: int = DEFAULT_ORDER_CAP
    brute_budget: int = DEFAULT_BRUTE_BUDGET
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    threads: int = DEFAULT_THREADS
    seed: Optional[int] = None  # scheduling only, never values


_ENV_KEYS = {
    "order_cap": "ORBITWIST_ORDER_CAP",
    "brute_budget": "ORBITWIST_BRUTE_BUDGET",
    "enumeration_cap": "ORBITWIST_ENUMERATION_CAP",
    "threads": "ORBITWIST_THREADS",
}


def get_config_path() -> Path:
    """Return the path to the configuration file."""
    env_path = os.environ.get("ORBITWIST_CONFIG")
    if env_path:
        return Path(env_path)
    return Path.home() / ".orbitwist" / "config.toml"


def load_config() -> Dict[str, Any]:
    """Load configuration from TOML file."""
    config_path = get_config_path()
    if not config_path.exists():
        return {}

    try:
        return toml.load(config_path)
    except Exception as e:
        raise ValueError(f"Failed to load config {config_path}: {e}")


def _positive_int(name: str, value: Any) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"Limit '{name}' must be an integer, got {value!r}")
    if number < 1:
        raise ValueError(f"Limit '{name}' must be positive, got {number}")
    return number


def get_limits(**overrides: Any) -> Limits:
    """Resolve limits: defaults, then [limits] in the config file, then
    environment variables, then explicit overrides (CLI flags)."""
    values: Dict[str, Any] = {}

    limits_config = load_config().get("limits", {})
    for key in _ENV_KEYS:
        if key in limits_config:
            values[key] = _positive_int(key, limits_config[key])

    for key, env_var in _ENV_KEYS.items():
        env_value = os.environ.get(env_var)
        if env_value:
            values[key] = _positive_int(key, env_value)

    for key, value in overrides.items():
        if value is None:
            continue
        values[key] = value if key == "seed" else _positive_int(key, value)

    return replace(Limits(), **values)
