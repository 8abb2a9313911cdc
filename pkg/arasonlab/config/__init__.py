import yaml
from pathlib import Path
import os
import re
from functools import lru_cache
import logging

_ENV_PATTERN = re.compile(r"^\$\{([A-Z0-9_]+)\}$")

# Values used when an environment placeholder is referenced but not set.
_ENV_FALLBACKS = {
    "ARASONLAB_REPORTS_DIR": "reports",
}


def _substitute_env(node):
    """Replace ``${VAR}`` string values with the environment value (recursively)."""
    if isinstance(node, dict):
        return {key: _substitute_env(value) for key, value in node.items()}
    if isinstance(node, list):
        return [_substitute_env(value) for value in node]
    if isinstance(node, str):
        match = _ENV_PATTERN.match(node.strip())
        if match:
            var = match.group(1)
            value = os.getenv(var)
            if value:
                return value
            fallback = _ENV_FALLBACKS.get(var)
            if fallback is None:
                logging.warning(f"{var} environment variable is referenced in settings.yaml but not set.")
            return fallback
    return node


def load_config():
    """Load configuration from settings.yaml located in the package directory."""
    try:
        package_config_dir = Path(__file__).parent
        package_dir = package_config_dir.parent
        project_root = package_dir.parent

        settings_path = package_dir / 'settings.yaml'

        if not settings_path.exists():
            logging.error(f"Critical: settings.yaml not found at expected path: {settings_path}")
            raise FileNotFoundError(f"settings.yaml not found at {settings_path}")

        with open(settings_path) as f:
            config_data = yaml.safe_load(f)

        if not config_data:
            config_data = {}
            logging.warning(f"settings.yaml at {settings_path} is empty or invalid.")

        config_data = _substitute_env(config_data)

        # Ensure base_dirs paths are absolute, resolved from project_root
        resolved_base_dirs = {}
        if 'base_dirs' in config_data:
            for key, path_str in config_data['base_dirs'].items():
                if isinstance(path_str, str) and not os.path.isabs(path_str):
                    resolved_base_dirs[key] = str((project_root / path_str).resolve())
                else:
                    resolved_base_dirs[key] = path_str
            config_data['base_dirs'] = resolved_base_dirs
        else:
            logging.info("'base_dirs' not found in settings.yaml.")
            config_data['base_dirs'] = {}

        return config_data

    except FileNotFoundError as fnfe:
        logging.error(f"Configuration Error: {fnfe}", exc_info=True)
        raise
    except Exception as e:
        logging.error(f"Error loading configuration from {settings_path if 'settings_path' in locals() else 'unknown path'}: {e}", exc_info=True)
        raise Exception(f"Failed to load application configuration: {e}") from e


def lab_defaults() -> dict:
    """The ``lab`` section with hard defaults filled in."""
    lab = dict(config.get('lab', {}) or {})
    lab.setdefault('seed', 7)
    lab.setdefault('trials', 100)
    lab.setdefault('height_bound', 30)
    lab.setdefault('delta_pool', [-1, 2, -2, 3, -3, 5, -7])
    lab.setdefault('aux_prime_limit', 400)
    lab.setdefault('pfister_slot_limit', 4096)
    return lab


@lru_cache(maxsize=1)
def limits() -> dict:
    lim = dict(config.get('limits', {}) or {})
    lim.setdefault('max_form_dim', 64)
    lim.setdefault('max_entry_height', 10 ** 12)
    return lim


# Load config at import time
try:
    config = load_config()
except Exception as e:
    logging.critical(f"CRITICAL FAILURE: Could not load application settings. Error: {e}", exc_info=True)
    raise SystemExit(f"Application cannot start due to configuration load failure: {e}")
