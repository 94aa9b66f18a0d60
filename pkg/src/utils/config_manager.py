"""
Configuration Overrides and Persistence
=======================================

This module manages how command-line settings are resolved and how the
effective configuration of each command is preserved next to its outputs.

Key Responsibilities:
---------------------
- Environment Overrides: every CLI flag `--foo-bar` can be preset through
  the environment variable `NETGROUPS_FOO_BAR`. Precedence is
  flag > environment > built-in default.
- Audit Trail: the effective configuration is written as sorted-key JSON
  so that two identical invocations produce byte-identical files.
- Reload: a saved configuration can be read back (e.g. to rerun a pipeline).
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from src.core.config import ENV_PREFIX
from src.utils.logger import log_config

logger = logging.getLogger(__name__)


def env_var_name(flag: str) -> str:
    """Map a long flag name ('null-samples' or '--null-samples') to its env variable."""
    return ENV_PREFIX + flag.lstrip("-").replace("-", "_").upper()


def env_default(flag: str, default: Any) -> Any:
    """
    Resolve a flag default from the environment.

    The raw string is returned when the variable is set, so argparse runs it
    through the same `type=` validator as a command-line value.
    """
    name = env_var_name(flag)
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    logger.debug(f"Using {name}={value!r} from environment")
    return value


def save_effective_config(path: Path, data: Dict[str, Any], name: Optional[str] = None) -> Path:
    """
    Persist an effective configuration as pretty-printed, sorted JSON.

    Args:
        path: Destination file.
        data: Primitive-valued configuration dictionary.
        name: Optional label used in the log entry.

    Returns:
        The path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    log_config(name or path.stem, data, logger)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(data, f, indent=2, sort_keys=True, default=str)
        f.write("\n")
    logger.debug(f"Configuration saved to {path}")
    return path


def load_saved_config(path: Path) -> Dict[str, Any]:
    """
    Load a configuration previously written by `save_effective_config`.

    Raises:
        OSError: If the file cannot be read.
        ValueError: If the file is not a JSON object.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Configuration file {path} is corrupted: {e}") from e
    if not isinstance(data, dict):
        raise ValueError(f"Configuration file {path} does not contain an object")
    logger.info(f"Loaded configuration from {path}")
    return data
