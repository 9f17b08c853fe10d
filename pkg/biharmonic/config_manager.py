import copy
import logging
import os
from typing import Any, Dict, List, Optional, Tuple

import yaml

from biharmonic import BIHARMONIC_DEFAULT_CONFIG_DATA
from biharmonic.report_utils import error_message, success_message

logger = logging.getLogger(__name__)

CONFIG_FILE_NAME = "biharmonic.yml"

# section -> key -> accepted types
_SCHEMA: Dict[str, Dict[str, Tuple[type, ...]]] = {
    "numcheck": {
        "seed": (int,),
        "points": (int,),
        "tol": (int, float),
        "fd_step": (int, float),
        "fd_rel_tol": (int, float),
        "fd_abs_tol": (int, float),
        "laplacian_step": (int, float),
        "laplacian_tol": (int, float),
        "witness_threshold": (int, float),
    },
    "verify": {"workers": (int,)},
    "logging": {"level": (str,)},
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigManager:
    """Loads, validates and generates the biharmonic.yml settings file."""

    @classmethod
    def get_config_file_path(cls) -> str:
        """Config file in the current working directory."""
        return os.path.join(os.getcwd(), CONFIG_FILE_NAME)

    @classmethod
    def validate_config_data(
        cls, config_data: Dict[str, Any]
    ) -> Tuple[bool, List[str]]:
        """
        Validate configuration data structure.

        Every section and key is optional; the ones present must be known and
        carry values of the right type.

        Args:
            config_data: Configuration data to validate

        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        errors = []

        if not isinstance(config_data, dict):
            errors.append("Configuration must be a dictionary")
            return False, errors

        for section, values in config_data.items():
            if section not in _SCHEMA:
                errors.append(f"Unknown section: {section}")
                continue
            if not isinstance(values, dict):
                errors.append(f"Section '{section}' must be a dictionary")
                continue
            for key, value in values.items():
                accepted = _SCHEMA[section].get(key)
                if accepted is None:
                    errors.append(f"Unknown key '{key}' in section '{section}'")
                elif isinstance(value, bool) or not isinstance(value, accepted):
                    errors.append(f"Key '{section}.{key}' has the wrong type")

        numcheck = config_data.get("numcheck") or {}
        if isinstance(numcheck, dict):
            points = numcheck.get("points")
            if isinstance(points, int) and points < 1:
                errors.append("'numcheck.points' must be at least 1")
        verify = config_data.get("verify") or {}
        if isinstance(verify, dict):
            workers = verify.get("workers")
            if isinstance(workers, int) and workers < 1:
                errors.append("'verify.workers' must be at least 1")
        logging_section = config_data.get("logging") or {}
        if isinstance(logging_section, dict):
            level = logging_section.get("level")
            if isinstance(level, str) and level.upper() not in LOG_LEVELS:
                errors.append(f"'logging.level' must be one of {', '.join(LOG_LEVELS)}")

        return len(errors) == 0, errors

    @classmethod
    def generate_config(cls, overwrite: bool = False) -> Dict[str, Any]:
        """
        Write the default settings to biharmonic.yml.

        Args:
            overwrite: Whether to overwrite an existing config file

        Returns:
            Response message indicating success or failure
        """
        config_path = cls.get_config_file_path()

        if os.path.exists(config_path) and not overwrite:
            logger.warning(
                f"Config file already exists at {config_path}. Skipping generation."
            )
            return error_message(
                message=f"Config file already exists at {config_path}",
                error_details=["Use --overwrite to regenerate"],
            )

        try:
            with open(config_path, "w") as config_file:
                yaml.safe_dump(
                    BIHARMONIC_DEFAULT_CONFIG_DATA,
                    config_file,
                    default_flow_style=False,
                    sort_keys=False,
                )
            logger.info(f"Generated config file at {config_path}")
            return success_message(
                message=f"Generated config file at {config_path}",
                data={"config_path": config_path},
            )
        except OSError as e:
            logger.error(f"Failed to generate config file: {e}")
            return error_message(
                message="Failed to generate config file", error_details=[str(e)]
            )

    @classmethod
    def get_config_data_from_config_file(cls) -> Optional[Dict[str, Any]]:
        """
        Load and validate biharmonic.yml.

        Returns:
            Configuration data, or None when the file is missing, unreadable or invalid
        """
        config_path = cls.get_config_file_path()

        try:
            with open(config_path, "r") as config_file:
                config_data = yaml.safe_load(config_file) or {}
        except FileNotFoundError:
            logger.debug(f"No config file at {config_path}, using defaults")
            return None
        except yaml.YAMLError as e:
            logger.error(f"YAML parsing error: {e}")
            return None
        except OSError as e:
            logger.error(f"Unexpected error reading config: {e}")
            return None

        is_valid, errors = cls.validate_config_data(config_data)
        if not is_valid:
            logger.error(f"Invalid configuration: {errors}")
            return None
        return config_data

    @classmethod
    def get_settings(cls) -> Dict[str, Any]:
        """Defaults overlaid with whatever the config file sets."""
        settings = copy.deepcopy(BIHARMONIC_DEFAULT_CONFIG_DATA)
        config_data = cls.get_config_data_from_config_file()
        if not config_data:
            return settings
        for section, values in config_data.items():
            settings.setdefault(section, {}).update(values or {})
        return settings
