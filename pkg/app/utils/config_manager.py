"""
Config Manager - Manages enumeration caps, random testing and worker settings
"""

import json
from pathlib import Path

from app.services.verification import DEFAULT_SETTINGS

SETTING_LABELS = {
    "enumeration_cap": "Enumeration cap (partitions)",
    "filling_cap": "Filling cap (maximal fillings)",
    "fan_cap": "Fan cap (Dyck path fans)",
    "random_cases": "Random cases (Greene oracle)",
    "seed": "Random seed",
    "jobs": "Worker processes",
}


class ConfigManager:
    """
    Configuration manager for the application.
    Handles loading, saving, and validating configuration settings.
    """

    def __init__(self, config_file=None):
        """
        Initialize the configuration manager.

        Args:
            config_file (str, optional): Path to the configuration file.
                                        Defaults to ./config/config.json.
        """
        if config_file is None:
            self.config_dir = Path('config')
            self.config_file = self.config_dir / 'config.json'
        else:
            self.config_file = Path(config_file)
            self.config_dir = self.config_file.parent

        if not self.config_dir.exists():
            self.config_dir.mkdir(parents=True, exist_ok=True)

    def load_config(self):
        """
        Load configuration from the config file.

        Returns:
            dict: Stored settings, empty if the file is missing or invalid
        """
        if not self.config_file.exists():
            return {}

        try:
            with open(self.config_file, 'r') as f:
                config = json.load(f)
        except (json.JSONDecodeError, FileNotFoundError):
            return {}
        return config if isinstance(config, dict) else {}

    def save_config(self, config):
        """
        Save configuration to the config file.

        Args:
            config (dict): Configuration settings to save
        """
        if not self.config_dir.exists():
            self.config_dir.mkdir(parents=True, exist_ok=True)

        with open(self.config_file, 'w') as f:
            json.dump(config, f, indent=2, sort_keys=True)

    def is_config_complete(self):
        """
        Check that every known setting is stored as a usable integer.

        Returns:
            bool: True if all settings are present and valid
        """
        config = self.load_config()
        for key in DEFAULT_SETTINGS:
            try:
                validate_setting(key, config.get(key))
            except ValueError:
                return False
        return True

    def get_settings(self, overrides=None):
        """
        Stored settings merged over the defaults, then over any overrides.

        Invalid stored values fall back to the default.

        Args:
            overrides (dict, optional): Values for this run only; None values are ignored

        Returns:
            dict: Complete settings
        """
        settings = dict(DEFAULT_SETTINGS)
        for key, value in self.load_config().items():
            if key not in settings:
                continue
            try:
                settings[key] = validate_setting(key, value)
            except ValueError:
                pass
        for key, value in (overrides or {}).items():
            if value is not None:
                settings[key] = validate_setting(key, value)
        return settings

    def set_setting(self, key, value):
        """Validate and store a single setting."""
        config = self.load_config()
        config[key] = validate_setting(key, value)
        self.save_config(config)
        return config[key]


def validate_setting(key, value):
    """
    Coerce a setting value to int and check its range.

    Args:
        key (str): Setting name
        value: Raw value (int or numeric string)

    Returns:
        int: The validated value

    Raises:
        ValueError: If the key is unknown or the value is not acceptable
    """
    if key not in DEFAULT_SETTINGS:
        raise ValueError(f"Unknown setting: {key}")
    if isinstance(value, bool):
        raise ValueError(f"{key} must be an integer")
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{key} must be an integer, got {value!r}")
    minimum = 0 if key == "seed" else 1
    if number < minimum:
        raise ValueError(f"{key} must be at least {minimum}, got {number}")
    return number
