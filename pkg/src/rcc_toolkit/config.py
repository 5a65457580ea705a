"""
Configuration management for RCC Toolkit
"""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv


class Config:
    """Configuration manager for the solver, logic engines and suites"""

    DEFAULT_CONFIG = {
        "solver": {
            "fork_cap": None,
            "deepening_start": 1,
        },
        "structures": {
            "max_enumeration_size": 6,
        },
        "logic": {
            "max_regions": 6,
            "bounded_sat_engine": "auto",
            "enumeration_budget": 200000,
        },
        "reductions": {
            "max_triangle": 12,
        },
        "suite": {
            "seed": 20240917,
            "level": "quick",
            "quick": {
                "geometry_triples": 2000,
                "random_networks": 120,
                "fo2_formulas": 40,
                "fo2_valuations": 4,
                "modal_pairs": 120,
                "axiom_instances": 40,
                "axiom_structures": 12,
                "s53_formulas": 30,
                "s53_models": 4,
                "fl4_pairs": 60,
            },
            "full": {
                "geometry_triples": 10000,
                "random_networks": 500,
                "fo2_formulas": 200,
                "fo2_valuations": None,
                "modal_pairs": 500,
                "axiom_instances": 500,
                "axiom_structures": 50,
                "s53_formulas": 100,
                "s53_models": 16,
                "fl4_pairs": 300,
            },
        },
        "fixtures": {
            "directory": "fixtures",
            "auto_load": True,
        },
        "output": {
            "indent": 2,
        },
        "logging": {
            "level": "WARNING",
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration

        Args:
            config_path: Path to custom configuration file (YAML)
        """
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)

        if config_path and os.path.exists(config_path):
            self.load_config(config_path)

    def load_config(self, config_path: str) -> None:
        """Load configuration from YAML file"""
        with open(config_path, 'r') as f:
            custom_config = yaml.safe_load(f) or {}
            self._merge_config(self.config, custom_config)

    def load_environment(self) -> None:
        """Apply RCC_TOOLKIT_* overrides from the environment (and a .env file)"""
        load_dotenv()
        path = os.environ.get("RCC_TOOLKIT_CONFIG")
        if path and os.path.exists(path):
            self.load_config(path)
        level = os.environ.get("RCC_TOOLKIT_LOG_LEVEL")
        if level:
            self.set("logging.level", level.upper())
        seed = os.environ.get("RCC_TOOLKIT_SEED")
        if seed:
            self.set("suite.seed", int(seed))

    def _merge_config(self, base: Dict, custom: Dict) -> None:
        """Recursively merge custom config into base config"""
        for key, value in custom.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation

        Args:
            key: Configuration key (e.g., 'solver.fork_cap')
            default: Default value if key not found
        """
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value using dot notation

        Args:
            key: Configuration key (e.g., 'logic.max_regions')
            value: Value to set
        """
        keys = key.split('.')
        config = self.config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def save(self, config_path: str) -> None:
        """Save current configuration to YAML file"""
        Path(config_path).parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, 'w') as f:
            yaml.dump(self.config, f, default_flow_style=False)

    def to_dict(self) -> Dict[str, Any]:
        """Return configuration as dictionary"""
        return copy.deepcopy(self.config)

    def configure_logging(self, verbose: bool = False) -> None:
        """Configure the root logger once, from 'logging.*' keys"""
        level = "DEBUG" if verbose else str(self.get("logging.level", "WARNING")).upper()
        logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                            format=self.get("logging.format"))


# Global configuration instance
_global_config = None


def get_config(config_path: Optional[str] = None) -> Config:
    """Get global configuration instance"""
    global _global_config
    if _global_config is None:
        _global_config = Config(config_path)
        _global_config.load_environment()
    return _global_config


def reset_config() -> None:
    """Reset global configuration to default"""
    global _global_config
    _global_config = None
