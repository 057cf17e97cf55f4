"""
Config loading.
"""
import os

import yaml
from easydict import EasyDict as edict

from .errors import ConfigError

__all__ = ["read_yaml", "load_config", "DEFAULT_CONFIG_PATH"]

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))),
                                   'configs', 'default.yaml')


def read_yaml(path):
    """
    Read a yaml file into a dict.

    Args:
        path (str): Path of the yaml file.

    Returns:
        dict, the parsed content (empty dict for an empty file).
    """
    with open(path, 'r', encoding='utf-8') as file:
        string = file.read()
        dict_yaml = yaml.safe_load(string)

    return dict_yaml or {}


def load_config(path=None):
    """
    Load the default config, overridden by the keys of ``path`` if given.

    Args:
        path (str): Optional user config.

    Returns:
        EasyDict, the merged config.

    Raises:
        ConfigError: If the user config is not a mapping or names an unknown key.

    Examples:
        >>> cfg = load_config()
        >>> cfg.search_max_worlds
        3
    """
    cfg = read_yaml(DEFAULT_CONFIG_PATH)
    if path:
        try:
            user = read_yaml(path)
        except yaml.YAMLError as err:
            raise ConfigError(f"cannot parse config {path}: {err}") from err
        if not isinstance(user, dict):
            raise ConfigError(f"config {path} must be a mapping")
        unknown = sorted(set(user) - set(cfg))
        if unknown:
            raise ConfigError(f"unknown config keys in {path}: {', '.join(unknown)}")
        cfg.update(user)
    return edict(cfg)
