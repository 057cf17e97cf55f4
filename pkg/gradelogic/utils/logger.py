"""
Logger helpers.
"""
import logging

from .errors import ConfigError

__all__ = ["get_logger", "set_log_level"]

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

_root = logging.getLogger('gradelogic')
if not _root.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    _root.addHandler(_handler)
    _root.setLevel(logging.WARNING)
    _root.propagate = False


def get_logger(name):
    """Return the logger of module ``name`` under the package logger."""
    if not name.startswith('gradelogic'):
        name = f'gradelogic.{name}'
    return logging.getLogger(name)


def set_log_level(level):
    """Set the package log level, e.g. 'INFO' or logging.DEBUG."""
    if isinstance(level, str):
        level = level.upper()
    try:
        _root.setLevel(level)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"unknown log level: {level}") from err
