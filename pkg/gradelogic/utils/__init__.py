"""utils init"""
from .config import read_yaml, load_config, DEFAULT_CONFIG_PATH
from .errors import *
from .logger import get_logger, set_log_level
from .reader import iter_lines, split_header, resolve_path
from .timer import Timer
