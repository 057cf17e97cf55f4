import os
import sys
sys.path.append('.')

import pytest

from gradelogic.utils import (load_config, read_yaml, iter_lines, split_header, resolve_path,
                              set_log_level, get_logger, Timer, ConfigError, ParseError, DEFAULT_CONFIG_PATH)


def test_default_config():
    cfg = load_config()
    assert cfg.search_max_worlds == 3
    assert cfg.search_mode == 'exhaustive'
    assert cfg.search_max_candidates == 500000
    assert 'oracle_max_generators' not in cfg
    assert cfg.taut_max_variables == 1000
    assert set(cfg) == set(read_yaml(DEFAULT_CONFIG_PATH))


def test_config_override(tmp_path):
    path = tmp_path / 'user.yaml'
    path.write_text("seed: 42\nsearch_mode: randomized\n", encoding='utf-8')
    cfg = load_config(str(path))
    assert cfg.seed == 42
    assert cfg.search_mode == 'randomized'
    assert cfg.search_samples == 2000


def test_empty_config(tmp_path):
    path = tmp_path / 'empty.yaml'
    path.write_text("", encoding='utf-8')
    assert load_config(str(path)) == load_config()


@pytest.mark.parametrize('content', ["worlds: 3\n", "- 1\n- 2\n", "seed: [1\n"])
def test_bad_config(tmp_path, content):
    path = tmp_path / 'bad.yaml'
    path.write_text(content, encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_iter_lines_skips_comments_and_blanks():
    text = "# header\n\ngenerators: a b  # trailing\n   \ntop: T\n"
    assert list(iter_lines(text)) == [(3, 'generators: a b'), (5, 'top: T')]


def test_split_header():
    assert split_header('rel alpha: w1->w2', 4) == ('rel alpha', 'w1->w2')
    with pytest.raises(ParseError) as err:
        split_header('worlds w1 w2', 7)
    assert err.value.line == 7
    with pytest.raises(ParseError):
        split_header('poset: x.poset', 1, keyword='worlds')


def test_resolve_path():
    assert resolve_path('a.poset', None) == 'a.poset'
    assert resolve_path(os.path.abspath('x.poset'), 'dir/file.kb') == os.path.abspath('x.poset')
    assert resolve_path('a.poset', os.path.join('dir', 'file.kb')) == os.path.join(os.path.abspath('dir'), 'a.poset')


def test_log_level():
    set_log_level('debug')
    assert get_logger('gradelogic.engine').getEffectiveLevel() == 10
    set_log_level('WARNING')
    assert get_logger('engine').name == 'gradelogic.engine'
    with pytest.raises(ConfigError):
        set_log_level('LOUD')


def test_timer():
    timer = Timer()
    with pytest.raises(RuntimeError):
        timer.end()
    with Timer() as timer:
        pass
    assert timer.diff >= 0.0
