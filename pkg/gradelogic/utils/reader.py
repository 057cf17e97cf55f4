"""
Line reader shared by the poset, interpretation, proof and KB file formats.
"""
import os

from .errors import ParseError

__all__ = ["iter_lines", "split_header", "resolve_path"]


def iter_lines(text):
    """
    Yield ``(line_number, content)`` for every non-blank line of ``text``.

    ``#`` starts a comment; content is stripped.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if content:
            yield number, content


def split_header(content, number, keyword=None):
    """
    Split ``key: value`` at the first colon.

    Args:
        content (str): Stripped line content.
        number (int): Line number for error reporting.
        keyword (str): If given, the key must equal it.

    Returns:
        tuple, (key, value) both stripped.
    """
    if ':' not in content:
        raise ParseError(f"expected '<key>: <value>', got '{content}'", number)
    key, value = content.split(':', 1)
    key = key.strip()
    if keyword is not None and key != keyword:
        raise ParseError(f"expected '{keyword}:', got '{key}:'", number)
    return key, value.strip()


def resolve_path(path, relative_to):
    """Resolve ``path`` against the directory of file ``relative_to``."""
    if os.path.isabs(path) or relative_to is None:
        return path
    return os.path.join(os.path.dirname(os.path.abspath(relative_to)), path)
