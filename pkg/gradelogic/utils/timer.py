"""Wall-clock timing for the INFO summaries of long-running searches."""
import time

__all__ = ["Timer"]


class Timer:
    """
    Stopwatch on ``time.perf_counter``.

    Examples:
        >>> timer = Timer().start()
        >>> elapsed = timer.end()
        >>> elapsed >= 0.0
        True
    """
    def __init__(self):
        self.start_time = None
        self.diff = 0.

    def start(self):
        self.start_time = time.perf_counter()
        return self

    def end(self):
        """Seconds since ``start``; also kept in ``diff``."""
        if self.start_time is None:
            raise RuntimeError("Timer.end() called before start()")
        self.diff = time.perf_counter() - self.start_time
        return self.diff

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc_info):
        self.end()
        return False
