from timeit import default_timer as now

from . import logger as log


class Timer(object):
    """
    Context manager measuring a named section.

    Usage
        with Timer("[selfcheck]", "ccr") as timer:
            --Do something--
        seconds = timer.elapsed
    """

    def __init__(self, tag, desc=""):
        self._tag = tag
        self._desc = desc
        self._start_time = now()
        self._laps = []
        self.elapsed = None

    def lap(self, desc=None):
        dt = now() - self._start_time
        self._laps.append((desc, dt))
        log.debug(self._tag, "{} took {:0.4f} secs.".format(desc, dt))
        return dt

    @property
    def laps(self):
        return list(self._laps)

    def __enter__(self):
        self._start_time = now()
        self._laps = []
        return self

    def __exit__(self, type, value, traceback):
        self.elapsed = now() - self._start_time
        if type is None:
            log.debug(self._tag, "{} total: {:0.4f} secs.".format(self._desc, self.elapsed))
        return False
