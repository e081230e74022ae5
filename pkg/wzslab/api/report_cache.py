"""
In-memory report store for the API
No database - finished reports are kept in a bounded LRU keyed by their inputs
"""
import threading
from collections import OrderedDict

from fastapi import Response

from wzslab.config import REPORT_CACHE_SIZE, RunConfig
from wzslab.logger import logger
from wzslab.output import render_json

class ReportCache:
    def __init__(self, size=REPORT_CACHE_SIZE):
        self.size = size
        self._reports = OrderedDict()
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._reports)

    def get_or_build(self, key, build):
        """Cached rendered JSON for key, building it with build() on a miss"""
        with self._lock:
            if key in self._reports:
                self._reports.move_to_end(key)
                return self._reports[key]
        # Built outside the lock; two concurrent misses just compute twice
        text = render_json(build())
        with self._lock:
            self._reports[key] = text
            self._reports.move_to_end(key)
            while len(self._reports) > self.size:
                evicted, _ = self._reports.popitem(last=False)
                logger.debug(f"Report cache evicted {evicted[0]}")
        return text

    def clear(self):
        with self._lock:
            self._reports.clear()

report_cache = ReportCache()

def run_config(**values):
    """RunConfig from query parameters, dropping the ones left unset"""
    return RunConfig.from_mapping({k: v for k, v in values.items() if v is not None})

def cached_report(command, config, build, *args):
    """JSON response with the report body identical to the CLI's --format json"""
    text = report_cache.get_or_build((command, config, args), lambda: build(config, *args))
    return Response(content=text, media_type="application/json")
