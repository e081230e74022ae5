"""
Colored, indented diagnostics for the CLI and the API

Everything goes to stderr; stdout only ever carries reports, which must be
byte-identical between runs.
"""
import os
import sys
from enum import Enum

class Color(Enum):
    RED = '\033[31m'
    CYAN = '\033[36m'
    BLUE = '\033[34m'
    GREY = '\033[90m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    BOLD = '\033[1m'
    RESET = '\033[0m'

class LogLevel(Enum):
    """Label and color per level"""
    DEBUG = ('DEBUG', Color.GREY)
    INFO = ('INFO', Color.CYAN)
    SUCCESS = ('✓', Color.GREEN)
    WARNING = ('⚠', Color.YELLOW)
    ERROR = ('✗', Color.RED)

def _supports_color(stream):
    if os.environ.get('NO_COLOR'):
        return False
    return hasattr(stream, 'isatty') and stream.isatty()

class Logger:
    """
    Hierarchical stderr logger

    `verbose` enables debug lines; `quiet` drops everything except errors.
    """

    def __init__(self, indent_size=2, stream=None):
        self.depth = 0
        self.indent_size = indent_size
        self.verbose = False
        self.quiet = False
        self._stream = stream

    @property
    def stream(self):
        # resolved per call so a swapped sys.stderr (pytest capsys) is picked up
        return self._stream if self._stream is not None else sys.stderr

    @stream.setter
    def stream(self, value):
        self._stream = value

    def _paint(self, text, *colors):
        if not _supports_color(self.stream):
            return text
        return ''.join(c.value for c in colors) + text + Color.RESET.value

    def _log(self, level, message, indent=None, force=False):
        if self.quiet and not force:
            return
        depth = self.depth if indent is None else indent
        label, color = level.value
        line = ' ' * (depth * self.indent_size) + f"{self._paint(label, color)} {message}"
        print(line, file=self.stream, flush=True)

    def debug(self, message, indent=None):
        if self.verbose:
            self._log(LogLevel.DEBUG, message, indent)

    def info(self, message, indent=None):
        self._log(LogLevel.INFO, message, indent)

    def success(self, message, indent=None):
        self._log(LogLevel.SUCCESS, message, indent)

    def warning(self, message, indent=None):
        self._log(LogLevel.WARNING, message, indent)

    def error(self, message, indent=None):
        self._log(LogLevel.ERROR, message, indent, force=True)

    def section(self, message):
        if not self.quiet:
            print(self._paint(f"▶ {message}", Color.BOLD, Color.BLUE), file=self.stream, flush=True)

    def indent(self):
        self.depth += 1

    def dedent(self):
        self.depth = max(0, self.depth - 1)

logger = Logger()

def format_duration(seconds):
    if seconds < 60:
        return f"{seconds:.1f}s"
    if seconds < 3600:
        return f"{seconds / 60:.1f}m"
    return f"{seconds / 3600:.1f}h"
