"""
Central configuration for the weighted zero-sum laboratory
"""
import os
from dataclasses import dataclass, fields, asdict

from wzslab.errors import ConfigError

# Group size caps
ORDER_CAP = 64
AUT_CAP = 64

# Search bounds
DEFAULT_LENGTH_BOUND = 8           # total sequence length for bounded invariants
DEFAULT_SEMINORMAL_BOUND = 2       # witness search length for seminormality
DEFAULT_OMEGA_CAP = 6              # max number of atoms in an omega product
OMEGA_NODE_BUDGET = 400_000        # nodes visited per omega search
DEFAULT_K_MAX = 3                  # U_k rows reported by `invariants`
DIVISOR_CLOSED_CAP = 12            # |G0| above which submonoid listing is refused
CLASS_SEMIGROUP_CAP = 4096         # distinct value sets before the closure gives up
LATTICE_PROGRESS_THRESHOLD = 50_000

# Complete integral closure cross-check
CIC_C_LEN_CAP = 4
CIC_K_MAX = 6

# Quadratic forms
SWEEP_MAX_N = 5000
LENGTH_SWEEP_MAX_N = 2000

# API server
API_HOST = "127.0.0.1"
API_PORT = 8000
REPORT_CACHE_SIZE = 64

# Parallelism
THREADS_ENV_VAR = "WZS_THREADS"
DEFAULT_THREADS = 1

OUTPUT_FORMATS = ("json", "csv", "text")
WEIGHT_SPECS = ("id", "pm", "aut")

def get_thread_count(requested=None):
    """Worker count: explicit request, then $WZS_THREADS, then the default"""
    if requested is not None:
        value = requested
    else:
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return DEFAULT_THREADS
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"thread count must be positive, got {value}")
    return value

@dataclass(frozen=True)
class RunConfig:
    """Parameters of one CLI/API computation"""
    group: str = "3"
    weights: str = "pm"
    order_cap: int = ORDER_CAP
    length_bound: int = DEFAULT_LENGTH_BOUND
    omega_cap: int = DEFAULT_OMEGA_CAP
    sweep_max_n: int = SWEEP_MAX_N
    k_max: int = DEFAULT_K_MAX
    search_bound: int = DEFAULT_SEMINORMAL_BOUND
    output_format: str = "json"
    threads: int = DEFAULT_THREADS
    deterministic: bool = True

    _POSITIVE = ("order_cap", "length_bound", "omega_cap", "sweep_max_n", "k_max", "search_bound", "threads")

    def __post_init__(self):
        for name in self._POSITIVE:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if not self.deterministic:
            raise ConfigError("non-deterministic runs are not supported")

    @classmethod
    def from_mapping(cls, mapping):
        """Build from a plain dict, rejecting keys that are not fields"""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(mapping) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
        return cls(**mapping)

    @classmethod
    def from_args(cls, args):
        """Build from an argparse namespace; absent options keep defaults"""
        mapping = {}
        for f in fields(cls):
            value = getattr(args, f.name, None)
            if value is not None:
                mapping[f.name] = value
        mapping["threads"] = get_thread_count(getattr(args, "threads", None))
        return cls.from_mapping(mapping)

    def header(self):
        """Bounds and caps echoed at the top of every report"""
        data = asdict(self)
        data.pop("threads")
        data.pop("output_format")
        return data
