"""
System information and diagnostics utilities
"""
import platform
import sys

import numpy as np

from wzslab import __version__
from wzslab.config import AUT_CAP, ORDER_CAP, THREADS_ENV_VAR, get_thread_count

def get_system_info():
    """Interpreter, platform, numpy and the caps of this process"""
    return {
        'wzslab_version': __version__,
        'python_version': sys.version.split()[0],
        'platform': platform.system(),
        'platform_release': platform.release(),
        'architecture': platform.machine(),
        'numpy_version': np.__version__,
        'order_cap': ORDER_CAP,
        'aut_cap': AUT_CAP,
        'threads': get_thread_count(),
        'threads_env_var': THREADS_ENV_VAR,
    }

def print_system_info(logger):
    """Log system information (debug level, stderr)"""
    info = get_system_info()
    logger.debug("System information")
    logger.indent()
    logger.debug(f"wzslab {info['wzslab_version']}, Python {info['python_version']}")
    logger.debug(f"Platform: {info['platform']} {info['platform_release']} ({info['architecture']})")
    logger.debug(f"numpy: {info['numpy_version']}")
    logger.debug(f"Caps: order {info['order_cap']}, Aut {info['aut_cap']}; threads {info['threads']} (${info['threads_env_var']})")
    logger.dedent()
