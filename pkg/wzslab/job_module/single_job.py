"""
Single job: one named unit of computation
"""
from datetime import datetime

from wzslab.errors import WzsError
from wzslab.logger import logger

class JobStatus:
    """Job status enum"""
    PENDING = "pending"
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"

class Job:
    """
    A callable with its arguments and the outcome of running it

    Args:
        name: label used in logs and reports
        func: the computation
        args, kwargs: passed to func
    """

    def __init__(self, name, func, *args, **kwargs):
        self.name = name
        self.func = func
        self.args = args
        self.kwargs = kwargs

        self.status = JobStatus.PENDING
        self.result = None
        self.error = None
        self.exception = None
        self.start_time = None
        self.end_time = None

    def __repr__(self):
        return f"Job({self.name!r}, {self.status})"

    def execute(self):
        """
        Run the job, recording the result or the error

        Returns:
            bool: True if successful, False otherwise
        """
        self.status = JobStatus.PROCESSING
        self.start_time = datetime.now()
        try:
            self.result = self.func(*self.args, **self.kwargs)
            self.status = JobStatus.COMPLETED
            return True
        except WzsError as e:
            self.exception = e
            self.error = str(e)
            self.status = JobStatus.FAILED
            logger.debug(f"Job {self.name} failed: {e}")
            return False
        except Exception as e:
            self.exception = e
            self.error = f"{type(e).__name__}: {e}"
            self.status = JobStatus.FAILED
            logger.error(f"Job {self.name} crashed: {self.error}")
            return False
        finally:
            self.end_time = datetime.now()

    @property
    def duration(self):
        if self.start_time is None or self.end_time is None:
            return None
        return (self.end_time - self.start_time).total_seconds()

    def get_info(self):
        return {
            "name": self.name,
            "status": self.status,
            "error": self.error,
        }
