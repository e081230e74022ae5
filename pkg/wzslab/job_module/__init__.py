# Job module
from .single_job import Job, JobStatus
from .job_queue import JobQueue
from .batch_job import create_batch_jobs, run_jobs, map_jobs

__all__ = [
    'Job',
    'JobStatus',
    'JobQueue',
    'create_batch_jobs',
    'run_jobs',
    'map_jobs',
]
