"""
Batch helpers on top of JobQueue
"""
from wzslab.config import get_thread_count
from wzslab.job_module.job_queue import JobQueue
from wzslab.job_module.single_job import Job

def create_batch_jobs(func, items, name=None):
    """
    One Job per item, calling func(item)

    Args:
        func: the computation
        items: iterable of arguments
        name: callable item -> job name (default: str)
    """
    name = name or str
    return [Job(name(item), func, item) for item in items]

def run_jobs(jobs, threads=None, callback=None, progress=None):
    """
    Run jobs through a queue; returns them in submission order

    threads=None resolves through get_thread_count (WZS_THREADS, then 1).
    """
    queue = JobQueue()
    queue.add_jobs(jobs)
    return queue.process_queue(callback=callback, threads=get_thread_count(threads), progress=progress)

def map_jobs(func, items, threads=None, progress=None):
    """
    [func(item) for item in items] computed on the pool

    The first failure is re-raised after every job has finished.
    """
    jobs = run_jobs(create_batch_jobs(func, items), threads=threads, progress=progress)
    for job in jobs:
        if job.exception is not None:
            raise job.exception
    return [job.result for job in jobs]
