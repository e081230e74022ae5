"""
Job queue running jobs on a thread pool

Results are always handed back in submission order, so reports built from
them do not depend on the worker count.
"""
from collections import deque
from concurrent.futures import ThreadPoolExecutor

from tqdm import tqdm

from wzslab.job_module.single_job import JobStatus
from wzslab.logger import logger

class JobQueue:
    """
    FIFO queue of Job instances
    """

    def __init__(self):
        self.queue = deque()
        self.completed = []
        self.failed = []

    def __len__(self):
        return len(self.queue)

    def add_jobs(self, jobs):
        jobs = list(jobs)
        logger.debug(f"Adding {len(jobs)} jobs to queue")
        self.queue.extend(jobs)

    def process_queue(self, callback=None, threads=1, progress=None):
        """
        Run every queued job

        Args:
            callback: Optional callback(job, index, total), called in submission order
            threads: worker count; 1 runs inline
            progress: tqdm description, or None for no progress bar

        Returns:
            list: the jobs in submission order
        """
        jobs = list(self.queue)
        self.queue.clear()
        total = len(jobs)
        if not total:
            return []
        logger.debug(f"Processing {total} jobs on {threads} thread(s)")

        bar = tqdm(total=total, desc=progress, file=logger.stream, leave=False,
                   disable=progress is None or logger.quiet)
        if threads <= 1:
            for job in jobs:
                job.execute()
                bar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(job.execute) for job in jobs]
                for future in futures:
                    future.result()
                    bar.update(1)
        bar.close()

        for index, job in enumerate(jobs):
            (self.completed if job.status == JobStatus.COMPLETED else self.failed).append(job)
            if callback:
                callback(job, index, total)
        logger.debug(f"Queue processing complete: {len(self.completed)} completed, {len(self.failed)} failed")
        return jobs

    def get_status(self):
        return {
            'pending': len(self.queue),
            'completed': len(self.completed),
            'failed': len(self.failed),
            'total': len(self.queue) + len(self.completed) + len(self.failed),
        }
