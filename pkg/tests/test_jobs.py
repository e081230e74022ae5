import pytest

from wzslab.config import get_thread_count
from wzslab.errors import ConfigError, OutOfRange
from wzslab.job_module import Job, JobQueue, JobStatus, create_batch_jobs, map_jobs, run_jobs

def fails_on_three(x):
    if x == 3:
        raise OutOfRange("three")
    return x

def test_job_records_result():
    job = Job("square", lambda x: x * x, 7)
    assert job.execute()
    assert job.status == JobStatus.COMPLETED
    assert job.result == 49
    assert job.duration is not None

def test_job_records_failure():
    job = Job("three", fails_on_three, 3)
    assert not job.execute()
    assert job.status == JobStatus.FAILED
    assert isinstance(job.exception, OutOfRange)
    assert job.get_info()["error"] == "three"

@pytest.mark.parametrize("threads", [1, 2, 8])
def test_results_in_submission_order(threads):
    assert map_jobs(lambda x: x * x, range(20), threads=threads) == [x * x for x in range(20)]

def test_map_reraises_first_failure():
    with pytest.raises(OutOfRange):
        map_jobs(fails_on_three, range(6), threads=4)

def test_queue_status_and_callback():
    seen = []
    queue = JobQueue()
    queue.add_jobs(create_batch_jobs(fails_on_three, range(5)))
    assert len(queue) == 5
    queue.process_queue(callback=lambda job, i, total: seen.append((i, total)), threads=2)
    assert seen == [(i, 5) for i in range(5)]
    assert queue.get_status() == {"pending": 0, "completed": 4, "failed": 1, "total": 5}

def test_run_jobs_names():
    jobs = run_jobs(create_batch_jobs(str, [1, 2], name=lambda x: f"item {x}"), threads=1)
    assert [job.name for job in jobs] == ["item 1", "item 2"]
    assert [job.result for job in jobs] == ["1", "2"]

def test_thread_count(monkeypatch):
    monkeypatch.delenv("WZS_THREADS", raising=False)
    assert get_thread_count() == 1
    monkeypatch.setenv("WZS_THREADS", "4")
    assert get_thread_count() == 4
    assert get_thread_count(2) == 2
    monkeypatch.setenv("WZS_THREADS", "many")
    with pytest.raises(ConfigError):
        get_thread_count()
    with pytest.raises(ConfigError):
        get_thread_count(0)
