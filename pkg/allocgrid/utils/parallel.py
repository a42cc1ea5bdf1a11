from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence


def ordered_map(func: Callable, jobs: Sequence, workers: int) -> List:
    """Results in job order; a process pool when more than one worker is configured"""
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, jobs))
    return [func(job) for job in jobs]
