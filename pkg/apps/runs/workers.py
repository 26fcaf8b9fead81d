"""Ordered fan-out of independent jobs over a process pool."""

import logging
from multiprocessing import Pool

logger = logging.getLogger(__name__)


def run_ordered(job, items, workers=1):
    """``[job(item) for item in items]``, spread over ``workers`` processes.

    Results come back in input order whatever the worker count, and the caller
    stays the only process that touches output files.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [job(item) for item in items]
    processes = min(workers, len(items))
    logger.debug("Running %d jobs on %d processes", len(items), processes)
    with Pool(processes=processes) as pool:
        return pool.map(job, items)
