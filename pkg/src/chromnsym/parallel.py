"""Split a range of subset masks across worker processes and merge the counts."""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

# below this many masks the process start-up cost dominates
MIN_PARALLEL = 1 << 12


def chunked_sum(worker, args, total, jobs=1):
    """Sum `worker(*args, lo, hi)` Counters over [0, total).

    Merging is coefficient-wise addition, so the result does not depend on
    how the range is split or in which order chunks finish.
    """
    jobs = max(1, int(jobs or 1))
    if jobs == 1 or total < MIN_PARALLEL:
        return worker(*args, 0, total)
    step = -(-total // (jobs * 4))
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    out = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, *args, lo, hi) for lo, hi in bounds]
        for f in futures:
            out.update(f.result())
    return out
