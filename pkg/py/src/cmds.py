# Miscellaneous commands and worker-pool task-running infrastructure.
import concurrent.futures
import logging
import typing

from bounds import CONSTANTS, minimize_h
from pebble import ProcessPool

log = logging.getLogger(__name__)


# Wrapper for ProcessPool exposing the concurrent.futures interface
class PebbleExecutor(concurrent.futures.Executor):
    def __init__(self, max_workers, timeout=None):
        self.pool = ProcessPool(max_workers=max_workers)
        self.timeout = timeout
        log.info(f"Started {max_workers} workers (timeout {timeout}s per task).")

    def submit(self, fn, *args, **kwargs):
        return self.pool.schedule(fn, args=args, kwargs=kwargs, timeout=self.timeout)  # type: ignore

    def map(self, func, *iterables, timeout=None, chunksize=1):
        raise NotImplementedError("This wrapper does not support `map`; use run_ordered.")

    def shutdown(self, wait=True, *, cancel_futures=False):
        if wait:
            log.info("Closing workers...")
            self.pool.close()
        else:
            log.info("Stopping workers...")
            self.pool.stop()
        self.pool.join()
        log.info("Workers joined.")


# Run func(*task) for every task and return the results in task order.
# Without an executor the tasks run inline.
def run_ordered(
    executor: concurrent.futures.Executor | None,
    func: typing.Callable[..., typing.Any],
    tasks: typing.Sequence[tuple],
) -> list:
    if executor is None:
        return [func(*task) for task in tasks]
    futures = [executor.submit(func, *task) for task in tasks]
    results = []
    try:
        for future in futures:
            results.append(future.result())
    except Exception as err:
        log.info(f"Task {len(results)} of {func.__name__} raised: {err}")
        for future in futures:
            future.cancel()
        raise
    return results


class Command(typing.NamedTuple):
    name: str
    brief: str
    description: str
    arguments: tuple
    callback: typing.Callable


# Mark a function (or cog method) as a CLI subcommand. `arguments` holds
# (flags, kwargs) pairs for argparse.add_argument.
def command(name: str, brief: str, description: str = "", arguments: tuple = ()):
    def decorator(func):
        func.lab_command = Command(name, brief, description, tuple(arguments), func)
        return func

    return decorator


@command(
    name="constants",
    brief="Print the named constants",
    description="""
The constants around the upper and lower bounds, with the minimiser of h
recomputed by bisection next to its closed form.
""",
)
def constants(client, args) -> list[dict]:
    rows = CONSTANTS.as_rows()
    alpha_min, h_min = minimize_h()
    rows.append({"name": "alpha_star_bisection", "value": alpha_min})
    rows.append({"name": "h_min_bisection", "value": h_min})
    rows.append({"name": "c4_bisection", "value": h_min / 2})
    return rows
