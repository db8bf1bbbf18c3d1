# A command-line client owning the parser, the worker pool and result output.
import argparse
import concurrent.futures
import functools
import logging
import os
import sys
import time

import cmds
import config
from experiments import ExperimentRecord
from utils import GuardError, get_task_timeout, get_workers, write_rows

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2


class LabArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for guard violations here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="master seed")
    common.add_argument("--format", choices=config.OUTPUT_FORMATS, default=config.DEFAULT_FORMAT)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--mem-cap-mib", type=int, default=None, help="bit array memory cap")
    common.add_argument("--workers", type=int, default=None, help="worker processes")
    common.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    return common


# Client holding a pool of workers for running experiment tasks.
class LabClient:
    def __init__(self, misc_commands, cogs):
        self.parser = LabArgumentParser(prog="sumlab", description=config.LAB_DESCRIPTION)
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)
        self.common = common_options()
        self.misc_commands = misc_commands
        self.cogs = [cog(self) for cog in cogs]
        self.executor: cmds.PebbleExecutor | None = None
        self.workers = get_workers()
        self.register_commands()

    # Workers start on first use; a single worker runs tasks inline.
    def get_executor(self) -> cmds.PebbleExecutor | None:
        if self.workers <= 1:
            return None
        if self.executor is None:
            self.executor = cmds.PebbleExecutor(self.workers, get_task_timeout())
        return self.executor

    def shutdown(self):
        if self.executor is not None:
            self.executor.shutdown(False)
            self.executor = None

    def add_command(self, spec: cmds.Command):
        sub = self.subparsers.add_parser(
            spec.name,
            parents=[self.common],
            help=spec.brief,
            description=spec.description.strip() or spec.brief,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        for flags, kwargs in spec.arguments:
            sub.add_argument(*flags, **kwargs)
        sub.set_defaults(handler=spec.callback)

    def register_commands(self):
        for func in self.misc_commands:
            spec: cmds.Command = func.lab_command
            self.add_command(spec._replace(callback=functools.partial(func, self)))
        for cog in self.cogs:
            for spec in cog.get_commands():
                self.add_command(spec)

    def apply_options(self, args):
        logging.getLogger().setLevel(logging.WARNING if args.quiet else logging.INFO)
        if args.mem_cap_mib is not None:
            # read back through the environment by workers as well
            os.environ["LAB_MEM_CAP_MIB"] = str(args.mem_cap_mib)
        if args.workers is not None:
            self.workers = args.workers

    def emit(self, result, args):
        if isinstance(result, str):
            if args.out is None or args.out == "-":
                print(result, end="")
            else:
                with open(args.out, "w", encoding="utf-8") as f:
                    f.write(result)
            return
        rows = []
        for item in result:
            if isinstance(item, ExperimentRecord):
                rows.append(item.as_dict(flat=args.format == "csv"))
            elif isinstance(item, dict):
                rows.append(item)
            else:
                rows.append(item.as_dict())
        write_rows(rows, args.format, args.out)

    def run(self, argv=None) -> int:
        args = self.parser.parse_args(argv)
        self.apply_options(args)
        start = time.perf_counter()
        try:
            self.emit(args.handler(args), args)
        except GuardError as err:
            log.error(f"{args.command}: {err}")
            return EXIT_GUARD
        except concurrent.futures.TimeoutError:
            log.error(f"{args.command}: a task exceeded {get_task_timeout()}s")
            return EXIT_GUARD
        except MemoryError:
            log.error(f"{args.command}: out of memory; lower n or raise the caps")
            return EXIT_GUARD
        except (ValueError, KeyError, OSError) as err:
            log.error(f"{args.command}: {err}")
            return EXIT_USAGE
        finally:
            self.shutdown()
        log.info(f"{args.command} finished in {time.perf_counter() - start:.2f}s")
        return EXIT_OK
