# Base class for command groups, plus argument specs they share.
import logging
import typing

import experiments
from cmds import Command
from sequences import Sequence, SequenceKind
from utils import parse_int_list

log = logging.getLogger(__name__)

N_ARG = (("--n",), dict(type=int, required=True, help="length / bound parameter n"))
N_LIST_ARG = (
    ("--n-list",),
    dict(type=parse_int_list, required=True, help="comma separated n values, e.g. 500,4000 or 2^10,2^11"),
)
KIND_ARG = (
    ("--kind",),
    dict(choices=[str(k) for k in SequenceKind], default="identity", help="sequence family"),
)
B_ARG = (("--b",), dict(type=int, default=None, help="block parameter b"))
P_ARG = (("--p",), dict(type=float, default=None, help="inclusion probability p"))
TRIALS_ARG = (("--trials", "--reps"), dict(type=int, default=1, help="number of trials / reps"))
SEQUENCE_ARGS = (
    KIND_ARG,
    (("--n",), dict(type=int, default=None, help="length / bound parameter n")),
    B_ARG,
    P_ARG,
    (("--values",), dict(type=parse_int_list, default=None, help="explicit values, e.g. 1,2,4")),
    (("--substream",), dict(type=int, default=0, help="substream index of the seed")),
    (("--input",), dict(default=None, help="read a sequence from a JSON file instead")),
)


class BaseCog:
    def __init__(self, client) -> None:
        self.client = client

    # Commands declared on this cog, in definition order.
    def get_commands(self) -> list[Command]:
        found = []
        for name in type(self).__dict__:
            member = getattr(self, name)
            spec = getattr(member, "lab_command", None)
            if spec is not None:
                found.append(spec._replace(callback=member))
        return found


def kind_params(args) -> dict:
    params: dict[str, typing.Any] = {}
    if args.kind == "block":
        if args.b is None:
            raise ValueError("--b is required for kind=block")
        params["b"] = args.b
    if args.kind == "prandom":
        if args.p is None:
            raise ValueError("--p is required for kind=prandom")
        params["p"] = args.p
    return params


# Sequence described by SEQUENCE_ARGS.
def sequence_from_args(args) -> Sequence:
    if args.input is not None:
        with open(args.input, encoding="utf-8") as f:
            return Sequence.from_json(f.read())
    params = kind_params(args)
    if args.kind == "explicit":
        if args.values is None:
            raise ValueError("--values is required for kind=explicit")
        params["values"] = args.values
        n = args.n if args.n is not None else max(args.values)
    else:
        if args.n is None:
            raise ValueError(f"--n is required for kind={args.kind}")
        n = args.n
    return experiments.build_sequence(args.kind, n, params, args.seed, args.substream)
