# Cog for |S(a)| / n^2 scans
import logging

import experiments
from cmds import command
from cogs.base_cog import B_ARG, KIND_ARG, N_ARG, N_LIST_ARG, P_ARG, TRIALS_ARG, BaseCog, kind_params
from utils import parse_float_list

log = logging.getLogger(__name__)


class Scanner(BaseCog):
    @command(
        name="scan",
        brief="Scan |S(a)| / n^2 over n",
        description="""
For each n and rep, build a sequence of the given kind and count its
consecutive sums. Emits one record per rep and an aggregate per n.
`--threshold c` adds the fraction of reps reaching ratio c.
""",
        arguments=(
            KIND_ARG,
            N_LIST_ARG,
            B_ARG,
            P_ARG,
            TRIALS_ARG,
            (("--threshold",), dict(type=float, default=None)),
        ),
    )
    def scan(self, args):
        if args.kind == "explicit":
            raise ValueError("scan needs a generated kind, not explicit")
        return experiments.scan_distinct(
            args.kind,
            args.n_list,
            kind_params(args),
            args.seed,
            args.trials,
            self.client.get_executor(),
            args.threshold,
        )

    @command(
        name="permutation",
        brief="|S(a)| / n^2 for random permutations",
        description="""
Mean |S(a)| / n^2 over random permutations of [n]; compare with (1 + e^-2) / 4.
""",
        arguments=(N_ARG, TRIALS_ARG),
    )
    def permutation(self, args):
        return experiments.permutation_records(
            args.n, args.trials, args.seed, self.client.get_executor()
        )

    @command(
        name="prandom",
        brief="|S(a)| / n^2 for p-random subsets",
        description="""
Exploratory: |S(a)| / n^2 for p-random subsets of [n], for each p in the list.
""",
        arguments=(
            N_ARG,
            (("--p-list",), dict(type=parse_float_list, required=True, help="e.g. 0.3,0.5,0.7")),
            TRIALS_ARG,
        ),
    )
    def prandom(self, args):
        return experiments.prandom_scan(
            args.n, args.p_list, args.trials, args.seed, self.client.get_executor()
        )
