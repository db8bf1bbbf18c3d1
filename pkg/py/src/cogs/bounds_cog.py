# Cog for the upper-bound side: lattice counts, the split inequality, gcd sums
import logging

import bounds
from cmds import command
from cogs.base_cog import N_LIST_ARG, SEQUENCE_ARGS, BaseCog, sequence_from_args
from utils import parse_float_list

log = logging.getLogger(__name__)

ALPHA_LIST_ARG = (
    ("--alpha",),
    dict(type=parse_float_list, default=[bounds.CONSTANTS.alpha_star], help="e.g. 0.2,0.42"),
)


class BoundChecker(BaseCog):
    @command(
        name="upper-bound",
        brief="Check |S(a)| <= alpha (n+1)^2 / 2 + |L_n|",
        description="""
The finite-n split inequality behind the upper bound, for a strictly
increasing sequence in [n]. Defaults to alpha at the minimiser of h.
""",
        arguments=SEQUENCE_ARGS + (ALPHA_LIST_ARG,),
    )
    def upper_bound(self, args):
        a = sequence_from_args(args)
        rows = []
        for alpha in args.alpha:
            check = bounds.upper_bound_check(a, alpha)
            rows.append({"kind": str(a.kind), "n": a.n, "alpha": alpha, **check.as_dict()})
        return rows

    @command(
        name="lattice",
        brief="Lattice count |L_n| against |Lambda_alpha|",
        description="""
Exact |L_n(alpha)| / (n+1)^2 next to the area of Lambda_alpha.
""",
        arguments=(N_LIST_ARG, ALPHA_LIST_ARG),
    )
    def lattice(self, args):
        rows = []
        for n in args.n_list:
            for alpha in args.alpha:
                rows.append(bounds.lattice_count(n, alpha).as_dict())
        return rows

    @command(
        name="gcdsum",
        brief="G(n) = sum gcd(k,l) / l^(3/2)",
        description="""
G(n) and G(n) / (sqrt(n) log n). `--method` picks the double loop, the
Pillai form or the interchanged totient form.
""",
        arguments=(
            N_LIST_ARG,
            (("--method",), dict(choices=bounds.GCD_SUM_METHODS, default="pillai")),
        ),
    )
    def gcdsum(self, args):
        return [row.as_dict() for row in bounds.gcd_scan(args.n_list, args.method)]

    @command(
        name="pillai",
        brief="Check sum gcd(k,l) = sum d phi(l/d)",
        arguments=((("--l-max",), dict(type=int, default=1000)),),
    )
    def pillai(self, args):
        return [{"l_max": args.l_max, "ok": bounds.pillai_check(args.l_max)}]
