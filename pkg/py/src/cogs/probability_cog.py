# Cog for the binomial divisibility lemma
import logging

import probability
from cmds import command
from cogs.base_cog import BaseCog

log = logging.getLogger(__name__)


class LemmaChecker(BaseCog):
    @command(
        name="lemma",
        brief="Check P(X = 0 mod m) <= 1/m + 2/sqrt(n)",
        description="""
Exhaustive exact check over 1 <= n <= n-max, 1 <= m <= m-max for
X ~ Binomial(n, 1/2). `--max-mass` instead checks max f(n, .) <= 1/sqrt(n).
""",
        arguments=(
            (("--n-max",), dict(type=int, default=60)),
            (("--m-max",), dict(type=int, default=30)),
            (("--max-mass",), dict(action="store_true")),
        ),
    )
    def lemma(self, args):
        if args.max_mass:
            return [row.as_dict() for row in probability.max_mass_check(args.n_max)]
        return [row.as_dict() for row in probability.lemma_bound_check(args.n_max, args.m_max)]
