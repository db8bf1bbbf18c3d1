# Cog for additive energy commands
import logging

import config
import energy
import experiments
from cmds import command
from cogs.base_cog import N_LIST_ARG, SEQUENCE_ARGS, TRIALS_ARG, BaseCog, sequence_from_args
from sequences import partial_sums

log = logging.getLogger(__name__)


class EnergyCounter(BaseCog):
    @command(
        name="energy",
        brief="Additive energy of the partial sums",
        description="""
E(P), |P - P|, the Cauchy-Schwarz bound and the lower bound on |S(a)| it
certifies. For |P| <= 400 the decomposition E = 2N + |P|^2 is rechecked by
enumeration.
""",
        arguments=SEQUENCE_ARGS,
    )
    def energy(self, args):
        a = sequence_from_args(args)
        P = partial_sums(a)
        report = energy.additive_energy(P)
        row = {"kind": str(a.kind), "n": a.n, "seed": a.seed, **report.as_dict()}
        row["distinct_sums_lower_bound"] = energy.distinct_sums_from_energy(report)
        row["energy_over_n2"] = report.energy / a.n**2 if a.n else 0.0
        if len(P) <= config.DECOMPOSITION_MAX_SIZE:
            row["decomposition_ok"] = energy.energy_decomposition_check(P)
        return [row]

    @command(
        name="mc-energy",
        brief="Monte Carlo mean energy of the +-1 construction",
        description="""
Average E(P(a)) for a_i = 3i + eps_i over independent sign draws. Trial t
uses substream t of the seed, so results do not depend on the worker count.
""",
        arguments=(N_LIST_ARG, TRIALS_ARG),
    )
    def mc_energy(self, args):
        records = experiments.mc_energy_records(
            args.n_list, args.trials, args.seed, self.client.get_executor()
        )
        return records

    @command(
        name="exact-energy",
        brief="Exact expected energy of the +-1 construction",
        description="""
`--method enumerate` averages over all 2^n sign patterns (n <= 16).
`--method pmf` sums Rademacher-sum probabilities over pairs of intervals (n <= 40).
""",
        arguments=(
            N_LIST_ARG,
            (("--method",), dict(choices=experiments.EXPECTATION_METHODS, default="enumerate")),
        ),
    )
    def exact_energy(self, args):
        return experiments.exact_energy_records(
            args.n_list, args.method, self.client.get_executor()
        )
