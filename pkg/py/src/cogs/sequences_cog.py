# Cog for building sequences and counting their consecutive sums
import logging

import sequences
from cmds import command
from cogs.base_cog import N_ARG, SEQUENCE_ARGS, BaseCog, sequence_from_args

log = logging.getLogger(__name__)


class SequenceCounter(BaseCog):
    @command(
        name="construct",
        brief="Build a sequence",
        description="""
Build a sequence and print it. JSON output is the full sequence record
(kind, n, params, seed, values); CSV output lists index,value.
""",
        arguments=SEQUENCE_ARGS,
    )
    def construct(self, args):
        a = sequence_from_args(args)
        if args.format == "json":
            return a.to_json() + "\n"
        return [{"index": i, "value": v} for i, v in enumerate(a.values, start=1)]

    @command(
        name="count",
        brief="Count distinct consecutive sums",
        description="""
Count |S(a)| with the bit-array sieve. `--brute` adds the set-based count
as a cross-check (k <= 2000).
""",
        arguments=SEQUENCE_ARGS
        + ((("--brute",), dict(action="store_true", help="also run the brute-force count")),),
    )
    def count(self, args):
        a = sequence_from_args(args)
        distinct = sequences.count_distinct_sums(a)
        row = {
            "kind": str(a.kind),
            "n": a.n,
            **{k: v for k, v in a.params.items() if k != "values"},
            "k": len(a),
            "seed": a.seed,
            "distinct_sums": distinct,
            "ratio": distinct / a.n**2 if a.n else 0.0,
        }
        if args.brute:
            brute = sequences.brute_distinct_sums(a)
            row["brute_distinct_sums"] = brute
            row["agree"] = brute == distinct
        return [row]

    @command(
        name="maximum",
        brief="Largest |S(a)| over increasing sequences in [n]",
        description="""
Exhaustive search over every strictly increasing sequence in [n] (n <= 18).
Exploratory: reports the maximum, its ratio to n^2 and one witness.
""",
        arguments=(N_ARG,),
    )
    def maximum(self, args):
        best, witness = sequences.max_distinct_sums(args.n)
        return [
            {
                "n": args.n,
                "max_distinct_sums": best,
                "ratio": best / args.n**2,
                "witness": " ".join(str(v) for v in witness),
            }
        ]
