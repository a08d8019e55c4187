"""Direct consistency under both rebuttal notions, with and without a bounded awareness closure.

The closed variant only approximates full awareness: arguments are added by
subargument closure and then, for a fixed number of rounds, by rule chaining
plus transposed strict steps. Numbers are informative.
"""

import argparse

from awarearg.af import check_direct_consistency
from awarearg.lang import parse_argument, parse_rule, render
from awarearg.model import make_model
from awarearg.semantics import Rebuttal
from awarearg.testkit import GenConfig, bounded_closure, closure_experiment, direct_consistency


def conjunction_example():
    return make_model(
        worlds=["w0"],
        doxastic=["w0"],
        awareness=[parse_argument("<!(q & s)>"), parse_argument("<<<a> => q>,<<b> => s> ->> (q & s)>")],
        rules=[parse_rule("[a => q]"), parse_rule("[b => s]")],
        valuation={"a": ["w0"], "b": ["w0"]},
    )


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--models", type=int, default=500)
    parser.add_argument("--closure-models", type=int, default=100)
    parser.add_argument("--rounds", type=int, default=2)
    args = parser.parse_args(argv)
    cfg = GenConfig(seed=args.seed)

    print("random models, awareness as generated")
    print(direct_consistency(cfg, args.models).text())

    print("hand-built model: unaware of the defeasible subarguments")
    model = conjunction_example()
    for mode in Rebuttal:
        witness = check_direct_consistency(model, mode)
        shown = "none" if witness is None else f"{render(witness.alpha)} vs {render(witness.beta)}"
        print(f"  {mode.value:<12} witness: {shown}")
    closed = model.replace(awareness=bounded_closure(model, args.rounds))
    witness = check_direct_consistency(closed, Rebuttal.RESTRICTED)
    print(f"  after closure ({len(closed.awareness)} arguments), restricted witness: {witness and render(witness.alpha)}")
    print()

    print(f"bounded closure on {args.closure_models} random models ({args.rounds} rounds)")
    print(closure_experiment(cfg, args.closure_models, args.rounds).text())


if __name__ == "__main__":
    main()
