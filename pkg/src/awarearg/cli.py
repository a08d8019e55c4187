"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 parse or validation error,
3 failed action precondition, 4 counterexample or failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import af as af_mod
from .demo import HARRY_CLAIMS, harry_model
from .dynamics import DynamicEvaluator, NotReducible, PreconditionFailed, parse_script, reduce, run_script
from .lang.syntax import Believes, is_static
from .lang.text import ParseError, parse_formula, render
from .model import ModelError, ModelFormatError, load, save
from .semantics import Evaluator, PointedModel, Rebuttal

EXIT_USAGE, EXIT_INVALID, EXIT_PRECONDITION, EXIT_COUNTEREXAMPLE = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _mode(args) -> Rebuttal:
    return Rebuttal.RESTRICTED if getattr(args, "restricted", False) else Rebuttal.UNRESTRICTED


def _structured(args) -> bool:
    return args.format == "structured"


def _pointed(args) -> PointedModel:
    return PointedModel(load(args.model), args.world)


def _bool(value: bool) -> str:
    return "true" if value else "false"


# ------------------------------------------------------------------- commands


def cmd_eval(args, out) -> int:
    pm = _pointed(args)
    phi = parse_formula(args.formula)
    if not is_static(phi):
        print("error: formula contains dynamic modalities; use eval-dyn", file=sys.stderr)
        return EXIT_INVALID
    print(_bool(Evaluator(_mode(args)).holds(pm.model, pm.world, phi)), file=out)
    return 0


def cmd_eval_dyn(args, out) -> int:
    pm = _pointed(args)
    phi = parse_formula(args.formula)
    value = DynamicEvaluator(_mode(args)).holds(pm.model, pm.world, phi)
    print(_bool(value), file=out)
    if args.verify:
        try:
            static = reduce(phi)
        except NotReducible as err:
            print(f"verify: skipped ({err})", file=sys.stderr)
            return 0
        again = Evaluator(_mode(args)).holds(pm.model, pm.world, static)
        if again != value:
            print(f"verify: reduced formula evaluates to {_bool(again)}: {render(static)}", file=sys.stderr)
            return EXIT_COUNTEREXAMPLE
    return 0


def cmd_af(args, out) -> int:
    framework = af_mod.build_af(load(args.model), _mode(args))
    if _structured(args):
        index = {n: i for i, n in enumerate(framework.nodes)}
        for node, i in index.items():
            print(f"node\t{i}\t{render(node)}", file=out)
        for a, b in sorted(framework.attacks, key=lambda e: (index[e[0]], index[e[1]])):
            print(f"attack\t{index[a]}\t{index[b]}", file=out)
    else:
        out.write(af_mod.to_edge_list(framework))
    return 0


def _grounded_sorted(args):
    return sorted(af_mod.grounded_extension(load(args.model), _mode(args)), key=render)


def cmd_grounded(args, out) -> int:
    for arg in _grounded_sorted(args):
        print(f"grounded\t{render(arg)}" if _structured(args) else render(arg), file=out)
    return 0


def cmd_beliefs(args, out) -> int:
    for arg in _grounded_sorted(args):
        if _structured(args):
            print(f"belief\t{render(arg)}\t{render(arg.claim)}", file=out)
        else:
            print(render(Believes(arg, arg.claim)), file=out)
    return 0


def cmd_act(args, out) -> int:
    model = load(args.model)
    text = sys.stdin.read() if args.script == "-" else Path(args.script).read_text(encoding="utf-8")
    actions = parse_script(text)
    if args.world is not None:
        PointedModel(model, args.world)
    try:
        model = run_script(model, actions, args.world)
    except PreconditionFailed as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    save(model, args.output)
    if _structured(args):
        print(f"applied\t{len(actions)}\t{args.output}", file=out)
    else:
        print(f"applied {len(actions)} action(s); wrote {args.output}", file=out)
    return 0


def cmd_reduce(args, out) -> int:
    try:
        print(render(reduce(parse_formula(args.formula))), file=out)
    except NotReducible as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    return 0


def cmd_check(args, out) -> int:
    from .testkit import GenConfig, direct_consistency, grounded_oracle, kripke_lemmas, soundness_report, translation
    from .testkit.schemas import DYNAMIC_SCHEMAS, STATIC_SCHEMAS, VALIDITY_SCHEMAS, expand

    cfg = GenConfig(seed=args.seed)
    modes = (Rebuttal.RESTRICTED,) if args.restricted else (Rebuttal.UNRESTRICTED,)
    reports = []
    if args.schema:
        try:
            names = [n for pattern in args.schema for n in expand(pattern)]
        except KeyError as err:
            raise UsageError(str(err.args[0])) from err
        reports.append(soundness_report(cfg, args.instances, args.models, names, modes=modes))
    elif args.axioms:
        reports.append(soundness_report(cfg, args.instances, args.models, STATIC_SCHEMAS + VALIDITY_SCHEMAS, modes=modes))
    elif args.dynamics:
        reports.append(soundness_report(cfg, args.instances, args.models, DYNAMIC_SCHEMAS, modes=modes))
        reports.append(translation(cfg, n_pairs=500))
    else:
        reports.append(kripke_lemmas(GenConfig(seed=args.seed, max_worlds=6)))
        reports.append(grounded_oracle(args.seed))
        reports.append(direct_consistency(cfg, modes=modes))
    for report in reports:
        out.write(report.text())
    return 0 if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_demo(args, out) -> int:
    model = harry_model()
    if args.write_model:
        save(model, args.write_model)
    pm = PointedModel(model, "w0")
    evaluator = DynamicEvaluator()
    failed = 0
    for claim in HARRY_CLAIMS:
        value = evaluator.holds(pm.model, pm.world, claim.formula)
        ok = value == claim.expected
        failed += not ok
        if _structured(args):
            print(f"claim\t{'ok' if ok else 'FAIL'}\t{_bool(value)}\t{render(claim.formula)}", file=out)
        else:
            print(f"[{'ok' if ok else 'FAIL'}] {claim.label}", file=out)
            print(f"     w0 |= {render(claim.formula)}: {_bool(value)}", file=out)
    return EXIT_COUNTEREXAMPLE if failed else 0


# ---------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="awarearg", description="Belief and awareness over structured arguments.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "structured"), default="human", help="output style")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, text):
        return sub.add_parser(name, help=text, parents=[common])

    def with_model(p, world=False):
        p.add_argument("-m", "--model", required=True, help="model file (JSON)")
        if world:
            p.add_argument("-w", "--world", required=True)

    def with_mode(p):
        p.add_argument("--restricted", action="store_true", help="use restricted rebuttal")

    p = command("eval", "evaluate a static formula at a world")
    with_model(p, world=True)
    with_mode(p)
    p.add_argument("formula")
    p.set_defaults(run=cmd_eval)

    p = command("eval-dyn", "evaluate a formula with dynamic modalities")
    with_model(p, world=True)
    with_mode(p)
    p.add_argument("--verify", action="store_true", help="cross-check against the reduced formula")
    p.add_argument("formula")
    p.set_defaults(run=cmd_eval_dyn)

    for name, run, text in (
        ("af", cmd_af, "argumentation framework: nodes and attacks"),
        ("grounded", cmd_grounded, "arguments in the grounded extension"),
        ("beliefs", cmd_beliefs, "argument-based beliefs"),
    ):
        p = command(name, text)
        with_model(p)
        with_mode(p)
        p.set_defaults(run=run)

    p = command("act", "apply an action script and write the resulting model")
    with_model(p)
    p.add_argument("-s", "--script", required=True, help="action script file, or - for stdin")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("-w", "--world", help="also require announcements to be true here")
    p.set_defaults(run=cmd_act)

    p = command("reduce", "translate a dynamic formula to the static language")
    p.add_argument("formula")
    p.set_defaults(run=cmd_reduce)

    p = command("check", "randomised soundness and lemma checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--axioms", action="store_true", help="static axioms and belief validities")
    group.add_argument("--dynamics", action="store_true", help="reduction axioms and the translation")
    group.add_argument("--lemmas", action="store_true", help="Kripke lemmas, grounded oracle, consistency")
    group.add_argument("--schema", action="append", help="only these schemas (NAME or PREFIX*)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=200, help="instances per schema")
    p.add_argument("--models", type=int, default=50, help="random models per sweep")
    with_mode(p)
    p.set_defaults(run=cmd_check)

    p = command("demo", "worked examples")
    p.add_argument("name", choices=("harry",))
    p.add_argument("--write-model", metavar="PATH", help="also save the initial model")
    p.set_defaults(run=cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ModelFormatError, ModelError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
