"""Walk through the British-subject example step by step, printing the framework after each action."""

from awarearg.af import build_af, grounded
from awarearg.demo import HARRY_CLAIMS, harry_model
from awarearg.dynamics import apply, eval_dyn, parse_script
from awarearg.lang import render
from awarearg.semantics import PointedModel

SCRIPT = """
+rule [be => br]
+arg <<be> => br>
announce a
+rule [a => !r1]
+arg <<a> => !r1>
"""


def show(model):
    af = build_af(model)
    ge = grounded(af)
    print(f"  worlds={sorted(model.worlds)}  rules={sorted(render(r) for r in model.rules)}")
    for node in af.nodes:
        mark = "in " if node in ge else "out"
        attackers = ", ".join(render(a) for a in sorted(af.attackers(node), key=render)) or "-"
        print(f"  [{mark}] {render(node):<18} attacked by: {attackers}")


def main():
    model = harry_model()
    print("initial model")
    show(model)
    for action in parse_script(SCRIPT):
        model = apply(model, action, "w0")
        print(f"after {render(action)}")
        show(model)
    print()
    pm = PointedModel(harry_model(), "w0")
    for claim in HARRY_CLAIMS:
        value = eval_dyn(pm, claim.formula)
        print(f"{'ok  ' if value == claim.expected else 'FAIL'} {claim.label}: {value}")


if __name__ == "__main__":
    main()
