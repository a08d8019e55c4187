"""Random generators, axiom-schema instances and the sampled soundness harness."""

from .generators import (
    Draw,
    GenConfig,
    argument_universe,
    random_argument,
    random_dyn_formula,
    random_formula,
    random_framework,
    random_kripke,
    random_model,
    random_rule,
    rule_pool,
)
from .schemas import (
    DYNAMIC_SCHEMAS,
    STATIC_SCHEMAS,
    VALIDITY_SCHEMAS,
    Instance,
    axiom_instances,
    expand,
    recheck,
    schema_names,
)
from .soundness import Counterexample, Report, SchemaResult, check_instances, sample_models, soundness_report
from .lemmas import (
    Check,
    ClosureReport,
    LemmaReport,
    bounded_closure,
    closure_experiment,
    direct_consistency,
    grounded_oracle,
    kripke_lemmas,
    translation,
)
