"""Factorization in monoids equipped with a preorder."""

import json

from ._core import (  # noqa: F401
    BudgetExhausted,
    FiniteMonoid,
    NotANonUnit,
    ParseError,
    PremonError,
    PresentedMonoid,
    PuiseuxMonoid,
    Tri,
    ValidationError,
    boolean_and,
    classify_finite,
    enumerate_monoids,
    factor_finite,
    poly_divides,
    poly_is_atom,
    qX_is_never_atom,
    run_cli,
    transitive_closure,
    zmod_add,
    zmod_mult,
)


def classify(instance, element, **budget):
    """Classify an element of any supported family through the CLI front end.

    `instance` is a dict, a JSON string or a file path, as on the command line; budget keys
    are chain_depth, factor_cap, node_cap, exponent_cap, radius.
    """
    args = ["--format", "json"]
    for key, value in budget.items():
        args += ["--" + key.replace("_", "-"), str(value)]
    args += ["classify", "--instance", instance if isinstance(instance, str) else json.dumps(instance), "--element", str(element)]
    code, out, err = run_cli(args)
    if code not in (0, 3):
        raise PremonError(err.strip() or "classify failed with exit code %d" % code)
    return json.loads(out)
