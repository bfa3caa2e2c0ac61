"""Theorem verification harness.

Builds instances, runs the exact solvers, compares against the closed
forms and bound suite, and assembles deterministic JSON reports. The exact
solvers are ground truth: a disagreement is recorded as a mismatch check,
never raised.
"""

import json
import logging
import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from src import __version__
from src.config_manager import FamilyRange, LabConfig
from src.dominant_search import (
    applicable_parameters,
    compute_parameters,
    dominant_resolving_predicate,
    ve_dominant_edge_resolving_predicate,
)
from src.domination import DominatingPredicate, VeDominatingPredicate
from src.families import (
    FamilyKind,
    FamilySpec,
    complete_bipartite,
    generate,
    is_isomorphic,
    product,
    random_tree,
    tree_spec,
)
from src.formulas import (
    BOUND_IDS,
    GENERAL_BOUND_IDS,
    THEOREM_PARAMETERS,
    TREE_BOUND_IDS,
    OutOfDomain,
    Prediction,
    bound_checks,
    predict,
    predict_relation,
    theorem_id,
)
from src.graph_core import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    emit_graph6,
    from_edge_list,
    parse_graph6,
)
from src.models import (
    PARAMETER_ORDER,
    CheckStatus,
    ComparisonRow,
    Parameter,
    ParamResult,
    TheoremCheck,
    relation_of,
)
from src.resolvability import EdgeResolvingPredicate, ResolvingPredicate, edge_code, vertex_code
from src.search import BudgetExceededError, SearchSettings, lexicographically_earlier
from src.utils import natural_key

logger = logging.getLogger(__name__)

SCAN_MAX_ORDER = 8
WITNESS_SAMPLE = 64

BOUND_SELECTIONS: dict[str, tuple[str, ...]] = {
    "all": BOUND_IDS,
    "general": GENERAL_BOUND_IDS,
    "tree": TREE_BOUND_IDS,
}


# Fixtures --------------------------------------------------------------


def omega_labels() -> dict[str, int]:
    """Label map for Ω: a1..a8 → 0..7, b0 → 8, b1..b8 → 9..16."""
    labels = {f"a{i}": i - 1 for i in range(1, 9)}
    labels["b0"] = 8
    labels.update({f"b{i}": 8 + i for i in range(1, 9)})
    return labels


def pi_labels() -> dict[str, int]:
    """Label map for Π: a1..a4 → 0..3, b1 → 4, b2 → 5."""
    labels = {f"a{i}": i - 1 for i in range(1, 5)}
    labels.update({"b1": 4, "b2": 5})
    return labels


def build_fixture_omega() -> Graph:
    """Bipartite 17-vertex fixture with edges a_l b_0, a_l b_l and a_{l+1} b_l.

    a_9 is read as a_1, so the last family of edges closes into the cycle
    a_1 b_1 a_2 b_2 ... a_8 b_8 a_1 (the published edge table lists b_8 a_1).
    """
    label = omega_labels()
    pairs = []
    for i in range(1, 9):
        following = i % 8 + 1
        pairs.append((label[f"a{i}"], label["b0"]))
        pairs.append((label[f"a{i}"], label[f"b{i}"]))
        pairs.append((label[f"a{following}"], label[f"b{i}"]))
    return from_edge_list(17, pairs)


def build_fixture_pi() -> Graph:
    """Π: every a_i joined to b_1 and b_2, i.e. K_{4,2}."""
    label = pi_labels()
    pairs = [
        (label[f"a{i}"], label[b]) for i in range(1, 5) for b in ("b1", "b2")
    ]
    return from_edge_list(6, pairs)


# Published code tables, by label.
OMEGA_VERTEX_LANDMARKS = ("b1", "b2", "a4", "b5", "b6")
OMEGA_VERTEX_CODES = {
    "a1": (1, 3, 2, 3, 3),
    "a2": (1, 1, 2, 3, 3),
    "a3": (3, 1, 2, 3, 3),
    "a4": (3, 3, 0, 3, 3),
    "a5": (3, 3, 2, 1, 3),
    "a6": (3, 3, 2, 1, 1),
    "a7": (3, 3, 2, 3, 1),
    "a8": (3, 3, 2, 3, 3),
    "b0": (2, 2, 1, 2, 2),
    "b1": (0, 2, 3, 4, 4),
    "b2": (2, 0, 3, 4, 4),
    "b3": (4, 2, 1, 4, 4),
    "b4": (4, 4, 1, 2, 4),
    "b5": (4, 4, 3, 0, 2),
    "b6": (4, 4, 3, 2, 0),
    "b7": (4, 4, 3, 4, 2),
    "b8": (2, 4, 3, 4, 4),
}
OMEGA_EDGE_LANDMARKS = ("a1", "a2", "a3", "a4", "a5", "a6", "a7")
OMEGA_EDGE_CODES = {
    ("a1", "b0"): (0, 1, 1, 1, 1, 1, 1),
    ("a2", "b0"): (1, 0, 1, 1, 1, 1, 1),
    ("a3", "b0"): (1, 1, 0, 1, 1, 1, 1),
    ("a4", "b0"): (1, 1, 1, 0, 1, 1, 1),
    ("a5", "b0"): (1, 1, 1, 1, 0, 1, 1),
    ("a6", "b0"): (1, 1, 1, 1, 1, 0, 1),
    ("a7", "b0"): (1, 1, 1, 1, 1, 1, 0),
    ("a8", "b0"): (1, 1, 1, 1, 1, 1, 1),
    ("a1", "b1"): (0, 1, 2, 2, 2, 2, 2),
    ("a2", "b2"): (2, 0, 1, 2, 2, 2, 2),
    ("a3", "b3"): (2, 2, 0, 1, 2, 2, 2),
    ("a4", "b4"): (2, 2, 2, 0, 1, 2, 2),
    ("a5", "b5"): (2, 2, 2, 2, 0, 1, 2),
    ("a6", "b6"): (2, 2, 2, 2, 2, 0, 1),
    ("a7", "b7"): (2, 2, 2, 2, 2, 2, 0),
    ("a8", "b8"): (1, 2, 2, 2, 2, 2, 2),
    ("b1", "a2"): (1, 0, 2, 2, 2, 2, 2),
    ("b2", "a3"): (2, 1, 0, 2, 2, 2, 2),
    ("b3", "a4"): (2, 2, 1, 0, 2, 2, 2),
    ("b4", "a5"): (2, 2, 2, 1, 0, 2, 2),
    ("b5", "a6"): (2, 2, 2, 2, 1, 0, 2),
    ("b6", "a7"): (2, 2, 2, 2, 2, 1, 0),
    ("b7", "a8"): (2, 2, 2, 2, 2, 2, 1),
    ("b8", "a1"): (0, 2, 2, 2, 2, 2, 2),
}
PI_LANDMARKS = ("a1", "a2", "a3", "b1")
PI_VERTEX_CODES = {
    "a1": (0, 2, 2, 1),
    "a2": (2, 0, 2, 1),
    "a3": (2, 2, 0, 1),
    "a4": (2, 2, 2, 1),
    "b1": (1, 1, 1, 0),
    "b2": (1, 1, 1, 2),
}
PI_EDGE_CODES = {
    ("a1", "b1"): (0, 1, 1, 0),
    ("a2", "b1"): (1, 0, 1, 0),
    ("a3", "b1"): (1, 1, 0, 0),
    ("a4", "b1"): (1, 1, 1, 0),
    ("a1", "b2"): (0, 1, 1, 1),
    ("a2", "b2"): (1, 0, 1, 1),
    ("a3", "b2"): (1, 1, 0, 1),
    ("a4", "b2"): (1, 1, 1, 1),
}

OMEGA_PUBLISHED: dict[Parameter, int | str] = {
    Parameter.BETA: "<=5",
    Parameter.BETA_E: 7,
    Parameter.GAMMA_MD: 6,
    Parameter.GAMMA_EMD: 7,
}
PI_PUBLISHED: dict[Parameter, int | str] = {
    Parameter.BETA: 4,
    Parameter.BETA_E: 4,
    Parameter.GAMMA_MD: 4,
    Parameter.GAMMA_EMD: 4,
}


def _format_code(code: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in code) + ")"


# Witness re-checking ---------------------------------------------------


def _predicate_for(
    g: Graph, dm: DistanceMatrix | None, parameter: Parameter
) -> Callable[[tuple[int, ...]], bool]:
    if parameter is Parameter.GAMMA:
        return DominatingPredicate.from_graph(g)
    if parameter is Parameter.GAMMA_VE:
        return VeDominatingPredicate.from_graph(g, dm)
    if parameter is Parameter.BETA:
        return ResolvingPredicate.from_distances(dm)
    if parameter is Parameter.BETA_E:
        return EdgeResolvingPredicate.from_graph(g, dm)
    if parameter is Parameter.GAMMA_MD:
        return dominant_resolving_predicate(g, dm)
    return ve_dominant_edge_resolving_predicate(g, dm)


def verify_witness(
    g: Graph, result: ParamResult, sample: int = WITNESS_SAMPLE
) -> bool:
    """Re-check a solver result against its defining predicate.

    The witness must satisfy the predicate and have the reported size, and
    up to `sample` same-size sets preceding it in search order must fail.
    """
    parameter = Parameter(result.parameter)
    dm = all_pairs_distances(g) if g.connected else None
    predicate = _predicate_for(g, dm, parameter)
    witness = tuple(result.witness)
    if len(witness) != result.value or not predicate(witness):
        return False
    return not any(
        predicate(earlier)
        for earlier in lexicographically_earlier(witness, g.n, sample)
    )


# Shared check construction ---------------------------------------------


def _witnesses(results: dict[Parameter, ParamResult]) -> dict[str, list[int]]:
    return {str(p): list(r.witness) for p, r in results.items()}


def _solve(
    g: Graph, parameters: Sequence[Parameter], settings: SearchSettings
) -> tuple[dict[Parameter, ParamResult], dict[Parameter, BudgetExceededError]]:
    """Compute parameters together, falling back to one at a time on budget overrun."""
    try:
        return compute_parameters(g, parameters, settings), {}
    except BudgetExceededError:
        logger.info("Budget exceeded in joint computation, retrying one at a time")

    results: dict[Parameter, ParamResult] = {}
    failures: dict[Parameter, BudgetExceededError] = {}
    for parameter in parameters:
        try:
            results.update(compute_parameters(g, [parameter], settings))
        except BudgetExceededError as e:
            failures[parameter] = e
    return results, failures


def _budget_check(
    check_id: str, instance: str, predicted: int | str | None, error: BudgetExceededError
) -> TheoremCheck:
    return TheoremCheck(
        theorem_id=check_id,
        instance=instance,
        predicted=predicted,
        computed=None,
        status=CheckStatus.BUDGET_EXCEEDED,
        note=f"value is at least {error.lower_bound} (stopped after {error.elapsed:.0f}s)",
    )


def _value_check(
    g: Graph,
    check_id: str,
    instance: str,
    predicted: int | str,
    result: ParamResult,
) -> TheoremCheck:
    if isinstance(predicted, str) and predicted.startswith("<="):
        holds = result.value <= int(predicted[2:])
    else:
        holds = result.value == predicted
    note = None
    if not verify_witness(g, result):
        holds = False
        note = "witness failed re-verification"
        logger.error("Witness for %s on %s failed re-verification", check_id, instance)
    return TheoremCheck(
        theorem_id=check_id,
        instance=instance,
        predicted=predicted,
        computed=result.value,
        status=CheckStatus.MATCH if holds else CheckStatus.MISMATCH,
        witnesses={str(result.parameter): list(result.witness)},
        note=note,
    )


def check_family_instance(
    spec: FamilySpec,
    settings: SearchSettings,
    parameters: Sequence[Parameter] | None = None,
    solve_out_of_domain: bool = False,
) -> list[TheoremCheck]:
    """One check per parameter with a closed form on this instance.

    Args:
        spec: Family instance
        settings: Search limits
        parameters: Parameters to check; defaults to those with a closed form
        solve_out_of_domain: Also compute the exact value where no closed
            form applies (the record keeps status out-of-domain)

    Returns:
        Checks in canonical parameter order
    """
    parameters = parameters or THEOREM_PARAMETERS.get(spec.kind, ())
    instance = str(spec)
    predictions = {p: predict(p, spec) for p in PARAMETER_ORDER if p in parameters}

    g = None
    wanted = [p for p, pred in predictions.items() if not isinstance(pred, OutOfDomain)]
    if solve_out_of_domain or wanted:
        g = generate(spec, settings.max_vertices)
    if solve_out_of_domain:
        defined = set(applicable_parameters(g))
        wanted = [p for p in predictions if p in defined]
    results, failures = _solve(g, wanted, settings) if wanted else ({}, {})

    checks: list[TheoremCheck] = []
    for parameter, prediction in predictions.items():
        check_id = theorem_id(parameter, spec)
        if isinstance(prediction, OutOfDomain):
            result = results.get(parameter)
            checks.append(
                TheoremCheck(
                    theorem_id=check_id,
                    instance=instance,
                    predicted=None,
                    computed=result.value if result else None,
                    status=CheckStatus.OUT_OF_DOMAIN,
                    witnesses={str(parameter): list(result.witness)} if result else {},
                    note=prediction.reason,
                )
            )
        elif parameter in failures:
            checks.append(
                _budget_check(check_id, instance, prediction.value, failures[parameter])
            )
        else:
            check = _value_check(
                g, check_id, instance, prediction.value, results[parameter]
            )
            if check.status is CheckStatus.MISMATCH:
                logger.warning(
                    "%s on %s: predicted %d, computed %s",
                    check_id,
                    instance,
                    prediction.value,
                    check.computed,
                    extra={"theorem_id": check_id, "instance": instance},
                )
            checks.append(check)
    return checks


# Suites ----------------------------------------------------------------


def family_specs(
    ranges: Iterable[FamilyRange], bipartite_max_order: int = 9
) -> list[FamilySpec]:
    """Instances of the family suite, in configuration order."""
    specs: list[FamilySpec] = []
    for family_range in ranges:
        kind = FamilyKind(family_range.name)
        for n in family_range.values():
            specs.append(FamilySpec(kind, (n,)))
    for n in range(2, bipartite_max_order // 2 + 1):
        for m in range(n, bipartite_max_order - n + 1):
            specs.append(complete_bipartite(n, m))
    return specs


def run_family_suite(
    ranges: Iterable[FamilyRange],
    settings: SearchSettings | None = None,
    bipartite_max_order: int = 9,
) -> list[TheoremCheck]:
    """Compare every family closed form with the exact value over the ranges.

    Complete bipartite instances K_{n,m} with 2 <= n <= m and n + m up to
    bipartite_max_order are added to the configured ranges.
    """
    settings = settings or SearchSettings()
    checks: list[TheoremCheck] = []
    for spec in family_specs(ranges, bipartite_max_order):
        logger.debug("Checking family instance %s", spec)
        checks.extend(check_family_instance(spec, settings))
    return checks


def run_corona_join_suite(
    pairs: Iterable[tuple[str, str]], settings: SearchSettings | None = None
) -> list[TheoremCheck]:
    """Corona and join closed forms for each operand pair."""
    settings = settings or SearchSettings()
    checks: list[TheoremCheck] = []
    for left_text, right_text in pairs:
        left, right = FamilySpec.parse(left_text), FamilySpec.parse(right_text)
        for kind in (FamilyKind.CORONA, FamilyKind.JOIN):
            checks.extend(check_family_instance(product(kind, left, right), settings))
    return checks


def _code_checks(
    g: Graph,
    dm: DistanceMatrix,
    name: str,
    labels: dict[str, int],
    vertex_landmarks: Sequence[str],
    vertex_codes: dict[str, tuple[int, ...]],
    edge_landmarks: Sequence[str],
    edge_codes: dict[tuple[str, str], tuple[int, ...]],
) -> list[TheoremCheck]:
    checks = []
    landmarks = [labels[x] for x in vertex_landmarks]
    for vertex, expected in vertex_codes.items():
        code = vertex_code(dm, labels[vertex], landmarks)
        checks.append(
            TheoremCheck(
                theorem_id=f"{name}-vertex-codes",
                instance=f"{name}:{vertex}",
                predicted=_format_code(expected),
                computed=_format_code(code),
                status=CheckStatus.MATCH if code == expected else CheckStatus.MISMATCH,
            )
        )
    landmarks = [labels[x] for x in edge_landmarks]
    for (x, y), expected in edge_codes.items():
        code = edge_code(g, dm, g.edge_index(labels[x], labels[y]), landmarks)
        checks.append(
            TheoremCheck(
                theorem_id=f"{name}-edge-codes",
                instance=f"{name}:{x}{y}",
                predicted=_format_code(expected),
                computed=_format_code(code),
                status=CheckStatus.MATCH if code == expected else CheckStatus.MISMATCH,
            )
        )
    return checks


def _fixture_value_checks(
    g: Graph,
    name: str,
    published: dict[Parameter, int | str],
    settings: SearchSettings,
) -> list[TheoremCheck]:
    wanted = [p for p in PARAMETER_ORDER if p in published]
    results, failures = _solve(g, wanted, settings)
    checks = []
    for parameter in wanted:
        check_id = f"{name}-{parameter.value.replace('_', '-')}"
        if parameter in failures:
            checks.append(_budget_check(check_id, name, published[parameter], failures[parameter]))
        else:
            checks.append(
                _value_check(g, check_id, name, published[parameter], results[parameter])
            )
    return checks


def run_fixture_suite(settings: SearchSettings | None = None) -> list[TheoremCheck]:
    """Published values and code tables of the Ω and Π fixtures."""
    settings = settings or SearchSettings()
    omega = build_fixture_omega()
    pi = build_fixture_pi()

    checks = _fixture_value_checks(omega, "omega", OMEGA_PUBLISHED, settings)
    checks += _code_checks(
        omega,
        all_pairs_distances(omega),
        "omega",
        omega_labels(),
        OMEGA_VERTEX_LANDMARKS,
        OMEGA_VERTEX_CODES,
        OMEGA_EDGE_LANDMARKS,
        OMEGA_EDGE_CODES,
    )

    checks += _fixture_value_checks(pi, "pi", PI_PUBLISHED, settings)
    checks += _code_checks(
        pi,
        all_pairs_distances(pi),
        "pi",
        pi_labels(),
        PI_LANDMARKS,
        PI_VERTEX_CODES,
        PI_LANDMARKS,
        PI_EDGE_CODES,
    )

    bipartite = complete_bipartite(4, 2)
    same = is_isomorphic(pi, generate(bipartite))
    checks.append(
        TheoremCheck(
            theorem_id="pi-isomorphism",
            instance="pi",
            predicted=str(bipartite),
            computed=str(bipartite) if same else "not isomorphic",
            status=CheckStatus.MATCH if same else CheckStatus.MISMATCH,
        )
    )
    return checks


def comparison_specs(
    ranges: Iterable[FamilyRange], bipartite_max_order: int = 9
) -> list[FamilySpec]:
    """Instances of families that carry a published γ_md vs γ_emd relation."""
    return [spec for spec in family_specs(ranges, bipartite_max_order) if predict_relation(spec)]


def comparison_table(
    specs: Iterable[FamilySpec], settings: SearchSettings | None = None
) -> list[ComparisonRow]:
    """γ_md against γ_emd per instance, with the published relation alongside.

    Instances whose search runs out of budget are skipped with a warning.
    """
    settings = settings or SearchSettings()
    rows = []
    for spec in specs:
        g = generate(spec, settings.max_vertices)
        try:
            results = compute_parameters(
                g, [Parameter.GAMMA_MD, Parameter.GAMMA_EMD], settings
            )
        except BudgetExceededError as e:
            logger.warning("Skipping %s in comparison table: %s", spec, e)
            continue
        md = results[Parameter.GAMMA_MD].value
        emd = results[Parameter.GAMMA_EMD].value
        rows.append(
            ComparisonRow(
                family=str(spec),
                gamma_md=md,
                gamma_emd=emd,
                relation=relation_of(md, emd),
                expected_relation=predict_relation(spec),
            )
        )
    return rows


def run_comparison_suite(
    specs: Iterable[FamilySpec], settings: SearchSettings | None = None
) -> list[TheoremCheck]:
    """Comparison table rows as checks of the published relation."""
    checks = []
    for row in comparison_table(specs, settings):
        if row.consistent is None:
            status = CheckStatus.OUT_OF_DOMAIN
        else:
            status = CheckStatus.MATCH if row.consistent else CheckStatus.MISMATCH
        checks.append(
            TheoremCheck(
                theorem_id="comparison-relation",
                instance=row.family,
                predicted=row.expected_relation,
                computed={"gamma_md": row.gamma_md, "gamma_emd": row.gamma_emd},
                status=status,
                note=f"γ_md {row.relation} γ_emd",
            )
        )
    return checks


def resolve_bound_ids(selection: str) -> tuple[str, ...]:
    """Expand "all", "general", "tree" or a comma list of bound ids.

    Raises:
        ValueError: If an id is unknown
    """
    if selection in BOUND_SELECTIONS:
        return BOUND_SELECTIONS[selection]
    ids = tuple(part.strip() for part in selection.split(",") if part.strip())
    unknown = [bound_id for bound_id in ids if bound_id not in BOUND_IDS]
    if unknown or not ids:
        raise ValueError(f"Unknown bound id(s): {', '.join(unknown) or selection!r}")
    return ids


def _bound_records(
    g: Graph,
    results: dict[Parameter, ParamResult],
    bound_ids: Sequence[str],
    instance: str,
    prefix: str,
) -> list[TheoremCheck]:
    values = {p: r.value for p, r in results.items()}
    records = []
    for check in bound_checks(g, values, tuple(bound_ids)):
        records.append(
            TheoremCheck(
                theorem_id=f"{prefix}{check.bound_id}",
                instance=instance,
                predicted=check.statement,
                computed=check.slack,
                status=CheckStatus.MATCH if check.holds else CheckStatus.MISMATCH,
                witnesses={} if check.holds else _witnesses(results),
            )
        )
    return records


@dataclass
class ScanResult:
    """Outcome of an exhaustive scan.

    Attributes:
        checks: One record per (bound, graph) evaluated
        diagnostics: Per-line problems; the scan continues past them
        graphs_scanned: Graphs whose parameters were computed
    """

    checks: list[TheoremCheck] = field(default_factory=list)
    diagnostics: list[dict[str, Any]] = field(default_factory=list)
    graphs_scanned: int = 0


def run_exhaustive_scan(
    lines: Iterable[str],
    bound_ids: Sequence[str] = BOUND_IDS,
    settings: SearchSettings | None = None,
) -> ScanResult:
    """Evaluate the selected bounds on every graph of a graph6 stream.

    Args:
        lines: Newline-delimited graph6 text, one graph per line
        bound_ids: Bound ids to evaluate
        settings: Search limits

    Returns:
        ScanResult; counterexamples carry the offending graph6 string as
        their instance
    """
    settings = settings or SearchSettings()
    result = ScanResult()
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
            if not g.connected:
                raise GraphError("graph is disconnected")
            if g.m == 0:
                raise GraphError("graph has no edges")
            if g.n > SCAN_MAX_ORDER:
                raise GraphError(f"graph has {g.n} vertices, scans stop at {SCAN_MAX_ORDER}")
        except GraphError as e:
            logger.warning("Skipping corpus line %d: %s", line_number, e)
            result.diagnostics.append({"line": line_number, "error": str(e)})
            continue

        instance = emit_graph6(g)
        results, failures = _solve(g, PARAMETER_ORDER, settings)
        for parameter, error in failures.items():
            result.checks.append(
                _budget_check(f"scan-{parameter.value.replace('_', '-')}", instance, None, error)
            )
        result.checks.extend(_bound_records(g, results, bound_ids, instance, "bound-"))
        result.graphs_scanned += 1

    logger.info(
        "Scanned %d graph(s), %d diagnostic(s)",
        result.graphs_scanned,
        len(result.diagnostics),
    )
    return result


def random_trees(count: int, max_n: int, seed: int) -> list[Graph]:
    """Deterministic random trees with 2..max_n vertices."""
    rng = random.Random(seed)
    trees = []
    for _ in range(count):
        n = rng.randint(min(2, max_n), max_n)
        trees.append(random_tree(n, seed=rng.randrange(2**31)))
    return trees


def run_tree_suite(
    count: int,
    max_n: int,
    seed: int,
    settings: SearchSettings | None = None,
    bound_ids: Sequence[str] = TREE_BOUND_IDS,
) -> list[TheoremCheck]:
    """Tree bounds, comparability and the legs formula on random trees."""
    settings = settings or SearchSettings()
    checks: list[TheoremCheck] = []
    for tree in random_trees(count, max_n, seed):
        if tree.m == 0:
            continue
        instance = str(tree_spec(tree))
        results, failures = _solve(tree, PARAMETER_ORDER, settings)
        for parameter, error in failures.items():
            checks.append(
                _budget_check(f"tree-{parameter.value.replace('_', '-')}", instance, None, error)
            )
        checks.extend(_bound_records(tree, results, bound_ids, instance, ""))
    return checks


def tree_comparability_suite(
    count: int, max_n: int, seed: int, settings: SearchSettings | None = None
) -> list[TheoremCheck]:
    """γ_md(T) ≥ γ_emd(T) on random trees."""
    return run_tree_suite(count, max_n, seed, settings, bound_ids=("tree-comparability",))


# Reports ---------------------------------------------------------------


def summarize(checks: Iterable[TheoremCheck]) -> dict[str, int]:
    summary = {"match": 0, "mismatch": 0, "out_of_domain": 0, "budget_exceeded": 0}
    for check in checks:
        summary[str(check.status).replace("-", "_")] += 1
    return summary


def sort_checks(checks: Iterable[TheoremCheck]) -> list[TheoremCheck]:
    """Deterministic order by (theorem id, natural instance order)."""
    return sorted(checks, key=lambda c: (c.theorem_id, natural_key(c.instance)))


def build_report(
    checks: Iterable[TheoremCheck],
    config: LabConfig,
    suites: Sequence[str],
    diagnostics: Sequence[dict[str, Any]] | None = None,
) -> dict[str, Any]:
    """Assemble the JSON report document.

    Args:
        checks: All checks produced by the suites
        config: Effective configuration
        suites: Names of the suites that ran
        diagnostics: Corpus diagnostics, included only for scans

    Returns:
        Report with meta, checks and summary sections
    """
    ordered = sort_checks(checks)
    report: dict[str, Any] = {
        "meta": {
            "version": __version__,
            "config": config.to_dict(),
            "seed": config.trees.seed,
            "suites": list(suites),
        },
        "checks": [check.to_dict() for check in ordered],
        "summary": summarize(ordered),
    }
    if diagnostics is not None:
        report["diagnostics"] = list(diagnostics)
    return report


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def exit_status(report: dict[str, Any]) -> int:
    """0 when everything matched, 1 on mismatches, 3 when only budgets ran out."""
    summary = report["summary"]
    if summary["mismatch"]:
        return 1
    if summary["budget_exceeded"]:
        return 3
    return 0
