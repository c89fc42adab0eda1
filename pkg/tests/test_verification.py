import ast
from pathlib import Path

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from weylstrata.verification import oracle, reports_json, run_all
from weylstrata.verification.oracle import (
    element_from_cycles,
    fixed_dim,
    oracle_group,
    signed_cycle_type,
    sp_compose,
    sp_generators,
    sp_inverse,
    sp_matrix,
)


def test_oracle_counts():
    for kind, n, classes, order in [("B", 3, 10, 48), ("D", 4, 13, 192), ("F", 4, 25, 1152), ("G", 2, 6, 12)]:
        g = oracle_group(kind, n)
        assert (len(g.classes), g.order) == (classes, order)
        assert sum(c.size for c in g.classes) == order


def test_oracle_is_independent_of_label_code():
    tree = ast.parse(Path(oracle.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module or "")
            imported.update(a.name for a in node.names)
    assert not imported & {"classical_bc", "classical_d", "registry", "strata_graph", "bc", "cd"}


def test_signed_cycle_type():
    x = element_from_cycles(4, [([0, 1], True), ([2], False), ([3], True)])
    assert signed_cycle_type(x) == ((2, 1), (1,))


@settings(max_examples=50)
@given(st.permutations(range(1, 6)), st.lists(st.sampled_from((1, -1)), min_size=5, max_size=5))
def test_signed_permutation_group_laws(perm, signs):
    a = tuple(s * x for s, x in zip(signs, perm))
    ident = tuple(range(1, 6))
    assert sp_compose(a, sp_inverse(a)) == ident
    for g in sp_generators("B", 5):
        assert np.array_equal(sp_matrix(sp_compose(a, g)), sp_matrix(a) @ sp_matrix(g))
    neg, pos = signed_cycle_type(a)
    assert fixed_dim(sp_matrix(a)) == len(pos)


def test_small_battery():
    reports = run_all(max_classical_rank=4, types={"B", "D", "G2"}, label_rank=5, sequence_rank=6, inclusion_rank=5)
    assert reports and all(r.ok for r in reports)
    ids = {r.check for r in reports}
    assert {"oracle.classes", "oracle.fusion", "oracle.elementary_edges", "fibers.extremal", "min_length"} <= ids


def test_failures_carry_counterexamples():
    reports = run_all(types={"F4"})
    for r in reports:
        if not r.ok:
            assert r.details["counterexamples"]


def test_reports_are_deterministic():
    kw = dict(max_classical_rank=4, types={"B", "G2"}, label_rank=4, sequence_rank=5, inclusion_rank=4)
    assert reports_json(run_all(**kw)) == reports_json(run_all(**kw))
