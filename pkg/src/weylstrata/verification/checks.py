"""The check battery.  Every check returns CheckReports; a failing report
always carries at least one concrete counterexample in details["counterexamples"]."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .. import classical_bc as bc
from .. import classical_d as cd
from .. import strata_graph as sg
from ..exceptional_tables import TABLE_CHECKSUM, checksum, class_table, ws_table
from ..exceptional_tables import data as table_data
from ..partition_core import bar_sequence, partitions, step_bounded_sequences
from ..weyl_engine.registry import build
from .oracle import (
    element_from_cycles,
    flip_last_sign,
    oracle_group,
    sp_compose,
)

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")
CLASSICAL = ("A", "B", "C", "D")
CONJUGATION_SEED = 7
MAX_EXAMPLES = 5


@dataclass
class CheckReport:
    check: str
    group: str
    status: str
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def sort_key(self):
        g = self.group
        return (self.check, g[:1], int(g[1:]) if g[1:].isdigit() else 0, g)

    def to_json(self) -> dict:
        return {"check": self.check, "group": self.group, "status": self.status, "details": self.details}

    def line(self) -> str:
        extra = ""
        if self.status == "fail":
            extra = " " + json.dumps(self.details.get("counterexamples", [])[:2], ensure_ascii=False)
        return f"{self.status.upper():4} {self.check} {self.group}{extra}"


def _report(check, group, bad, **details) -> CheckReport:
    if bad:
        details["counterexamples"] = [str(b) for b in bad[:MAX_EXAMPLES]]
        details["violations"] = len(bad)
    return CheckReport(check, group, "fail" if bad else "pass", details)


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    dt = time.perf_counter() - t
    for r in out:
        r.seconds = dt / len(out)
    return out


def _split(name: str) -> tuple[str, int]:
    return name[0], int(name[1:])


# ---------------------------------------------------------------- tables


def check_tables() -> list[CheckReport]:
    bad = []
    if checksum() != TABLE_CHECKSUM:
        bad.append(f"table checksum {checksum()} differs from the recorded one")
    sizes = {}
    for t in EXCEPTIONAL:
        entries = class_table(t)
        k = sum(e.distinguished for e in entries)
        sizes[t] = k
        if k != table_data.DISTINGUISHED_PREFIX[t]:
            bad.append(f"{t}: {k} distinguished entries")
        if any(e.distinguished for e in entries[k:]) or not all(e.distinguished for e in entries[:k]):
            bad.append(f"{t}: distinguished entries are not a prefix")
    return [_report("tables", "all", bad, distinguished=sizes)]


# ---------------------------------------------------------------- strata


def _strata_reports(graph: sg.StrataGraph, group: str, route: str) -> list[CheckReport]:
    bad = []
    for s in graph.strata:
        if not s.consistent:
            bad.append(
                {
                    "members": [graph.names[v] for v in s.members],
                    "cl": [graph.names[v] for v in s.cl_members],
                    "min": [graph.names[v] for v in s.min_members],
                    "max": [graph.names[v] for v in s.max_members],
                }
            )
    out = [_report(f"strata.consistency.{route}", group, bad, strata=len(graph.strata))]
    viol = sg.census_violations(graph)
    details = {"census": _census_json(sg.census(graph))}
    if group == "G2":
        details["census_rank_reading"] = _census_json(sg.census(graph, "rank"))
    out.append(_report(f"strata.factorization.{route}", group, viol, **details))
    return out


def _census_json(c) -> dict:
    return {str(k): v for k, v in sorted(c.items(), key=lambda kv: str(kv[0]))}


def check_strata_engine(kind: str, n: int) -> list[CheckReport]:
    ctx = build(kind, n)
    graph = sg.compute_strata(kind, n)
    out = _strata_reports(graph, ctx.name, "engine")
    if ctx.exceptional:
        table = set(ctx.table_edges())
        got = set(sg.elementary_edges(ctx))
        bad = [f"{ctx.classes[a].name} -> {ctx.classes[b].name}" for a, b in sorted(table ^ got)]
        out.append(_report("strata.table_edges", ctx.name, bad, edges=len(table)))
    return out


def check_strata_labels(kind: str, n: int) -> list[CheckReport]:
    graph = sg.label_strata_bc(n) if kind == "B" else sg.label_strata_d(n)
    return _strata_reports(graph, graph.group, "labels")


def check_strata_agreement(kind: str, n: int) -> list[CheckReport]:
    """Engine graph and label graph coincide after relabelling."""
    ctx = build(kind, n)
    g = sg.compute_strata(kind, n)
    lab = sg.label_strata_bc(n) if kind in "BC" else sg.label_strata_d(n)
    to = lambda i: ctx.classes[i].classical  # noqa: E731
    e1 = {(to(e.source), to(e.target)) for e in g.edges}
    e2 = {(e.source, e.target) for e in lab.edges}
    s1 = {frozenset(map(to, s.members)) for s in g.strata}
    s2 = {frozenset(s.members) for s in lab.strata}
    bad = [f"edge {a} -> {b}" for a, b in sorted(e1 ^ e2)]
    bad += [f"stratum {sorted(map(str, s))}" for s in sorted(s1 ^ s2, key=lambda s: sorted(map(str, s)))]
    return [_report("strata.engine_vs_labels", ctx.name, bad, edges=len(e1))]


# ---------------------------------------------------------------- CL as a union over parabolics


def check_parametrization_engine(kind: str, n: int) -> list[CheckReport]:
    r = sg.check_cl_union(build(kind, n))
    return [_report("cl.parametrization.engine", r.group, r.violations, parabolics=len(r.images))]


def check_parametrization_labels(kind: str, n: int) -> list[CheckReport]:
    r = sg.check_cl_union_labels_bc(n) if kind == "B" else sg.check_cl_union_labels_d(n)
    return [_report("cl.parametrization.labels", r.group, r.violations, parabolics=len(r.images))]


# ---------------------------------------------------------------- oracle


def _oracle_label(group, ci, tag_one) -> tuple:
    c = group.classes[ci]
    neg, pos = c.cycle_type
    tag = None
    if group.name[0] == "D" and not neg and all(x % 2 == 0 for x in pos):
        tag = "I" if tag_one(pos) in c.members else "II"
    return neg, pos, tag


def _cycles_block(start: int, lengths, negative: bool):
    out = []
    for k in lengths:
        out.append((list(range(start, start + k)), negative))
        start += k
    return out, start


def _label_element(n: int, neg, pos, tag=None, offset: int = 0) -> tuple[int, ...]:
    """Element of the signed-permutation group on coordinates offset..n-1."""
    cyc, at = _cycles_block(offset, pos, False)
    more, _ = _cycles_block(at, neg, True)
    x = element_from_cycles(n, cyc + more)
    if tag == "II":
        x = flip_last_sign(x)
    return x


def _key(C) -> tuple:
    return C.negative_cycles(), C.positive_cycles(), getattr(C, "split", None)


def check_oracle_classical(kind: str, n: int) -> list[CheckReport]:
    group = oracle_group(kind, n)
    name = f"{kind}{n}"
    index = {}
    for i, c in enumerate(group.classes):
        for x in c.members:
            index[x] = i
    tag_one = lambda pos: _label_element(n, (), pos)  # noqa: E731
    olabel = {i: _oracle_label(group, i, tag_one) for i in range(len(group.classes))}
    if kind == "D":
        labels = cd.enumerate_classes_d(n)
        size, mval = cd.class_size_d, cd.m_value
    else:
        labels = bc.enumerate_classes(n)
        size, mval = bc.class_size, bc.m_value
    by_key = {_key(C): C for C in labels}
    out = []

    bad = []
    if len(labels) != len(group.classes):
        bad.append(f"{len(labels)} labels vs {len(group.classes)} classes")
    if set(by_key) != set(olabel.values()):
        bad += [f"unmatched {k}" for k in sorted(set(by_key) ^ set(olabel.values()), key=str)]
    for i, k in olabel.items():
        C = by_key.get(k)
        if C is None:
            continue
        c = group.classes[i]
        if mval(C) != c.m:
            bad.append(f"{C}: m {mval(C)} vs fixed space {c.m}")
        if size(C) != c.size:
            bad.append(f"{C}: size {size(C)} vs {c.size}")
    split_labels = sum(1 for C in labels if getattr(C, "split", None))
    split_oracle = sum(1 for k in olabel.values() if k[2])
    if split_labels != split_oracle:
        bad.append(f"split classes {split_labels} vs {split_oracle}")
    out.append(
        _report("oracle.classes", name, bad, classes=len(group.classes), order=group.order, split=split_oracle)
    )

    # elementary edges: merge two negative t-cycles by a transposition
    bad = []
    edges = cd.elementary_edges_d(n) if kind == "D" else bc.elementary_edges(n)
    for C, C2 in edges:
        t = next(k for k in set(C.negative_cycles()) if C.negative_cycles().count(k) >= 3)
        rest = list(C.negative_cycles())
        rest.remove(t)
        rest.remove(t)
        x = element_from_cycles(n, _cycles_block(0, [t, t] + rest, True)[0])
        swap = list(range(1, n + 1))
        swap[0], swap[t] = swap[t], swap[0]
        y = sp_compose(x, tuple(swap))
        got = olabel[index[y]]
        if got != _key(C2) or group.classes[index[y]].m != group.classes[index[x]].m + 1:
            bad.append(f"{C} -> {C2}: merged element lies in {got}")
    out.append(_report("oracle.elementary_edges", name, bad, edges=len(edges)))

    # fusion along every standard parabolic type, all classes of each factor
    bad = []
    count = 0
    if kind == "D":
        shapes = [(lam, j, var) for lam, j, var in cd.parabolic_types_d(n)]
    else:
        shapes = [(lam, j, None) for lam, j in sg.bc_parabolic_types(n)]
    for lam, j, var in shapes:
        if j == 0:
            subs = [None]
        elif kind == "D":
            subs = cd.d_class_labels(j)
        else:
            subs = bc.enumerate_classes(j)
        for types in product(*(list(partitions(k)) for k in lam.parts)):
            for sub in subs:
                cyc = []
                at = 0
                for mu in types:
                    block, at = _cycles_block(at, mu.parts, False)
                    cyc += block
                if sub is not None:
                    cyc += _cycles_block(at, sub.positive_cycles(), False)[0]
                    at += sum(sub.positive_cycles())
                    cyc += _cycles_block(at, sub.negative_cycles(), True)[0]
                x = element_from_cycles(n, cyc)
                if (sub is not None and getattr(sub, "split", None) == "II") or var == "II":
                    x = flip_last_sign(x)
                a_types = [mu.parts for mu in types]
                if kind == "D":
                    want = cd.fuse_d(n, a_types, sub, var or "I")
                else:
                    want = bc.fuse(n, a_types, sub)
                got = olabel[index[x]]
                count += 1
                if got != _key(want):
                    bad.append(f"A{list(lam.parts)}+{kind}{j}{var or ''} {list(map(str, types))} {sub}: {want} vs {got}")
    out.append(_report("oracle.fusion", name, bad, cases=count))
    return out


def check_oracle_exceptional(name: str) -> list[CheckReport]:
    kind, n = _split(name)
    group = oracle_group(kind, n)
    ctx = build(kind, n)
    bad = []
    seen = {}
    for i, c in enumerate(group.classes):
        m = group.matrices[c.rep]
        j = ctx.class_of(m)
        if j in seen:
            bad.append(f"oracle classes {seen[j]} and {i} both identified as {ctx.classes[j].name}")
        seen[j] = i
        if ctx.classes[j].m != c.m:
            bad.append(f"{ctx.classes[j].name}: m {ctx.classes[j].m} vs {c.m}")
        if ctx.class_size(j) != c.size:
            bad.append(f"{ctx.classes[j].name}: size {ctx.class_size(j)} vs {c.size}")
    if len(seen) != len(ctx.classes):
        bad.append(f"{len(ctx.classes)} registry classes vs {len(group.classes)} oracle classes")
    out = [_report("oracle.classes", name, bad, classes=len(group.classes), order=group.order)]

    # each tabulated edge is realized by multiplying by a reflection
    reflections = [ctx.rs.reflection(r) for r in range(ctx.rs.nroots)]
    owner = {}
    for i, c in enumerate(group.classes):
        for k in c.members:
            owner[k] = i
    cls = seen
    bad = []
    edges = ctx.table_edges()
    for a, b in edges:
        x = group.matrices[group.classes[cls[a]].rep]
        if not any(owner[(x @ s).tobytes()] == cls[b] for s in reflections):
            bad.append(f"{ctx.classes[a].name} -> {ctx.classes[b].name}")
    out.append(_report("oracle.elementary_edges", name, bad, edges=len(edges)))
    return out


def check_conjugation(kind: str, n: int, samples: int = 3) -> list[CheckReport]:
    """Seeded random conjugates of every representative land in the same class."""
    ctx = build(kind, n)
    rng = random.Random(CONJUGATION_SEED)
    gens = ctx.rs.simple_reflections
    bad = []
    for c in ctx.classes:
        m = ctx.matrix(c.index)
        for _ in range(samples):
            w = np.eye(ctx.rs.rank, dtype=np.int64)
            for _ in range(rng.randint(1, 4 * ctx.rs.rank)):
                w = w @ gens[rng.randrange(ctx.rs.rank)]
            x = w @ m @ _inverse(ctx, w)
            got = ctx.class_of(x)
            if got != c.index:
                bad.append(f"{c.name} conjugate identified as {ctx.classes[got].name}")
                break
    return [_report("engine.conjugation_invariance", ctx.name, bad, classes=len(ctx.classes))]


def _inverse(ctx, w):
    word = ctx.rs.reduced_word(w)
    return ctx.rs.word_to_matrix(tuple(reversed(word)))


# ---------------------------------------------------------------- fibers and distinguished classes


def check_fibers(kind: str, n: int) -> list[CheckReport]:
    if kind == "D":
        units = cd.enumerate_unip_char2_d(n)
        fib, phi, mx, mn, in_cl = cd.fiber_d, cd.phi2_d, cd.max_nonelliptic_d, cd.min_elliptic_d, cd.in_CL_d
        mval = cd.m_value
        classes = cd.enumerate_classes_d(n)
    else:
        units = bc.enumerate_unip_char2(n)
        fib, phi, mx, mn, in_cl = bc.fiber, bc.phi2, bc.max_nonelliptic, bc.min_elliptic, bc.in_CL
        mval = bc.m_value
        classes = bc.enumerate_classes(n)
    bad = []
    covered = []
    for u in units:
        f = fib(u)
        covered += f
        if not f:
            bad.append(f"{u}: empty fiber")
            continue
        if any(phi(C) != u for C in f):
            bad.append(f"{u}: fiber member with another image")
        ms = [mval(C) for C in f]
        lo, hi = min(ms), max(ms)
        mins = [C for C, m in zip(f, ms) if m == lo]
        maxs = [C for C, m in zip(f, ms) if m == hi]
        cl = [C for C in f if in_cl(C)]
        if len(mins) != 1 or len(maxs) != 1:
            bad.append(f"{u}: {len(mins)} minimizers, {len(maxs)} maximizers")
            continue
        if mx(u) != maxs[0]:
            bad.append(f"{u}: rule gives {mx(u)}, scan gives {maxs[0]}")
        if mn(u) != mins[0]:
            bad.append(f"{u}: rule gives {mn(u)}, scan gives {mins[0]}")
        if cl != maxs:
            bad.append(f"{u}: CL members {list(map(str, cl))} vs maximizer {maxs[0]}")
    if sorted(covered) != sorted(classes):
        bad.append("fibers do not partition the classes")
    return [_report("fibers.extremal", f"{kind}{n}", bad, fibers=len(units))]


def check_distinguished_classical(kind: str, n: int) -> list[CheckReport]:
    if kind == "D":
        cl = cd.enumerate_CL_d(n)
        wall = {C for C in cl if cd.satisfies_char2_distinguished_d(cd.phi2_d(C))}
        dist = set(cd.enumerate_CL_dist_d(n))
        ell = {C for C in cl if cd.is_elliptic(C)}
    else:
        cl = bc.enumerate_CL(n)
        wall = {C for C in cl if bc.satisfies_char2_distinguished(bc.phi2(C))}
        dist = set(bc.enumerate_CL_dist(n))
        ell = {C for C in cl if bc.is_elliptic(C)}
    bad = [f"{C}" for C in sorted((wall ^ ell) | (dist ^ ell))]
    return [_report("distinguished.elliptic", f"{kind}{n}", bad, count=len(ell))]


def check_distinguished_engine(kind: str, n: int) -> list[CheckReport]:
    ctx = build(kind, n)
    ell = {i for i in ctx.cl_classes() if ctx.classes[i].m == 0}
    if kind == "A":
        # the Coxeter class is the only elliptic class, and it lies in CL
        bad = [] if ell == {i for i, c in enumerate(ctx.classes) if c.m == 0} and len(ell) == 1 else ["A"]
    else:
        dist = ctx.cl_dist_classes()
        bad = [ctx.classes[i].name for i in sorted(dist ^ ell)]
    return [_report("distinguished.elliptic", ctx.name, bad, count=len(ell))]


# ---------------------------------------------------------------- sequences and inclusions


def check_sequences(n: int) -> list[CheckReport]:
    seqs = set(step_bounded_sequences(n))
    out = []
    bars = [bar_sequence(C.r) for C in bc.enumerate_CL_dist(n)]
    bad = []
    if len(bars) != len(set(bars)) or set(bars) != seqs:
        bad.append(f"B{n}: {len(bars)} classes vs {len(seqs)} sequences")
    bad += [f"{C}: ws total {sum(bc.ws_type(C).parts)}" for C in bc.enumerate_CL_dist(n) if sum(bc.ws_type(C).parts) != n]
    out.append(_report("ws.bijection", f"B{n}", bad, count=len(seqs)))
    if n >= 4:
        even = {s for s in seqs if s.parts[0] % 2 == 0}
        bars = [bar_sequence(C.r) for C in cd.enumerate_CL_dist_d(n)]
        bad = []
        if len(bars) != len(set(bars)) or set(bars) != even:
            bad.append(f"D{n}: {len(bars)} classes vs {len(even)} sequences")
        bad += [f"{C}: ws total {cd.ws_type_d(C).size()}" for C in cd.enumerate_CL_dist_d(n) if cd.ws_type_d(C).size() != n]
        out.append(_report("ws.bijection", f"D{n}", bad, count=len(even)))
    return out


def check_inclusions(n: int) -> list[CheckReport]:
    out = []
    target = bc.char2_distinguished_set(n)
    bad = []
    for flavor in bc.GroupFlavor:
        bad += [f"{flavor.value} {x}" for x in sorted(bc.dist_bipartitions_oddchar(n, flavor), key=str) if x not in target]
        for nu, nu2 in bc.mixed_inputs(n, flavor):
            x = bc.mixed_bipartition(nu, nu2, flavor, n)
            if x not in target:
                bad.append(f"{flavor.value} mixed {nu} {nu2} -> {x}")
    out.append(_report("springer.inclusion", f"B{n}", bad, target=len(target)))
    if n >= 4:
        target = cd.char2_distinguished_set_d(n)
        bad = [f"{x}" for x in sorted(cd.dist_bipartitions_oddchar_d(n), key=str) if x not in target]
        for nu, nu2 in cd.mixed_inputs_d(n):
            x = cd.mixed_bipartition_d(nu, nu2, n)
            if x not in target:
                bad.append(f"mixed {nu} {nu2} -> {x}")
        out.append(_report("springer.inclusion", f"D{n}", bad, target=len(target)))
    return out


# ---------------------------------------------------------------- minimum length


def check_min_length(kind: str, n: int) -> list[CheckReport]:
    ctx = build(kind, n)
    bad = []
    rows = 0
    if ctx.exceptional:
        for e in ws_table(ctx.name):
            i = ctx.index_of_label(e.carter)
            if i not in ctx.cl_dist_classes():
                continue
            rows += 1
            got, want = ctx.min_length_in_class(i), n + e.ws.root_count()
            if got != want:
                bad.append(f"[{e.printed}]: min length {got}, rank + roots {want}")
    else:
        for C in bc.enumerate_CL_dist(n):
            i = ctx.index_of_classical(C)
            rows += 1
            got, want = ctx.min_length_in_class(i), n + bc.ws_root_count(C)
            if got != want:
                bad.append(f"{C}: min length {got}, rank + roots {want}")
    return [_report("min_length", ctx.name, bad, classes=rows)]


# ---------------------------------------------------------------- driver


def run_all(
    max_classical_rank: int = 6,
    types=None,
    label_rank: int = 8,
    sequence_rank: int = 12,
    inclusion_rank: int = 10,
    oracle_rank: int = 6,
) -> list[CheckReport]:
    """types: names such as {"B", "D", "F4"}; None means everything."""
    types = set(types) if types is not None else set(CLASSICAL) | set(EXCEPTIONAL)
    jobs = [(check_tables,)]
    for t in EXCEPTIONAL:
        if t in types:
            k, n = _split(t)
            jobs += [
                (check_strata_engine, k, n),
                (check_parametrization_engine, k, n),
                (check_distinguished_engine, k, n),
                (check_conjugation, k, n),
            ]
            if t in ("G2", "F4"):
                jobs += [(check_oracle_exceptional, t), (check_min_length, k, n)]
    for k in CLASSICAL:
        if k not in types:
            continue
        lo = {"A": 1, "B": 2, "C": 2, "D": 4}[k]
        for n in range(lo, max_classical_rank + 1):
            jobs += [
                (check_strata_engine, k, n),
                (check_parametrization_engine, k, n),
                (check_distinguished_engine, k, n),
                (check_conjugation, k, n),
            ]
            if k != "A":
                jobs.append((check_strata_agreement, k, n))
            if k in "BD" and n <= oracle_rank:
                jobs.append((check_oracle_classical, k, n))
            if k == "B" and n <= 4:
                jobs.append((check_min_length, k, n))
        if k in "BD":
            for n in range(lo, label_rank + 1):
                jobs += [
                    (check_strata_labels, k, n),
                    (check_fibers, k, n),
                    (check_distinguished_classical, k, n),
                    (check_parametrization_labels, k, n),
                ]
            if k == "B":
                for n in range(label_rank + 1, sequence_rank + 1):
                    jobs.append((check_parametrization_labels, k, n))
    if "B" in types or "D" in types:
        jobs += [(check_sequences, n) for n in range(1, sequence_rank + 1)]
        jobs += [(check_inclusions, n) for n in range(1, inclusion_rank + 1)]
    reports = []
    for job in jobs:
        reports += _timed(job[0], *job[1:])
    if "D" not in types:
        reports = [r for r in reports if not r.group.startswith("D")]
    if "B" not in types:
        reports = [r for r in reports if not r.group.startswith("B")]
    return sorted(reports, key=CheckReport.sort_key)


def reports_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1, ensure_ascii=False, sort_keys=True) + "\n"
