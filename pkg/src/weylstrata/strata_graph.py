"""The oriented graph on conjugacy classes: elementary elliptic edges, their images
under parabolic inclusion, connected components, and their factorization as
products of directed paths.

Two constructions are provided.  The engine construction works for every
irreducible type through the class registry.  The label construction uses only
the (r, p) combinatorics of types B and D and scales to larger rank.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import networkx as nx

from . import classical_bc as bc
from . import classical_d as cd
from .partition_core import Partition, partitions
from .weyl_engine.registry import GroupContext, build, factor_catalog


class InvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class StrataEdge:
    source: object
    target: object
    origins: tuple = ()


@dataclass(frozen=True)
class Factorization:
    directed: tuple[int, ...] | None
    undirected: tuple[int, ...] | None

    @property
    def shape(self) -> str | None:
        f = self.directed if self.directed is not None else self.undirected
        return shape_name(f) if f is not None else None


@dataclass
class Stratum:
    members: list
    edges: list[tuple]
    E: str
    C_E: object
    C_prime_E: object
    distinguished: bool
    factorization: Factorization
    cl_members: list = field(default_factory=list)
    min_members: list = field(default_factory=list)
    max_members: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return (
            len(self.cl_members) == 1
            and len(self.min_members) == 1
            and len(self.max_members) == 1
            and self.cl_members == self.max_members
        )


@dataclass
class StrataGraph:
    group: str
    vertices: list
    names: dict
    m: dict
    edges: list[StrataEdge]
    strata: list[Stratum]

    def census(self, reading: str = "vertices") -> Counter:
        return census(self, reading)

    def stratum_of(self, v) -> Stratum:
        for s in self.strata:
            if v in s.members:
                return s
        raise KeyError(v)


def shape_name(f, reading: str = "vertices") -> str:
    """Path factorization (vertex counts) as a product of type-A Coxeter graphs.

    reading="vertices": A_k has k vertices, so a single class is A1.
    reading="rank": A_k has k+1 vertices, so a single class is A0.
    """
    shift = 0 if reading == "vertices" else 1
    if not f:
        return f"A{1 - shift}"
    return "×".join(f"A{k - shift}" for k in f)


# ---------------------------------------------------------------- factorization


def _factor_multisets(n: int, smallest: int = 2):
    if n == 1:
        yield ()
        return
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in _factor_multisets(n // d, d):
                yield (d,) + rest


def path_product(factors) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_node(())
    for k in factors:
        g = nx.cartesian_product(g, nx.path_graph(k, create_using=nx.DiGraph))
    return nx.convert_node_labels_to_integers(g)


def _edge_count(factors) -> int:
    total = 0
    for i, k in enumerate(factors):
        rest = 1
        for j, x in enumerate(factors):
            if j != i:
                rest *= x
        total += (k - 1) * rest
    return total


def factorize_component(g: nx.DiGraph) -> Factorization:
    """Path lengths (vertex counts, decreasing) whose directed-path product is
    isomorphic to g; also reported for the underlying undirected graph."""
    n = g.number_of_nodes()
    directed = undirected = None
    if n == 1:
        return Factorization((1,), (1,))
    ug = g.to_undirected()
    for cand in _factor_multisets(n):
        if _edge_count(cand) != g.number_of_edges():
            continue
        p = path_product(cand)
        f = tuple(sorted(cand, reverse=True))
        if undirected is None and nx.is_isomorphic(ug, p.to_undirected()):
            undirected = f
        if directed is None and nx.is_isomorphic(g, p):
            directed = f
    return Factorization(directed, undirected)


# ---------------------------------------------------------------- assembly


def _assemble(group, vertices, names, m, cl_label, edges, cl_order=None) -> StrataGraph:
    """cl_label maps each CL member to its printable E; strata are listed in
    cl_order of their CL member (vertex order by default), members by m."""
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    for e in edges:
        g.add_edge(e.source, e.target)
    order = {v: i for i, v in enumerate(vertices)}
    comps = sorted(
        (sorted(c, key=lambda v: (m[v], order[v])) for c in nx.weakly_connected_components(g)),
        key=lambda c: min(order[v] for v in c),
    )
    strata = []
    for comp in comps:
        sub = g.subgraph(comp).copy()
        ms = [m[v] for v in comp]
        lo, hi = min(ms), max(ms)
        cl = [v for v in comp if v in cl_label]
        mins = [v for v in comp if m[v] == lo]
        maxs = [v for v in comp if m[v] == hi]
        cprime = cl[0] if len(cl) == 1 else None
        strata.append(
            Stratum(
                members=comp,
                edges=sorted(sub.edges(), key=lambda e: (order[e[0]], order[e[1]])),
                E=cl_label[cprime] if cprime is not None else "?",
                C_E=mins[0] if len(mins) == 1 else None,
                C_prime_E=cprime,
                distinguished=cprime is not None and m[cprime] == 0,
                factorization=factorize_component(sub),
                cl_members=cl,
                min_members=mins,
                max_members=maxs,
            )
        )
    rank = cl_order or order
    strata.sort(
        key=lambda s: (0, rank[s.C_prime_E]) if s.C_prime_E is not None else (1, order[s.members[0]])
    )
    return StrataGraph(group, list(vertices), names, m, edges, strata)


def _dedupe(raw, m) -> list[StrataEdge]:
    by_pair: dict[tuple, list] = {}
    for s, t, origin in raw:
        if m[t] != m[s] + 1:
            raise InvariantError(f"edge {s} -> {t} has m {m[s]} -> {m[t]}")
        by_pair.setdefault((s, t), []).append(origin)
    return [StrataEdge(s, t, tuple(o)) for (s, t), o in sorted(by_pair.items(), key=lambda kv: kv[0])]


# ---------------------------------------------------------------- engine construction


def elementary_edges(ctx: GroupContext) -> list[tuple[int, int]]:
    """The elementary elliptic edges of W itself, as class indices."""
    top = ctx.par.rep(tuple(range(ctx.n)))
    return sorted({(a, b) for a, b, _ in ctx.parabolic_edges(top)})


def full_edge_set(ctx: GroupContext) -> list[StrataEdge]:
    raw = []
    for rep in ctx.reps:
        raw += ctx.parabolic_edges(rep)
    m = {c.index: c.m for c in ctx.classes}
    return _dedupe(raw, m)


def _cl_labels(ctx: GroupContext) -> dict[int, str]:
    out = {}
    for entry, idx in ctx.cl_entries():
        if ctx.exceptional:
            out[idx] = entry.irr.tagged()
        elif ctx.kind == "A":
            out[idx] = str(entry)
        elif ctx.kind in "BC":
            out[idx] = _unip_text(bc.phi2(entry))
        else:
            out[idx] = _unip_text(cd.phi2_d(entry))
    return out


def _unip_text(u) -> str:
    return str(u)


@lru_cache(maxsize=None)
def compute_strata(kind: str, n: int) -> StrataGraph:
    ctx = build(kind, n)
    edges = full_edge_set(ctx)
    verts = [c.index for c in ctx.classes]
    names = {c.index: c.name for c in ctx.classes}
    m = {c.index: c.m for c in ctx.classes}
    cl_order = {idx: k for k, (_, idx) in enumerate(ctx.cl_entries())}
    return _assemble(ctx.name, verts, names, m, _cl_labels(ctx), edges, cl_order)


# ---------------------------------------------------------------- label construction


def bc_parabolic_types(n: int):
    """(A-block sizes as a partition, rank j of the B-factor) up to conjugacy."""
    for j in range(n + 1):
        for lam in partitions(n - j):
            yield lam, j


def _a_coxeter(lam: Partition):
    return [(x,) for x in lam.parts]


@lru_cache(maxsize=None)
def label_strata_bc(n: int) -> StrataGraph:
    raw = []
    for lam, j in bc_parabolic_types(n):
        for s, t in bc.elementary_edges(j):
            a = bc.fuse(n, _a_coxeter(lam), s)
            b = bc.fuse(n, _a_coxeter(lam), t)
            raw.append((a, b, {"A": list(lam.parts), "B": j, "edge": [str(s), str(t)]}))
    verts = bc.enumerate_classes(n)
    m = {C: bc.m_value(C) for C in verts}
    cl = {C: _unip_text(bc.phi2(C)) for C in verts if bc.in_CL(C)}
    return _assemble(f"B{n}", verts, {C: str(C) for C in verts}, m, cl, _dedupe(raw, m))


@lru_cache(maxsize=None)
def label_strata_d(n: int) -> StrataGraph:
    raw = []
    for lam, j, variant in cd.parabolic_types_d(n):
        for s, t in cd.elementary_edges_d(j):
            a = cd.fuse_d(n, _a_coxeter(lam), s, variant or "I")
            b = cd.fuse_d(n, _a_coxeter(lam), t, variant or "I")
            raw.append((a, b, {"A": list(lam.parts), "D": j, "edge": [str(s), str(t)]}))
    verts = cd.enumerate_classes_d(n)
    m = {C: cd.m_value(C) for C in verts}
    cl = {C: _unip_text(cd.phi2_d(C)) for C in verts if cd.in_CL_d(C)}
    return _assemble(f"D{n}", verts, {C: str(C) for C in verts}, m, cl, _dedupe(raw, m))


# ---------------------------------------------------------------- census and the CL union


def census(graph: StrataGraph, reading: str = "vertices") -> Counter:
    out = Counter()
    for s in graph.strata:
        f = s.factorization
        f = f.directed if f.directed is not None else f.undirected
        out[shape_name(f, reading) if f is not None else None] += 1
    return out


CENSUS_EXPECTATIONS = {
    "E8": {"allowed": {"A5", "A4", "A3", "A2×A2", "A2", "A1"}, "exact": {"A5": 1, "A2×A2": 2}},
    "E7": {"allowed": {"A4", "A3", "A2", "A1"}, "exact": {"A4": 1}},
    "E6": {"allowed": {"A2", "A1"}, "exact": {}},
    "F4": {"allowed": {"A4", "A2", "A1"}, "exact": {"A4": 1}},
    "G2": {"allowed": {"A1"}, "exact": {}},
}


def census_violations(graph: StrataGraph) -> list[str]:
    out = []
    for s in graph.strata:
        if s.factorization.directed is None:
            und = s.factorization.undirected
            what = f"undirected {shape_name(und)}" if und is not None else "no factorization"
            out.append(
                f"stratum {s.E} ({', '.join(graph.names[v] for v in s.members)}): "
                f"not a product of directed paths ({what})"
            )
    exp = CENSUS_EXPECTATIONS.get(graph.group)
    if exp is None:
        return out
    got = census(graph)
    for shape, k in got.items():
        if shape not in exp["allowed"]:
            out.append(f"shape {shape} occurs {k} times, outside {sorted(exp['allowed'])}")
    for shape, k in exp["exact"].items():
        if got.get(shape, 0) != k:
            out.append(f"shape {shape} occurs {got.get(shape, 0)} times, expected {k}")
    return out


@dataclass
class UnionReport:
    group: str
    images: dict
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_cl_union(ctx: GroupContext) -> UnionReport:
    """CL(W) is the disjoint union over J in the representative set of rho_J(CL_dist(W_J))."""
    seen: dict[int, str] = {}
    images: dict[str, list[int]] = {}
    violations = []
    for rep in ctx.reps:
        cats = [[c for c in factor_catalog(f.kind, f.rank) if c.cl_dist] for f in rep.factors]
        tag = f"{rep.type_name}{list(rep.J)}"
        images[tag] = []
        for combo in product(*cats):
            c = ctx.rho(rep.factors, [x.word for x in combo])
            images[tag].append(c)
            if c in seen:
                violations.append(
                    f"{ctx.classes[c].name} is reached from {seen[c]} and from {tag}"
                )
            seen[c] = tag
    cl = ctx.cl_classes()
    for c in sorted(set(seen) - cl):
        violations.append(f"{ctx.classes[c].name} (from {seen[c]}) is not in CL")
    for c in sorted(cl - set(seen)):
        violations.append(f"CL member {ctx.classes[c].name} is not reached")
    return UnionReport(ctx.name, images, violations)


def check_cl_union_labels_bc(n: int) -> UnionReport:
    seen: dict = {}
    violations = []
    images = {}
    for lam, j in bc_parabolic_types(n):
        tag = f"A{list(lam.parts)}+B{j}"
        subs = bc.enumerate_CL_dist(j) if j else [None]
        images[tag] = []
        for s in subs:
            C = bc.fuse(n, _a_coxeter(lam), s)
            images[tag].append(C)
            if C in seen:
                violations.append(f"{C} is reached from {seen[C]} and from {tag}")
            seen[C] = tag
    cl = set(bc.enumerate_CL(n))
    for C in sorted(set(seen) - cl):
        violations.append(f"{C} (from {seen[C]}) is not in CL")
    for C in sorted(cl - set(seen)):
        violations.append(f"CL member {C} is not reached")
    return UnionReport(f"B{n}", images, violations)


def check_cl_union_labels_d(n: int) -> UnionReport:
    seen: dict = {}
    violations = []
    images = {}
    for lam, j, variant in cd.parabolic_types_d(n):
        tag = f"A{list(lam.parts)}+D{j}" + (f"[{variant}]" if variant else "")
        subs = cd.enumerate_CL_dist_d(j) if j else [None]
        images[tag] = []
        for s in subs:
            C = cd.fuse_d(n, _a_coxeter(lam), s, variant or "I")
            images[tag].append(C)
            if C in seen:
                violations.append(f"{C} is reached from {seen[C]} and from {tag}")
            seen[C] = tag
    cl = set(cd.enumerate_CL_d(n))
    for C in sorted(set(seen) - cl):
        violations.append(f"{C} (from {seen[C]}) is not in CL")
    for C in sorted(cl - set(seen)):
        violations.append(f"CL member {C} is not reached")
    return UnionReport(f"D{n}", images, violations)


# ---------------------------------------------------------------- export


def to_json(graph: StrataGraph) -> dict:
    name = graph.names.__getitem__
    return {
        "group": graph.group,
        "vertices": [{"name": name(v), "m": graph.m[v]} for v in graph.vertices],
        "edges": [
            {"source": name(e.source), "target": name(e.target), "origins": list(e.origins)}
            for e in graph.edges
        ],
        "strata": [
            {
                "E": s.E,
                "members": [name(v) for v in s.members],
                "C_E": name(s.C_E) if s.C_E is not None else None,
                "C_prime_E": name(s.C_prime_E) if s.C_prime_E is not None else None,
                "distinguished": s.distinguished,
                "factorization": list(s.factorization.directed)
                if s.factorization.directed is not None
                else None,
                "undirected_factorization": list(s.factorization.undirected)
                if s.factorization.undirected is not None
                else None,
                "shape": s.factorization.shape,
            }
            for s in graph.strata
        ],
    }


def to_dot(graph: StrataGraph, stratum: int | None = None) -> str:
    """Digraph with m(C) as rank levels so that path products render as grids."""
    chosen = graph.strata if stratum is None else [graph.strata[stratum]]
    lines = [f'digraph "{graph.group}" {{', "  rankdir=LR;", "  node [shape=box];"]
    ids = {v: f"c{i}" for i, v in enumerate(graph.vertices)}
    for k, s in enumerate(chosen):
        lines.append(f'  subgraph "cluster_{k}" {{')
        lines.append(f"    label={json.dumps(s.E, ensure_ascii=False)};")
        levels: dict[int, list] = {}
        for v in s.members:
            levels.setdefault(graph.m[v], []).append(v)
            lines.append(f"    {ids[v]} [label={json.dumps(graph.names[v], ensure_ascii=False)}];")
        for lvl, vs in sorted(levels.items()):
            lines.append(f"    {{ rank=same; {' '.join(ids[v] for v in vs)} }}  // m={lvl}")
        for a, b in s.edges:
            lines.append(f"    {ids[a]} -> {ids[b]};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(graph: StrataGraph) -> str:
    """One line per stratum: members (most elliptic first) and the attached E."""
    out = []
    for s in graph.strata:
        if graph.group[0] in "EFG":
            members = ",".join(f"[{graph.names[v]}]" for v in s.members)
        else:
            members = ",".join(str(graph.names[v]) for v in s.members)
        out.append(f"{members} ↔ {s.E}  ({s.factorization.shape})")
    return "\n".join(out) + "\n"
