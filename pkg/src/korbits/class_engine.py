"""
Equivariant classes of all orbit closures by divided-difference recursion.

Starting from the closed orbits, every weak-order edge ``Y ->_i Y'`` of
degree ``d`` gives ``[Y'] = (1/d) ∂_i [Y]``.  Nodes are processed by
decreasing involution length, so a node is finished only after all of its
parents; when several parents reach it their answers must agree.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .closed_orbits import closed_orbit_classes
from .combinatorics import Family, SymmetricPairConfig
from .degeneracy import YDisciplineError, representative_flag
from .localization import verify_vanishing_outside_closure
from .polyring import DivisionError, Polynomial, divided_difference
from .weak_order import (Edge, OrbitParameter, WeakOrderGraph, expected_nodes,
                         top_parameter, weak_order_step)

__all__ = [
    "PathIndependenceError", "IntegralityError", "ClassTable", "CheckResult",
    "TableReport", "compute_classes", "verify_table", "check_y_discipline",
    "factor_linear", "format_factored",
]

SCHEMA_VERSION = 1


class PathIndependenceError(AssertionError):
    """Two parents of a node produced different classes."""


class IntegralityError(AssertionError):
    """A finished class has a non-integer coefficient."""


def check_y_discipline(p: Polynomial, config: SymmetricPairConfig) -> None:
    """y's may only appear as the full product ``y_1...y_n`` (SO_EVEN), else not at all."""
    nx, ny = p.ring.nx, p.ring.ny
    full = (1,) * ny
    for ex, _ in p:
        ys = ex[nx:]
        if not any(ys):
            continue
        if config.family is not Family.SO_EVEN:
            raise YDisciplineError(f"{config.family.value} class uses y variables: {p}")
        if ys != full:
            raise YDisciplineError(f"y-exponents {ys} are not y_1...y_{ny}")


# -- factored display -------------------------------------------------------

_PRIME = (1 << 61) - 1


def _evaluate(p: Polynomial, point: list[int]) -> int:
    total = 0
    for ex, c in p.as_dict().items():
        v = int(c) % _PRIME
        for a, e in zip(point, ex):
            if e:
                v = v * pow(a, e, _PRIME) % _PRIME
        total += v
    return total % _PRIME


def _linear_candidates(ring) -> list[tuple[str, Polynomial, tuple[int, int, int]]]:
    # (label, polynomial, (i, j, sign)) with j = 0 for a bare x_i
    out = []
    x = ring.x
    for i in range(1, ring.nx + 1):
        out.append((f"x{i}", x(i), (i, 0, 0)))
    for i in range(1, ring.nx + 1):
        for j in range(i + 1, ring.nx + 1):
            out.append((f"x{i} + x{j}", x(i) + x(j), (i, j, 1)))
            out.append((f"x{i} - x{j}", x(i) - x(j), (i, j, -1)))
    return out


def _vanishes_on(p: Polynomial, key: tuple[int, int, int], rng: random.Random) -> bool:
    # cheap necessary test: p vanishes on the hyperplane of the linear form
    i, j, sign = key
    for _ in range(2):
        point = [rng.randrange(1, _PRIME) for _ in range(p.ring.nvars)]
        if j == 0:
            point[i - 1] = 0
        else:
            point[i - 1] = (-sign * point[j - 1]) % _PRIME
        if _evaluate(p, point):
            return False
    return True


def factor_linear(p: Polynomial) -> tuple[int, list[str], Polynomial]:
    """Split ``p`` as ``content * prod(linear x-forms) * rest``.

    Only the forms ``x_i`` and ``x_i ± x_j`` are tried.  This is a display
    aid: the grouping need not match any hand-written form.
    """
    if p.is_zero():
        return 0, [], p
    c = p.content()
    lead = p.terms()[0][1]
    if lead < 0:
        c = -c
    rest = p / c
    rng = random.Random(0)
    factors: list[str] = []
    for label, form, key in _linear_candidates(p.ring):
        while rest.degree() > 0 and _vanishes_on(rest, key, rng):
            try:
                rest = rest.exact_divide(form)
            except DivisionError:
                break
            factors.append(label)
    return c, factors, rest


def format_factored(p: Polynomial, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    c, factors, rest = factor_linear(p)
    # bare variables first, without parentheses
    singles = [f for f in factors if " " not in f]
    parts = singles + [f"({f})" for f in factors if " " in f]
    if rest != 1:
        r = rest.to_latex() if latex else str(rest)
        parts.append(f"({r})" if len(rest) > 1 or factors else r)
    body = "".join(parts)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}{body}"


# -- the table ----------------------------------------------------------------

@dataclass
class ClassTable:
    config: SymmetricPairConfig
    entries: dict[OrbitParameter, Polynomial] = field(default_factory=dict)
    provenance: dict[OrbitParameter, list[tuple[OrbitParameter, int]]] = field(default_factory=dict)

    def __getitem__(self, b: OrbitParameter) -> Polynomial:
        return self.entries[b]

    def __contains__(self, b) -> bool:
        return b in self.entries

    def __len__(self):
        return len(self.entries)

    def parameters(self) -> list[OrbitParameter]:
        """Closed orbits first, dense orbit last; ties broken lexicographically."""
        return sorted(self.entries,
                      key=lambda b: (-b.involution.length(), b.sort_key))

    def lookup(self, label: str) -> Polynomial:
        for b in self.entries:
            if b.label() == label:
                return self.entries[b]
        raise KeyError(label)

    def _flag(self, b: OrbitParameter) -> Optional[str]:
        if self.config.family is not Family.SO_EVEN:
            return None
        from .weak_order import component_representative
        if b.component is None:
            return str(representative_flag(b.involution, self.config))
        w = component_representative(b.involution, b.component, self.config)
        return "<" + ", ".join(f"e{k}" for k in w.word) + ">"

    def to_json(self) -> dict:
        rows = []
        for b in self.parameters():
            row = {"parameter": b.label(), "involution": b.involution.one_line(),
                   "component": b.component, "class": str(self.entries[b]),
                   "factored": format_factored(self.entries[b]),
                   "terms": self.entries[b].to_records(),
                   "parents": [[p.label(), i] for p, i in self.provenance.get(b, [])]}
            flag = self._flag(b)
            if flag is not None:
                row["representative"] = flag
            rows.append(row)
        return {"schema": SCHEMA_VERSION, "family": self.config.family.value,
                "n": self.config.rank, "rows": rows}

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for b in self.parameters():
            flag = self._flag(b)
            extra = f"  {flag}" if flag else ""
            lines.append(f"{b.label()}{extra}: {format_factored(self.entries[b])}")
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        so = self.config.family is Family.SO_EVEN
        head = "| b | representative | class |\n|---|---|---|" if so else \
            "| b | class |\n|---|---|"
        lines = [head]
        for b in self.parameters():
            cls = format_factored(self.entries[b])
            if so:
                lines.append(f"| {b.label()} | {self._flag(b)} | {cls} |")
            else:
                lines.append(f"| {b.label()} | {cls} |")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        so = self.config.family is Family.SO_EVEN
        cols = "lll" if so else "ll"
        lines = [f"\\begin{{tabular}}{{{cols}}}", "\\hline",
                 "$b$ & Representative & $[Y_b]$ \\\\" if so else "$b$ & $[Y_b]$ \\\\",
                 "\\hline"]
        for b in self.parameters():
            cls = format_factored(self.entries[b], latex=True)
            if so:
                flag = self._flag(b).replace("<", "\\langle ").replace(">", "\\rangle")
                flag = flag.replace("e", "e_")
                lines.append(f"${b.label()}$ & ${flag}$ & ${cls}$ \\\\")
            else:
                lines.append(f"${b.label()}$ & ${cls}$ \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"


def _expected_length_drop(edge_source: OrbitParameter, target: OrbitParameter) -> int:
    return edge_source.involution.length() - target.involution.length()


@lru_cache(maxsize=None)
def _compute(config: SymmetricPairConfig) -> tuple[WeakOrderGraph, ClassTable]:
    table = ClassTable(config)
    candidates: dict[OrbitParameter, list[tuple[OrbitParameter, int, Polynomial]]] = {}
    heap: list = []

    def push(b: OrbitParameter):
        heapq.heappush(heap, (-b.involution.length(), b.sort_key, b))

    for datum in closed_orbit_classes(config):
        table.entries[datum.parameter] = datum.polynomial
        table.provenance[datum.parameter] = []
        push(datum.parameter)

    edges: list[Edge] = []
    while heap:
        _, _, b = heapq.heappop(heap)
        if b not in table.entries:
            found = candidates.pop(b)
            _, _, first = found[0]
            for parent, i, q in found[1:]:
                if q != first:
                    raise PathIndependenceError(
                        f"{config}: class of {b} via {found[0][0]} ->_{found[0][1]} "
                        f"is {first}, via {parent} ->_{i} it is {q}")
            table.entries[b] = first
            table.provenance[b] = [(p, i) for p, i, _ in found]
        cls = table.entries[b]
        check_y_discipline(cls, config)
        for i in range(1, config.ambient):
            step = weak_order_step(b, i, config, cls)
            if step is None:
                continue
            target, d = step
            drop = _expected_length_drop(b, target)
            sb = b.involution.left_simple(i)
            want = 1 if target.involution == sb else 2
            if drop != want:
                raise AssertionError(f"edge {b} ->_{i} {target} drops length by {drop}")
            edges.append(Edge(b, target, i, d))
            q = divided_difference(cls, i)
            if d != 1:
                q = q / d
            if target not in candidates:
                candidates[target] = []
                push(target)
            candidates[target].append((b, i, q))

    for b, p in table.entries.items():
        if not p.is_integral():
            raise IntegralityError(f"{config}: class of {b} is not integral: {p}")
    graph = WeakOrderGraph(config, list(table.entries), edges)
    return graph, table


def compute_classes(config: SymmetricPairConfig) -> tuple[WeakOrderGraph, ClassTable]:
    """Weak-order graph and class table, seeded with the closed-orbit classes.

    Raises :class:`PathIndependenceError` if two parents disagree and
    :class:`~korbits.weak_order.AmbiguityError` if a split edge cannot be
    resolved.  Results are cached per configuration.
    """
    return _compute(config)


# -- verification --------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


@dataclass
class TableReport:
    config: SymmetricPairConfig
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(CheckResult(name, bool(passed), detail))

    def summary(self) -> str:
        return "\n".join(c.line() for c in self.checks) + "\n"

    def to_json(self) -> dict:
        return {"schema": SCHEMA_VERSION, "family": self.config.family.value,
                "n": self.config.rank, "pass": self.passed,
                "checks": [{"name": c.name, "pass": c.passed, "detail": c.detail}
                           for c in self.checks]}


def verify_table(table: ClassTable, graph: WeakOrderGraph,
                 config: SymmetricPairConfig, vanishing: bool = True) -> TableReport:
    """Aggregate consistency checks; failures are recorded, never raised."""
    rep = TableReport(config)
    expected = set(expected_nodes(config))
    rep.add("node set", set(graph.nodes) == expected == set(table.entries),
            f"{len(graph.nodes)} nodes, {len(expected)} expected")

    top = top_parameter(config)
    rep.add("top class is 1", table.entries.get(top) == 1, top.label())

    bad = [b.label() for b, p in table.entries.items() if not p.is_integral()]
    rep.add("integral coefficients", not bad, ", ".join(bad))

    bad = []
    for b, p in table.entries.items():
        try:
            check_y_discipline(p, config)
        except YDisciplineError:
            bad.append(b.label())
    rep.add("y discipline", not bad, ", ".join(bad))

    bad = [f"{e.source.label()}->{e.target.label()}" for e in graph.edges
           if table[e.target].degree() != table[e.source].degree() - 1]
    rep.add("degree drops by one along edges", not bad, ", ".join(bad))

    if vanishing:
        failed, total = [], 0
        for b in table.parameters():
            r = verify_vanishing_outside_closure(table[b], b.involution, config)
            total += len(r)
            if not r.passed:
                failed.append(b.label())
        rep.add("vanishing outside closure", not failed,
                f"{total} restrictions" + (f"; failed: {', '.join(failed)}" if failed else ""))

    if config.family is Family.SO_EVEN:
        _, other = compute_classes(SymmetricPairConfig(Family.O_EVEN, config.rank))
        bad = []
        for b in table.entries:
            ob = OrbitParameter(b.involution)
            if b.component == "+":
                s = table[b] + table[OrbitParameter(b.involution, "-")]
                if s != other[ob]:
                    bad.append(b.involution.cycle_string())
            elif b.component is None and table[b] != other[ob]:
                bad.append(b.label())
        rep.add("component sums match o-even", not bad, ", ".join(bad))
    return rep
