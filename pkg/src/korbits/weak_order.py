"""
Weak-order graph on orbit parameters.

Orbits are labelled by involutions (fixed-point-free ones for SP).  For
SO_EVEN a fixed-point-free involution labels two orbits, told apart by a
sign.  An edge ``b ->_i c`` means ``c`` is the dense orbit over the
``P_i``-saturation of ``b``; its degree ``d`` is the degree of the
projection to ``G/P_i`` restricted to the closure of ``b``, and the class
of ``c`` is ``(1/d) * ∂_i`` of the class of ``b``.

Rules for the orthogonal families, with ``b`` an involution:

* ``l(s_i b) > l(b)``: the step does nothing;
* otherwise if ``s_i b s_i != b``: black edge to ``s_i b s_i``, ``d = 1``;
* otherwise: blue edge to ``s_i b``, ``d = 2``.

For SP the last case also does nothing, so every edge is black.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from .combinatorics import (Family, Permutation, Sign, SymmetricPairConfig,
                            enumerate_fpf_involutions, enumerate_involutions,
                            longest_element)
from .degeneracy import check_orbit_parameter, representative_flag
from .polyring import Polynomial, divided_difference, restrict_at_fixed_point

__all__ = [
    "OrbitParameter", "Edge", "Step", "WeakOrderGraph", "AmbiguityError",
    "weak_order_step", "resolve_split_edge", "component_representative",
    "generate_graph", "expected_nodes", "top_parameter", "closed_parameters",
]


class AmbiguityError(RuntimeError):
    """The restriction test could not single out one target component."""


@dataclass(frozen=True)
class OrbitParameter:
    """An involution, plus a component sign for split SO_EVEN orbits."""

    involution: Permutation
    component: Optional[Sign] = None

    def __post_init__(self):
        if not self.involution.is_involution():
            raise ValueError(f"{self.involution} is not an involution")
        if self.component not in (None, "+", "-"):
            raise ValueError(f"bad component {self.component!r}")

    @property
    def sort_key(self):
        return (self.involution.word, self.component or "")

    def label(self) -> str:
        return (self.component or "") + self.involution.cycle_string()

    def validate(self, config: SymmetricPairConfig) -> None:
        check_orbit_parameter(self.involution, config)
        split = config.family is Family.SO_EVEN and not self.involution.fixed_points()
        if split != (self.component is not None):
            raise ValueError(f"parameter {self.label()} has the wrong component "
                             f"marking for {config}")

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return self.label()


class Edge(NamedTuple):
    source: OrbitParameter
    target: OrbitParameter
    root: int
    degree: int

    @property
    def color(self) -> str:
        return "blue" if self.degree == 2 else "black"


class Step(NamedTuple):
    target: OrbitParameter
    degree: int


def _orthogonal_step(b: Permutation, i: int) -> Optional[tuple[Permutation, int]]:
    sb = b.left_simple(i)
    if sb.length() > b.length():
        return None
    conj = sb.right_simple(i)
    if conj != b:
        return conj, 1
    return sb, 2


def _symplectic_step(b: Permutation, i: int) -> Optional[tuple[Permutation, int]]:
    sb = b.left_simple(i)
    if sb.length() > b.length():
        return None
    conj = sb.right_simple(i)
    if conj == b:
        return None
    return conj, 1


def component_representative(b: Permutation, sign: Sign,
                             config: SymmetricPairConfig) -> Permutation:
    """Fixed point lying in the SO_EVEN orbit ``(b, sign)``.

    ``'+'`` is the coordinate flag built by :func:`representative_flag`;
    ``'-'`` applies ``s_n`` to it, which exchanges the values ``n`` and
    ``n+1``.
    """
    if config.family is not Family.SO_EVEN:
        raise ValueError("components only exist for so-even")
    if b.fixed_points():
        raise ValueError(f"{b.cycle_string()} has fixed points and does not split")
    w = representative_flag(b, config).as_permutation()
    if w is None:
        raise AssertionError("representative of a fixed-point-free involution "
                             "should be a coordinate flag")
    if sign == "+":
        return w
    if sign == "-":
        return w.left_simple(config.rank)
    raise ValueError(f"bad sign {sign!r}")


def resolve_split_edge(source: OrbitParameter, i: int, config: SymmetricPairConfig,
                       class_of_source: Polynomial) -> Sign:
    """Pick the target component of a split-to-split edge.

    ``∂_i`` of the source class represents one of the two target components;
    its restriction is nonzero at the representative of that component and
    zero at the other one.
    """
    if source.component is None:
        raise ValueError(f"{source} is not a split parameter")
    target = source.involution.conjugate_simple(i)
    if target.fixed_points() or target == source.involution:
        raise ValueError(f"edge {source} ->_{i} does not join split orbits")
    q = divided_difference(class_of_source, i)
    hits = [s for s in ("+", "-")
            if not restrict_at_fixed_point(q, component_representative(target, s, config),
                                           config).is_zero()]
    if len(hits) != 1:
        raise AmbiguityError(
            f"restriction test for {source} ->_{i} {target.cycle_string()} "
            f"is ambiguous: nonzero at {hits or 'neither'} component(s)")
    return hits[0]


def weak_order_step(b: OrbitParameter, i: int, config: SymmetricPairConfig,
                    class_of_source: Optional[Polynomial] = None) -> Optional[Step]:
    """Apply the simple reflection ``s_i``; ``None`` means ``s_i . Q_b = Q_b``.

    Split-to-split SO_EVEN edges need ``class_of_source`` to decide which
    target component is reached.
    """
    b.validate(config)
    N = config.ambient
    if not 1 <= i < N:
        raise ValueError(f"root index {i} out of range 1..{N - 1}")
    inv = b.involution
    if config.family is Family.SP:
        res = _symplectic_step(inv, i)
        return None if res is None else Step(OrbitParameter(res[0]), 1)
    res = _orthogonal_step(inv, i)
    if res is None:
        return None
    target, d = res
    if config.family is not Family.SO_EVEN:
        return Step(OrbitParameter(target), d)
    src_split = b.component is not None
    tgt_split = not target.fixed_points()
    if src_split and not tgt_split:
        # the two components each cover the unsplit target birationally
        if d != 2:
            raise AssertionError("split source with unsplit target must come from a blue edge")
        return Step(OrbitParameter(target), 1)
    if src_split and tgt_split:
        if d != 1:
            raise AssertionError("split source and target must be joined by a black edge")
        if class_of_source is None:
            raise ValueError(f"edge {b} ->_{i} joins split orbits; the source "
                             "class is needed to resolve it")
        sign = resolve_split_edge(b, i, config, class_of_source)
        return Step(OrbitParameter(target, sign), 1)
    if tgt_split:
        raise AssertionError(f"unsplit {b} cannot reach split {target.cycle_string()}")
    return Step(OrbitParameter(target), d)


def closed_parameters(config: SymmetricPairConfig) -> list[OrbitParameter]:
    w0 = longest_element(config.ambient)
    if config.family is Family.SO_EVEN:
        return [OrbitParameter(w0, "+"), OrbitParameter(w0, "-")]
    return [OrbitParameter(w0)]


def top_parameter(config: SymmetricPairConfig) -> OrbitParameter:
    N = config.ambient
    if config.family is Family.SP:
        word = [0] * N
        for k in range(1, N, 2):
            word[k - 1], word[k] = k + 1, k
        return OrbitParameter(Permutation(tuple(word)))
    return OrbitParameter(Permutation.identity(N))


def expected_nodes(config: SymmetricPairConfig) -> list[OrbitParameter]:
    """Every orbit parameter of the family, independent of graph generation."""
    N = config.ambient
    if config.family is Family.SP:
        return [OrbitParameter(b) for b in enumerate_fpf_involutions(N)]
    out = []
    for b in enumerate_involutions(N):
        if config.family is Family.SO_EVEN and not b.fixed_points():
            out += [OrbitParameter(b, "+"), OrbitParameter(b, "-")]
        else:
            out.append(OrbitParameter(b))
    return sorted(out)


@dataclass
class WeakOrderGraph:
    config: SymmetricPairConfig
    nodes: list[OrbitParameter] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self):
        self.nodes = sorted(set(self.nodes))
        self.edges = sorted(set(self.edges),
                            key=lambda e: (e.source.sort_key, e.root, e.target.sort_key))

    def incoming(self, node: OrbitParameter) -> list[Edge]:
        return [e for e in self.edges if e.target == node]

    def outgoing(self, node: OrbitParameter) -> list[Edge]:
        return [e for e in self.edges if e.source == node]

    def bottoms(self) -> list[OrbitParameter]:
        has_in = {e.target for e in self.edges}
        return [v for v in self.nodes if v not in has_in]

    def tops(self) -> list[OrbitParameter]:
        has_out = {e.source for e in self.edges}
        return [v for v in self.nodes if v not in has_out]

    def is_acyclic(self) -> bool:
        # every edge strictly lowers the involution length
        return all(e.target.involution.length() < e.source.involution.length()
                   for e in self.edges)

    def to_dot(self) -> str:
        cfg = self.config
        lines = [f'digraph "{cfg.family.value}_n{cfg.rank}" {{',
                 "  rankdir=BT;",
                 "  node [shape=plaintext];"]
        for v in self.nodes:
            lines.append(f'  "{v.label()}";')
        for e in self.edges:
            lines.append(f'  "{e.source.label()}" -> "{e.target.label()}" '
                         f'[label="{e.root}", color={e.color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "family": self.config.family.value,
            "n": self.config.rank,
            "nodes": [v.label() for v in self.nodes],
            "edges": [{"source": e.source.label(), "target": e.target.label(),
                       "root": e.root, "degree": e.degree, "color": e.color}
                      for e in self.edges],
        }


def generate_graph(config: SymmetricPairConfig,
                   class_of: Optional[Callable[[OrbitParameter], Polynomial]] = None
                   ) -> WeakOrderGraph:
    """Close the closed-orbit parameters under :func:`weak_order_step`.

    For SO_EVEN without ``class_of`` the graph is produced together with the
    classes (split edges are resolved from them).
    """
    if config.family is Family.SO_EVEN and class_of is None:
        from .class_engine import compute_classes
        return compute_classes(config)[0]
    seen = set(closed_parameters(config))
    queue = sorted(seen)
    edges = []
    while queue:
        b = queue.pop(0)
        for i in range(1, config.ambient):
            cls = class_of(b) if (class_of is not None and b.component) else None
            step = weak_order_step(b, i, config, cls)
            if step is None:
                continue
            edges.append(Edge(b, step.target, i, step.degree))
            if step.target not in seen:
                seen.add(step.target)
                queue.append(step.target)
    return WeakOrderGraph(config, list(seen), edges)
