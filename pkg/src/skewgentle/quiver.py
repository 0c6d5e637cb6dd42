"""Immutable quivers, paths, and bound quivers with length-2 zero relations.

Path convention: a path ``p = a1 a2 ... ar`` is written with the rightmost
arrow applied first, so ``t(a_i) = s(a_{i-1})`` for i = 2..r, the source of
``p`` is ``s(ar)`` and its target is ``t(a1)``.  A relation pair ``(x, y)``
(serialized as ``x*y``) declares the length-2 path "y, then x" to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DanglingEndpoint,
    DuplicateName,
    InfiniteDimensional,
    NotComposable,
    UnknownVertex,
)

VertexId = str
ArrowId = str


@dataclass(frozen=True)
class Arrow:
    name: ArrowId
    source: VertexId
    target: VertexId

    def __repr__(self):
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Quiver:
    vertices: frozenset[VertexId]
    arrows: tuple[Arrow, ...]

    @cached_property
    def vertex_list(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def arrow_map(self) -> dict[ArrowId, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def outgoing(self) -> dict[VertexId, tuple[Arrow, ...]]:
        out: dict[VertexId, list[Arrow]] = {v: [] for v in self.vertex_list}
        for a in sorted(self.arrows, key=lambda a: a.name):
            out[a.source].append(a)
        return {v: tuple(items) for v, items in out.items()}

    @cached_property
    def incoming(self) -> dict[VertexId, tuple[Arrow, ...]]:
        inc: dict[VertexId, list[Arrow]] = {v: [] for v in self.vertex_list}
        for a in sorted(self.arrows, key=lambda a: a.name):
            inc[a.target].append(a)
        return {v: tuple(items) for v, items in inc.items()}


def build_quiver(vertices, arrows) -> Quiver:
    """Validate and freeze a quiver; arrows are kept sorted by name."""
    seen_v = set()
    for v in vertices:
        if not v:
            raise DuplicateName("empty vertex id")
        if v in seen_v:
            raise DuplicateName(f"vertex {v!r} declared twice")
        seen_v.add(v)
    seen_a = set()
    for a in arrows:
        if a.name in seen_a:
            raise DuplicateName(f"arrow {a.name!r} declared twice")
        seen_a.add(a.name)
        if a.source not in seen_v:
            raise DanglingEndpoint(f"arrow {a.name!r} starts at unknown vertex {a.source!r}")
        if a.target not in seen_v:
            raise DanglingEndpoint(f"arrow {a.name!r} ends at unknown vertex {a.target!r}")
    return Quiver(frozenset(seen_v), tuple(sorted(arrows, key=lambda a: a.name)))


@dataclass(frozen=True)
class Path:
    """Either a trivial path at ``vertex`` or a nonempty arrow sequence.

    ``arrows`` is kept in written order: ``arrows[-1]`` is applied first.
    """

    arrows: tuple[Arrow, ...] = ()
    vertex: VertexId | None = None

    def __post_init__(self):
        if self.arrows:
            if self.vertex is not None:
                raise ValueError("nontrivial path must not carry a base vertex")
            for i in range(1, len(self.arrows)):
                if self.arrows[i].target != self.arrows[i - 1].source:
                    raise NotComposable(
                        f"arrows {self.arrows[i].name!r} and {self.arrows[i - 1].name!r}"
                        " do not compose"
                    )
        elif self.vertex is None:
            raise ValueError("trivial path needs a vertex")

    @staticmethod
    def trivial(vertex: VertexId) -> "Path":
        return Path((), vertex)

    @staticmethod
    def of(arrows) -> "Path":
        return Path(tuple(arrows), None)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def source(self) -> VertexId:
        return self.vertex if self.is_trivial else self.arrows[-1].source

    @property
    def target(self) -> VertexId:
        return self.vertex if self.is_trivial else self.arrows[0].target

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __repr__(self):
        if self.is_trivial:
            return f"e({self.vertex})"
        return "".join(a.name for a in self.arrows)


def compose(p: Path, q: Path) -> Path:
    """Concatenate ``p`` after ``q`` (q applied first); trivial paths are units."""
    if p.source != q.target:
        raise NotComposable(f"source of {p!r} is {p.source!r}, target of {q!r} is {q.target!r}")
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(p.arrows + q.arrows)


def valency(q: Quiver, v: VertexId) -> int:
    """Number of arrow endpoints at ``v``; a loop contributes twice."""
    if v not in q.vertices:
        raise UnknownVertex(f"vertex {v!r} not in quiver")
    return len(q.outgoing[v]) + len(q.incoming[v])


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver bound by length-2 zero relations.

    ``relations`` holds pairs of arrow names ``(x, y)`` meaning the 2-path
    "y, then x" is zero.
    """

    quiver: Quiver
    relations: frozenset[tuple[ArrowId, ArrowId]] = field(default_factory=frozenset)

    def __post_init__(self):
        amap = self.quiver.arrow_map
        for x, y in self.relations:
            if x not in amap or y not in amap:
                raise UnknownVertex(f"relation {x}*{y} names an unknown arrow")
            if amap[y].target != amap[x].source:
                raise NotComposable(f"relation {x}*{y} is not a composable 2-path")

    @cached_property
    def relation_list(self) -> tuple[tuple[ArrowId, ArrowId], ...]:
        return tuple(sorted(self.relations))


@dataclass(frozen=True)
class SkewedGentleTriple:
    """A bound quiver together with a (candidate) set of special vertices."""

    pair: BoundQuiver
    special: frozenset[VertexId] = field(default_factory=frozenset)
    name: str = "Q"

    def __post_init__(self):
        unknown = self.special - self.pair.quiver.vertices
        if unknown:
            raise UnknownVertex(f"special vertices {sorted(unknown)} not in quiver")

    @cached_property
    def special_list(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self.special))


def successor_arrows(bq: BoundQuiver, a: Arrow) -> list[Arrow]:
    """Arrows g with s(g) = t(a) and (g, a) not a relation, in name order."""
    return [g for g in bq.quiver.outgoing[a.target] if (g.name, a.name) not in bq.relations]


def finite_dimensional_witness(bq: BoundQuiver) -> tuple[ArrowId, ...] | None:
    """Return a relation-free arrow cycle if one exists, else None.

    Works on the arrow-successor graph: one node per arrow, an edge b -> a
    whenever t(b) = s(a) and (a, b) is not a relation.  The quotient algebra
    is finite dimensional exactly when this graph is acyclic.
    """
    arrows = sorted(bq.quiver.arrow_map)
    state = {a: 0 for a in arrows}  # 0 unvisited, 1 on stack, 2 done
    amap = bq.quiver.arrow_map
    for start in arrows:
        if state[start]:
            continue
        stack: list[tuple[ArrowId, list[ArrowId]]] = [
            (start, [g.name for g in successor_arrows(bq, amap[start])])
        ]
        state[start] = 1
        trail = [start]
        while stack:
            node, succs = stack[-1]
            if succs:
                nxt = succs.pop(0)
                if state[nxt] == 1:
                    return tuple(trail[trail.index(nxt):])
                if state[nxt] == 0:
                    state[nxt] = 1
                    trail.append(nxt)
                    stack.append((nxt, [g.name for g in successor_arrows(bq, amap[nxt])]))
            else:
                state[node] = 2
                trail.pop()
                stack.pop()
    return None


def is_finite_dimensional(bq: BoundQuiver) -> bool:
    return finite_dimensional_witness(bq) is None


def relation_free_paths(bq: BoundQuiver) -> list[Path]:
    """All paths avoiding every relation pair, including one trivial per vertex.

    Their number is the dimension of the monomial algebra presented by ``bq``.
    """
    witness = finite_dimensional_witness(bq)
    if witness is not None:
        raise InfiniteDimensional(
            f"relation-free cycle {list(witness)} makes the algebra infinite dimensional",
            witness=witness,
        )
    paths = [Path.trivial(v) for v in bq.quiver.vertex_list]
    for v in bq.quiver.vertex_list:
        # walk in application order, first arrow at index 0
        stack = [[a] for a in reversed(bq.quiver.outgoing[v])]
        while stack:
            walk = stack.pop()
            paths.append(Path(tuple(reversed(walk))))
            for g in reversed(successor_arrows(bq, walk[-1])):
                stack.append(walk + [g])
    paths.sort(key=lambda p: (p.length, tuple(a.name for a in p.arrows), p.source))
    return paths
