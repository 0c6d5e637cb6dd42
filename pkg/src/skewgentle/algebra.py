"""Normal-form arithmetic for the skewed-gentle algebra K Q^sg / <I^sg>.

A nonzero element has a unique basis representative: a lifted path whose
internal junctions at split vertices all use the minus copy (the sign at a
special source or target stays free).  Such a lift exists exactly for the
sg-admissible base paths, i.e. the relation-free paths of (Q, I1) where I1
keeps only the relations with an ordinary middle vertex; a relation with a
special middle vertex turns into the commutativity rewrite that pins the
junction to minus with coefficient +1.

The independent check is dimension_oracle: enumerate every lifted path up
to the length bound given by (Q^sp, I^sp), impose all embedded zero and
commutativity relations, and compute the rank of the relation span by
exact rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import _require_valid, build_g_pair, build_sg_presentation, build_sp_pair, sg_vertex_lifts
from .errors import InternalInconsistency, LimitExceeded, NotSpecial
from .quiver import BoundQuiver, SkewedGentleTriple, relation_free_paths

DEFAULT_ORACLE_CAP = 20000


class _Zero:
    __slots__ = ()

    def __repr__(self):
        return "Zero"


ZERO = _Zero()


@dataclass(frozen=True)
class BasisPath:
    """Normal form of a nonzero element: base arrows plus signed endpoints.

    ``arrows`` holds base arrow names in written order (last entry applied
    first); ``source`` and ``target`` are signed vertex names such as "2-".
    Internal split junctions are implicitly at the minus copy.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __repr__(self):
        if self.is_trivial:
            return f"e({self.source})"
        return f"{''.join(self.arrows)}[{self.source}->{self.target}]"


def admissible_base_pair(t: SkewedGentleTriple) -> BoundQuiver:
    """(Q, I1): the base pair keeping only ordinary-middle relations."""
    amap = t.pair.quiver.arrow_map
    kept = frozenset(
        (x, y) for x, y in t.pair.relations if amap[y].target not in t.special
    )
    return BoundQuiver(t.pair.quiver, kept)


def _signed(vertex, sign):
    return vertex + sign


def _endpoint_signs(vertex, special):
    return ("+", "-") if vertex in special else ("",)


def basis(t: SkewedGentleTriple) -> list[BasisPath]:
    """All normal forms: trivial paths plus signed lifts of admissible paths."""
    _require_valid(t)
    sg_vertex_lifts(t)  # name-collision guard for the signed vertex names
    out = []
    for v in t.pair.quiver.vertex_list:
        for sign in _endpoint_signs(v, t.special):
            name = _signed(v, sign)
            out.append(BasisPath((), name, name))
    for p in relation_free_paths(admissible_base_pair(t)):
        if p.is_trivial:
            continue
        if p.source == p.target and p.source in t.special:
            raise InternalInconsistency(
                f"admissible cycle {p!r} at special vertex {p.source!r};"
                " the triple should have failed validation"
            )
        names = tuple(a.name for a in p.arrows)
        for ssign in _endpoint_signs(p.source, t.special):
            for tsign in _endpoint_signs(p.target, t.special):
                out.append(BasisPath(names, _signed(p.source, ssign), _signed(p.target, tsign)))
    out.sort(key=lambda b: (b.length, b.arrows, b.source, b.target))
    return out


def multiply(t: SkewedGentleTriple, p, q):
    """Product p * q (q applied first) of basis paths, as a normal form.

    Orthogonal endpoints give Zero; a junction on a zero relation (ordinary
    middle vertex) gives Zero; a junction at a split vertex is rewritten to
    the minus copy, which the endpoint-sign representation makes implicit.
    """
    if p is ZERO or q is ZERO:
        return ZERO
    if p.source != q.target:
        return ZERO
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    later, first = p.arrows[-1], q.arrows[0]
    middle = t.pair.quiver.arrow_map[first].target
    if middle in t.special:
        if (later, first) not in t.pair.relations:
            raise InternalInconsistency(
                f"composition {later}*{first} through special vertex {middle!r}"
                " has no base relation"
            )
    elif (later, first) in t.pair.relations:
        return ZERO
    return BasisPath(p.arrows + q.arrows, q.source, p.target)


def longest_relation_free_length(bq: BoundQuiver) -> int:
    return max(p.length for p in relation_free_paths(bq))


def dimension(t: SkewedGentleTriple, which: str) -> int:
    """K-dimension of the chosen algebra: "gentle", "sg", or "g"."""
    _require_valid(t)
    if which == "gentle":
        return len(relation_free_paths(t.pair))
    if which == "g":
        return len(relation_free_paths(build_g_pair(t).pair))
    if which == "sg":
        return len(basis(t))
    raise ValueError(f"unknown algebra {which!r}")


def _rank(rows) -> int:
    """Rank of sparse rows (dict column -> Fraction) by exact elimination."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            piv = pivots[col]
            factor = row[col] / piv[col]
            for c, v in piv.items():
                new = row.get(c, Fraction(0)) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
    return rank


def _oracle_presentation(t, which):
    """Vertices, arrows (name, source, target), relations, and length bound."""
    if which == "gentle":
        bq = t.pair
        triples = [(a.name, a.source, a.target) for a in bq.quiver.arrows]
        return (bq.quiver.vertex_list, triples, set(bq.relations), {},
                longest_relation_free_length(bq))
    if which == "g":
        bq = build_g_pair(t).pair
        triples = [(a.name, a.source, a.target) for a in bq.quiver.arrows]
        return (bq.quiver.vertex_list, triples, set(bq.relations), {},
                longest_relation_free_length(bq))
    if which == "sg":
        pres = build_sg_presentation(t)
        triples = [(a.name, a.source, a.target) for a in pres.arrows]
        # in application order a comm factor reads (first, later)
        comm = {}
        for rel in pres.comm_relations:
            comm[(rel.plus[1], rel.plus[0])] = (rel.minus[1], rel.minus[0])
            comm[(rel.minus[1], rel.minus[0])] = (rel.plus[1], rel.plus[0])
        return (pres.vertex_names, triples,
                set(pres.zero_relations), comm,
                longest_relation_free_length(build_sp_pair(t)))
    raise ValueError(f"unknown algebra {which!r}")


def dimension_oracle(t: SkewedGentleTriple, which: str, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Brute-force dimension: span of all bounded paths modulo all relations.

    Enumerates every path of the presentation up to the length bound, one
    sparse relation row per embedded zero relation or commutativity flip,
    and returns (number of paths) - (rank of the relation rows), degree by
    degree; the relations are homogeneous so degrees do not mix.
    """
    _require_valid(t)
    vertices, triples, zero_pairs, comm, bound = _oracle_presentation(t, which)

    succ: dict[str, list[str]] = {}
    by_name = {name: (src, tgt) for name, src, tgt in triples}
    starting: dict[str, list[str]] = {v: [] for v in vertices}
    for name, src, tgt in sorted(triples):
        starting[src].append(name)
    for name, (_, tgt) in by_name.items():
        succ[name] = starting[tgt]

    total = len(vertices)
    if total > cap:
        raise LimitExceeded(f"oracle path count exceeded cap {cap}")
    dim = len(vertices)  # trivial paths, always independent
    current: list[tuple[str, ...]] = [(name,) for name in sorted(by_name)]
    degree = 1
    while degree <= bound and current:
        total += len(current)
        if total > cap:
            raise LimitExceeded(f"oracle path count exceeded cap {cap}")
        index = {p: i for i, p in enumerate(current)}
        rows = []
        for p in current:
            factors = [(p[i], p[i + 1]) for i in range(len(p) - 1)]
            if any((later, first) in zero_pairs for first, later in factors):
                rows.append({index[p]: Fraction(1)})
                continue
            for i, factor in enumerate(factors):
                partner = comm.get(factor)
                if partner is not None:
                    flipped = p[:i] + partner + p[i + 2:]
                    rows.append({index[p]: Fraction(1), index[flipped]: Fraction(-1)})
        dim += len(current) - _rank(rows)
        if degree == bound:
            break
        current = [p + (nxt,) for p in current for nxt in succ[p[-1]]]
        degree += 1
    return dim


@dataclass(frozen=True)
class CornerData:
    """Dimension bookkeeping for removing one split vertex a-.

    The basis partitions by endpoints at a-: the corner itself (one trivial
    path), M (source a-), N (target a-), and A (neither endpoint).  The
    reduced triple drops a from the special set; its dimension must equal
    dim A - dim M * dim N.
    """

    special_vertex: str
    dim_gamma: int
    dim_gamma_prime: int
    dim_a: int
    dim_m: int
    dim_n: int
    dim_im_phi: int
    dim_m_prime: int
    dim_n_prime: int
    t1_basis: tuple[BasisPath, ...]
    t2_basis: tuple[BasisPath, ...]
    identity_holds: bool


def corner_data(t: SkewedGentleTriple, a: str) -> CornerData:
    _require_valid(t)
    if a not in t.special:
        raise NotSpecial(f"vertex {a!r} is not special in {t.name!r}")
    full = basis(t)
    minus = _signed(a, "-")
    t1, t2, middle = [], [], []
    corner_units = 0
    for p in full:
        at_source = p.source == minus
        at_target = p.target == minus
        if p.is_trivial and at_source:
            corner_units += 1
        elif at_source and at_target:
            raise InternalInconsistency(f"nontrivial basis cycle {p!r} at {minus}")
        elif at_source:
            t1.append(p)
        elif at_target:
            t2.append(p)
        else:
            middle.append(p)
    if corner_units != 1:
        raise InternalInconsistency(f"corner at {minus} is not one dimensional")

    reduced = SkewedGentleTriple(t.pair, t.special - {a}, name=t.name)
    dim_gamma_prime = dimension(reduced, "sg")
    dim_im_phi = len(t1) * len(t2)

    out_first, in_last = _corner_prime_counts(t, a)
    return CornerData(
        special_vertex=a,
        dim_gamma=len(full),
        dim_gamma_prime=dim_gamma_prime,
        dim_a=len(middle),
        dim_m=len(t1),
        dim_n=len(t2),
        dim_im_phi=dim_im_phi,
        dim_m_prime=out_first,
        dim_n_prime=in_last,
        t1_basis=tuple(t1),
        t2_basis=tuple(t2),
        identity_holds=dim_gamma_prime == len(middle) - dim_im_phi,
    )


def _corner_prime_counts(t, a):
    """Sizes of S1 / S2: admissible base paths leaving / entering vertex a."""
    admissible = admissible_base_pair(t)
    outs = t.pair.quiver.outgoing[a]
    ins = t.pair.quiver.incoming[a]
    s1 = s2 = 0
    for p in relation_free_paths(admissible):
        if p.is_trivial:
            continue
        if any(p.arrows[-1].name == o.name for o in outs):
            s1 += 1
        if any(p.arrows[0].name == i.name for i in ins):
            s2 += 1
    return s1, s2
