"""Relation cycles, their signed lifts, and singularity descriptors.

A full repetition-free cycle of a gentle pair is a cyclic arrow sequence
a1 ... an, no arrow repeated, in which every consecutive pair (and the wrap
pair) is a relation.  Because each arrow has at most one relation partner
on each side, these cycles are the disjoint cycles of a partial injection
on arrows and every arrow lies on at most one of them.

The singularity descriptor is the multiset of positive shift integers, one
factor D^b(k)/[n] per cycle of length n.  Over the associated gentle pair,
an even base cycle (even number of special junction vertices, counted with
multiplicity) contributes its length twice; an odd cycle contributes its
doubled length once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import _require_valid, build_g_pair
from .errors import InternalInconsistency, NotGentle
from .quiver import BoundQuiver, Quiver, SkewedGentleTriple, is_finite_dimensional
from .validate import is_gentle


@dataclass(frozen=True)
class CycleClass:
    """One cycle in canonical rotation (lexicographically smallest sequence)."""

    arrows: tuple[str, ...]
    parity: str | None = None  # "even" / "odd", set when a special set is known
    sigma: tuple[str, ...] | None = None  # signs for positions 2..n
    tau: tuple[str, ...] | None = None

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class SingularityDescriptor:
    shifts: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.shifts)) != self.shifts:
            raise ValueError("descriptor shifts must be sorted ascending")

    @staticmethod
    def of(values) -> "SingularityDescriptor":
        return SingularityDescriptor(tuple(sorted(values)))

    @property
    def is_trivial(self) -> bool:
        return not self.shifts

    @property
    def total(self) -> int:
        return sum(self.shifts)


def _canonical_rotation(arrows: tuple[str, ...]) -> tuple[str, ...]:
    k = arrows.index(min(arrows))
    return arrows[k:] + arrows[:k]


def sign_sequences(quiver: Quiver, arrows, special) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Prefix-parity signs (sigma, tau) for positions 2..n of a path.

    sigma_i is "+" when the prefix a1 ... ai passes through an even number
    of special vertices, where passing through counts the junctions t(a_j)
    for j = 2..i; tau_i is the opposite sign.
    """
    amap = quiver.arrow_map
    sigma, tau = [], []
    count = 0
    for name in list(arrows)[1:]:
        if amap[name].target in special:
            count += 1
        sigma.append("+" if count % 2 == 0 else "-")
        tau.append("-" if count % 2 == 0 else "+")
    return tuple(sigma), tuple(tau)


def full_cycles(bq: BoundQuiver, special=None) -> set[CycleClass]:
    """All full repetition-free relation cycles of a gentle pair."""
    gentle, violations = is_gentle(bq)
    if not gentle or not is_finite_dimensional(bq):
        raise NotGentle(f"full_cycles needs a gentle finite-dimensional pair: {violations}")
    nxt = {x: y for x, y in bq.relations}  # y follows x in the written sequence
    cycles = set()
    placed = set()
    for start in sorted(bq.quiver.arrow_map):
        if start in placed:
            continue
        seq = [start]
        seen = {start}
        while seq[-1] in nxt:
            follower = nxt[seq[-1]]
            if follower == start:
                arrows = _canonical_rotation(tuple(seq))
                placed.update(arrows)
                cycles.add(_classify(bq.quiver, arrows, special))
                break
            if follower in seen:
                break  # entered a cycle not through its start; handled from there
            seq.append(follower)
            seen.add(follower)
    return cycles


def _classify(quiver, arrows, special):
    if special is None:
        return CycleClass(arrows)
    junctions = sum(1 for name in arrows if quiver.arrow_map[name].target in special)
    sigma, tau = sign_sequences(quiver, arrows, special)
    return CycleClass(arrows, "even" if junctions % 2 == 0 else "odd", sigma, tau)


def lift_cycles(t: SkewedGentleTriple) -> set[CycleClass]:
    """Full cycles of (Q^g, I^g), produced from the base cycles by sign lifts.

    An even base cycle a1 ... an yields the two cycles a1+ a2^s2 ... an^sn
    and a1- a2^t2 ... an^tn; an odd one yields the single doubled cycle
    a1+ a2^s2 ... an^sn a1- a2^t2 ... an^tn.
    """
    _require_valid(t)
    lifted = set()
    for cycle in full_cycles(t.pair, t.special):
        names = cycle.arrows
        plus = [names[0] + "+"] + [n + s for n, s in zip(names[1:], cycle.sigma)]
        minus = [names[0] + "-"] + [n + s for n, s in zip(names[1:], cycle.tau)]
        if cycle.parity == "even":
            lifted.add(CycleClass(_canonical_rotation(tuple(plus))))
            lifted.add(CycleClass(_canonical_rotation(tuple(minus))))
        else:
            lifted.add(CycleClass(_canonical_rotation(tuple(plus + minus))))
    return lifted


def descriptor_gentle(bq: BoundQuiver) -> SingularityDescriptor:
    return SingularityDescriptor.of(c.length for c in full_cycles(bq))


def descriptor_sg(t: SkewedGentleTriple) -> SingularityDescriptor:
    """Descriptor of the skewed-gentle algebra: equal to the base pair's."""
    _require_valid(t)
    return descriptor_gentle(t.pair)


def descriptor_g(t: SkewedGentleTriple) -> SingularityDescriptor:
    """Descriptor of the associated gentle algebra, from base cycle parities."""
    _require_valid(t)
    shifts = []
    for cycle in full_cycles(t.pair, t.special):
        if cycle.parity == "even":
            shifts.extend([cycle.length, cycle.length])
        else:
            shifts.append(2 * cycle.length)
    return SingularityDescriptor.of(shifts)


def gldim_flags(t: SkewedGentleTriple) -> dict[str, bool]:
    """Finiteness of the global dimension for all three algebras.

    The g flag is recomputed directly on the constructed pair (Q^g, I^g);
    the three answers must agree, anything else is an implementation bug.
    """
    _require_valid(t)
    gentle_flag = descriptor_gentle(t.pair).is_trivial
    sg_flag = descriptor_sg(t).is_trivial
    g_direct = descriptor_gentle(build_g_pair(t).pair).is_trivial
    g_formula = descriptor_g(t).is_trivial
    if not (gentle_flag == sg_flag == g_direct == g_formula):
        raise InternalInconsistency(
            f"gldim flags disagree for {t.name!r}: "
            f"gentle={gentle_flag} sg={sg_flag} g={g_direct}/{g_formula}"
        )
    return {"gentle": gentle_flag, "sg": sg_flag, "g": g_direct}
