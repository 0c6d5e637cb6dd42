"""Special-biserial, gentle, and skewed-gentle checks with violation witnesses.

Rule identifiers are stable and part of the JSON contract:

* ``SB1`` - a vertex starts or ends more than two arrows
* ``SB2`` - an arrow has two relation-free composition partners on one side
* ``G1``  - an arrow has two relation partners on one side
* ``G2``  - a relation is not a length-2 zero relation (unreachable here:
  the data model admits nothing else, the id is reserved for the schema)
* ``FD``  - the presentation has relation-free cycles (infinite dimension)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotGentle
from .quiver import (
    BoundQuiver,
    SkewedGentleTriple,
    finite_dimensional_witness,
    is_finite_dimensional,
    successor_arrows,
    valency,
)


@dataclass(frozen=True)
class Violation:
    rule: str
    items: tuple[str, ...]


@dataclass(frozen=True)
class ValidationReport:
    special_biserial: bool
    gentle: bool
    finite_dimensional: bool
    skewed_gentle: bool
    violations: tuple[Violation, ...]


def _predecessor_arrows(bq, a):
    """Arrows b with t(b) = s(a) and (a, b) not a relation, in name order."""
    return [b for b in bq.quiver.incoming[a.source] if (a.name, b.name) not in bq.relations]


def is_special_biserial(bq: BoundQuiver) -> tuple[bool, list[Violation]]:
    violations = []
    q = bq.quiver
    for v in q.vertex_list:
        if len(q.outgoing[v]) > 2 or len(q.incoming[v]) > 2:
            violations.append(Violation("SB1", (v,)))
    for a in sorted(q.arrows, key=lambda a: a.name):
        nonrel_succ = successor_arrows(bq, a)
        if len(nonrel_succ) > 1:
            violations.append(Violation("SB2", (a.name, *(g.name for g in nonrel_succ))))
        nonrel_pred = _predecessor_arrows(bq, a)
        if len(nonrel_pred) > 1:
            violations.append(Violation("SB2", (a.name, *(b.name for b in nonrel_pred))))
    return not violations, violations


def is_gentle(bq: BoundQuiver) -> tuple[bool, list[Violation]]:
    ok, violations = is_special_biserial(bq)
    for name in sorted(bq.quiver.arrow_map):
        rel_pred = sorted(y for x, y in bq.relations if x == name)
        if len(rel_pred) > 1:
            violations.append(Violation("G1", (name, *rel_pred)))
        rel_succ = sorted(x for x, y in bq.relations if y == name)
        if len(rel_succ) > 1:
            violations.append(Violation("G1", (name, *rel_succ)))
    return not violations, violations


def validate_skewed_gentle(t: SkewedGentleTriple) -> ValidationReport:
    """Decide the triple by the definition: (Q^sp, I^sp) gentle and finite.

    The special_biserial / gentle / finite_dimensional flags describe the
    base pair (Q, I); skewed_gentle and the violations describe (Q^sp, I^sp),
    which subsumes every defect of the base pair.
    """
    from .construct import build_sp_pair  # deferred: construct imports this module

    base = t.pair
    base_sb, _ = is_special_biserial(base)
    base_gentle, _ = is_gentle(base)
    base_fd = is_finite_dimensional(base)

    sp = build_sp_pair(t)
    sp_gentle, violations = is_gentle(sp)
    witness = finite_dimensional_witness(sp)
    if witness is not None:
        violations.append(Violation("FD", witness))
    violations.sort(key=lambda v: (v.rule, v.items))
    return ValidationReport(
        special_biserial=base_sb,
        gentle=base_gentle,
        finite_dimensional=base_fd,
        skewed_gentle=sp_gentle and witness is None,
        violations=tuple(violations),
    )


def admissible_special_sets(bq: BoundQuiver) -> list[tuple[str, ...]]:
    """All vertex subsets S making (Q, S, I) skewed-gentle, by size then lex.

    Each subset is checked through the definition; the only shortcut is that
    vertices of valency >= 3 are skipped, since adding a loop there always
    breaks the at-most-two-arrows condition.
    """
    gentle, _ = is_gentle(bq)
    if not gentle or not is_finite_dimensional(bq):
        raise NotGentle("admissible_special_sets needs a gentle finite-dimensional pair")
    candidates = [v for v in bq.quiver.vertex_list if valency(bq.quiver, v) <= 2]
    admissible = []
    for size in range(len(candidates) + 1):
        for subset in combinations(candidates, size):
            report = validate_skewed_gentle(SkewedGentleTriple(bq, frozenset(subset)))
            if report.skewed_gentle:
                admissible.append(subset)
    return admissible
