import pytest

from skewgentle import (
    Arrow,
    BoundQuiver,
    NotSkewedGentle,
    SkewedGentleTriple,
    build_g_pair,
    build_quiver,
    build_sg_presentation,
    build_sp_pair,
    canonical_involution,
    is_finite_dimensional,
    is_gentle,
    random_triple,
    relation_free_paths,
)


def test_sp_pair_fix_a2(fix_a, fix_a2):
    sp = build_sp_pair(fix_a2)
    assert sp.quiver.vertices == fix_a.pair.quiver.vertices
    assert set(sp.quiver.arrow_map) == {"a", "b", "sp_2"}
    loop = sp.quiver.arrow_map["sp_2"]
    assert loop.source == loop.target == "2"
    assert sp.relations == fix_a.pair.relations | {("sp_2", "sp_2")}


def test_sp_pair_empty_special(fix_a):
    assert build_sp_pair(fix_a) == fix_a.pair


def test_sp_pair_fix_b3(fix_b, fix_b3):
    sp = build_sp_pair(fix_b3)
    assert set(sp.quiver.arrow_map) == {"a", "b", "g", "sp_3"}
    assert sp.quiver.arrow_map["sp_3"].source == "3"


def test_sp_pair_loop_name_collision():
    quiver = build_quiver(["1", "2"], [Arrow("sp_1", "1", "2")])
    t = SkewedGentleTriple(BoundQuiver(quiver), frozenset({"1"}))
    sp = build_sp_pair(t)
    assert "sp_1_2" in sp.quiver.arrow_map


def test_sg_presentation_fix_a2(fix_a2):
    pres = build_sg_presentation(fix_a2)
    assert pres.vertex_names == ("1", "2+", "2-")
    assert sorted(a.name for a in pres.arrows) == [
        "a@1@2+", "a@1@2-", "b@2+@1", "b@2-@1",
    ]
    assert pres.zero_relations == {
        ("a@1@2+", "b@2+@1"), ("a@1@2+", "b@2-@1"),
        ("a@1@2-", "b@2+@1"), ("a@1@2-", "b@2-@1"),
    }
    (comm,) = pres.comm_relations
    assert comm.plus == ("b@2+@1", "a@1@2+")
    assert comm.minus == ("b@2-@1", "a@1@2-")


def test_sg_presentation_fix_b3(fix_b3):
    pres = build_sg_presentation(fix_b3)
    assert len(pres.vertices) == 4
    assert len(pres.arrows) == 5
    assert len(pres.zero_relations) == 4
    assert len(pres.comm_relations) == 1
    (comm,) = pres.comm_relations
    assert comm.plus == ("g@3+@1", "b@2@3+")
    assert comm.minus == ("g@3-@1", "b@2@3-")


def test_sg_presentation_no_special(fix_a):
    pres = build_sg_presentation(fix_a)
    assert len(pres.arrows) == len(fix_a.pair.quiver.arrows)
    assert len(pres.zero_relations) == len(fix_a.pair.relations)
    assert not pres.comm_relations


def test_g_pair_fix_a2(fix_a2):
    g = build_g_pair(fix_a2)
    q = g.pair.quiver
    assert q.vertices == {"1+", "1-", "2"}
    assert set(q.arrow_map) == {"a+", "a-", "b+", "b-"}
    assert q.arrow_map["a+"] == Arrow("a+", "1+", "2")
    assert q.arrow_map["b-"] == Arrow("b-", "2", "1-")
    assert g.pair.relations == {
        ("a+", "b+"), ("a-", "b-"), ("b+", "a-"), ("b-", "a+"),
    }


def test_g_pair_fix_b3(fix_b3):
    g = build_g_pair(fix_b3)
    assert g.pair.quiver.vertices == {"1+", "1-", "2+", "2-", "3"}
    assert g.pair.relations == {
        ("a+", "g+"), ("a-", "g-"),
        ("b+", "a+"), ("b-", "a-"),
        ("g+", "b-"), ("g-", "b+"),
    }


def test_g_pair_no_special_is_doubling(fix_a):
    g = build_g_pair(fix_a)
    assert g.pair.quiver.vertices == {"1+", "1-", "2+", "2-"}
    assert g.pair.relations == {
        ("a+", "b+"), ("b+", "a+"), ("a-", "b-"), ("b-", "a-"),
    }
    # two disjoint relabeled copies: dimension doubles
    assert len(relation_free_paths(g.pair)) == 2 * len(relation_free_paths(fix_a.pair))


def test_g_pair_always_gentle_and_finite():
    for seed in range(60):
        t = random_triple(seed, 6, 7)
        g = build_g_pair(t)
        ok, violations = is_gentle(g.pair)
        assert ok, violations
        assert is_finite_dimensional(g.pair)


def test_construction_counts():
    from conftest import all_fixture_triples

    triples = all_fixture_triples() + [random_triple(s, 6, 7) for s in range(40)]
    for t in triples:
        q = t.pair.quiver
        pres = build_sg_presentation(t)
        assert len(pres.vertices) == len(q.vertices) + len(t.special)
        expected_arrows = sum(
            2 ** ((a.source in t.special) + (a.target in t.special)) for a in q.arrows
        )
        assert len(pres.arrows) == expected_arrows
        g = build_g_pair(t)
        assert len(g.pair.quiver.vertices) == 2 * len(q.vertices) - len(t.special)
        assert len(g.pair.quiver.arrows) == 2 * len(q.arrows)
        assert len(g.pair.relations) == 2 * len(t.pair.relations)


def test_involution_fix_a2(fix_a2):
    inv = canonical_involution(fix_a2)
    assert inv.vertex_map == {"1+": "1-", "1-": "1+", "2": "2"}
    assert inv.arrow_map == {"a+": "a-", "a-": "a+", "b+": "b-", "b-": "b+"}


def test_involution_all_special():
    t = SkewedGentleTriple(
        BoundQuiver(build_quiver(["1", "2"], [Arrow("a", "1", "2")])),
        frozenset({"1", "2"}),
    )
    inv = canonical_involution(t)
    assert all(v == w for v, w in inv.vertex_map.items())
    assert all(a != b for a, b in inv.arrow_map.items())


def test_involution_is_order_two(fix_b3):
    inv = canonical_involution(fix_b3)
    for m in (inv.vertex_map, inv.arrow_map):
        assert all(m[m[k]] == k for k in m)
    assert {v for v, w in inv.vertex_map.items() if v == w} == set(fix_b3.special)


def test_constructions_reject_invalid(fix_a):
    bad = SkewedGentleTriple(fix_a.pair, frozenset({"1", "2"}), name="A")
    for op in (build_sg_presentation, build_g_pair, canonical_involution):
        with pytest.raises(NotSkewedGentle):
            op(bad)


def test_signed_vertex_name_collision():
    from skewgentle import NameCollision

    quiver = build_quiver(["2", "2+"], [])
    t = SkewedGentleTriple(BoundQuiver(quiver), frozenset({"2"}))
    with pytest.raises(NameCollision):
        build_sg_presentation(t)


def test_comm_relations_flip_only_the_middle():
    for seed in range(40):
        t = random_triple(seed, 6, 7)
        pres = build_sg_presentation(t)
        for rel in pres.comm_relations:
            plus_late, plus_first = (pres.arrow_map[n] for n in rel.plus)
            minus_late, minus_first = (pres.arrow_map[n] for n in rel.minus)
            # shared outer endpoints
            assert plus_first.source == minus_first.source
            assert plus_late.target == minus_late.target
            # middle vertex differs exactly in its sign
            assert plus_first.target == plus_late.source
            assert minus_first.target == minus_late.source
            assert plus_first.target.endswith("+")
            assert minus_first.target.endswith("-")
            assert plus_first.target[:-1] == minus_first.target[:-1]


def test_sp_loops_iff_special_generated():
    for seed in range(40):
        t = random_triple(seed, 6, 7)
        base_arrows = set(t.pair.quiver.arrow_map)
        sp = build_sp_pair(t)
        fresh_loops = {
            a.source for a in sp.quiver.arrows
            if a.name not in base_arrows and a.source == a.target
        }
        assert fresh_loops == set(t.special)


def test_involution_preserves_relations_randomized():
    for seed in range(40):
        t = random_triple(seed, 6, 7)
        g = build_g_pair(t)
        inv = canonical_involution(t)
        mapped = {(inv.arrow_map[x], inv.arrow_map[y]) for x, y in g.pair.relations}
        assert mapped == set(g.pair.relations)
