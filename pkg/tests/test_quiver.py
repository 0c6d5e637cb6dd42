import pytest

from skewgentle import (
    Arrow,
    BoundQuiver,
    DanglingEndpoint,
    DuplicateName,
    InfiniteDimensional,
    NotComposable,
    Path,
    UnknownVertex,
    build_quiver,
    compose,
    finite_dimensional_witness,
    is_finite_dimensional,
    relation_free_paths,
    valency,
)


def path_names(p):
    return tuple(a.name for a in p.arrows)


def test_build_quiver_fix_a(fix_a):
    q = fix_a.pair.quiver
    assert q.vertices == {"1", "2"}
    assert len(q.arrows) == 2
    assert q.arrow_map["a"] == Arrow("a", "1", "2")


def test_build_quiver_single_vertex():
    q = build_quiver(["1"], [])
    assert q.vertices == {"1"} and q.arrows == ()


def test_build_quiver_dangling_endpoint():
    with pytest.raises(DanglingEndpoint):
        build_quiver(["1", "2"], [Arrow("x", "1", "3")])


def test_build_quiver_duplicates():
    with pytest.raises(DuplicateName):
        build_quiver(["1", "1"], [])
    with pytest.raises(DuplicateName):
        build_quiver(["1"], [Arrow("a", "1", "1"), Arrow("a", "1", "1")])


def test_compose_fix_a(fix_a):
    amap = fix_a.pair.quiver.arrow_map
    a, b = Path.of([amap["a"]]), Path.of([amap["b"]])
    ab = compose(a, b)
    assert path_names(ab) == ("a", "b")
    assert ab.length == 2 and ab.source == "2" and ab.target == "2"


def test_compose_identities(fix_a):
    amap = fix_a.pair.quiver.arrow_map
    a = Path.of([amap["a"]])
    assert compose(Path.trivial("2"), a) == a
    assert compose(a, Path.trivial("1")) == a


def test_compose_not_composable(fix_a):
    amap = fix_a.pair.quiver.arrow_map
    a = Path.of([amap["a"]])
    with pytest.raises(NotComposable):
        compose(a, a)


def test_compose_associative_and_additive(fix_b):
    amap = fix_b.pair.quiver.arrow_map
    a, b, g = (Path.of([amap[n]]) for n in "abg")
    left = compose(compose(g, b), a)
    right = compose(g, compose(b, a))
    assert left == right
    assert left.length == 3 and left.source == "1" and left.target == "1"


def test_valency_examples(fix_a, fix_c):
    assert valency(fix_a.pair.quiver, "1") == 2
    assert valency(fix_c.pair.quiver, "2") == 1
    loop = build_quiver(["v"], [Arrow("l", "v", "v")])
    assert valency(loop, "v") == 2
    with pytest.raises(UnknownVertex):
        valency(fix_a.pair.quiver, "9")


def test_finite_dimensional_fix_a(fix_a, fix_c):
    assert is_finite_dimensional(fix_a.pair)
    assert is_finite_dimensional(fix_c.pair)


def test_infinite_without_relations(fix_a):
    free = BoundQuiver(fix_a.pair.quiver, frozenset())
    witness = finite_dimensional_witness(free)
    assert witness is not None
    assert set(witness) == {"a", "b"}
    # the witness really is a closed relation-free walk
    amap = free.quiver.arrow_map
    for i, name in enumerate(witness):
        follower = witness[(i + 1) % len(witness)]
        assert amap[name].target == amap[follower].source


def test_relation_free_paths_fix_a(fix_a):
    paths = relation_free_paths(fix_a.pair)
    assert len(paths) == 4
    labels = {(path_names(p), p.source) for p in paths}
    assert labels == {((), "1"), ((), "2"), (("a",), "1"), (("b",), "2")}


def test_relation_free_paths_fix_c(fix_c):
    assert len(relation_free_paths(fix_c.pair)) == 3


def test_relation_free_paths_dropped_relation(fix_a):
    smaller = BoundQuiver(fix_a.pair.quiver, frozenset({("a", "b")}))
    paths = relation_free_paths(smaller)
    assert len(paths) == 5
    assert ("b", "a") in {path_names(p) for p in paths}


def test_relation_free_paths_infinite(fix_a):
    with pytest.raises(InfiniteDimensional):
        relation_free_paths(BoundQuiver(fix_a.pair.quiver, frozenset()))


def test_path_length_bound(fix_a, fix_b):
    # no relation-free path can repeat an arrow in the finite case
    for t in (fix_a, fix_b):
        top = max(p.length for p in relation_free_paths(t.pair))
        assert top < len(t.pair.quiver.arrows) + 1
