import pytest

from codescent import (
    FocusInD,
    NotACover,
    UnknownObject,
    build_shape,
    codescent_at,
    cover_split,
    funnel_monoid,
    reduce_funnel,
    reduce_prune_morphisms,
    reduce_prune_objects,
    reduce_strict_funnel,
)
from codescent.selftest import random_diagram


def sig(v):
    return (v.status, v.degree, v.defect, v.bound)


@pytest.fixture
def square_instance(rng):
    pair = build_shape("commutative_square")
    x = random_diagram(rng, pair.cat, 3, hi=1, max_dim=2, cells=1)
    return pair, x


def test_prune_objects_shrinks_subset_only(square_instance):
    pair, x = square_instance
    red = reduce_prune_objects(x, pair, "c")
    assert red.tag == "prune-objects"
    assert red.pair.cat == pair.cat
    assert red.diagram is x
    assert red.pair.dset == pair.dset  # every member already maps to c
    assert "3 of 3" in red.note


def test_prune_objects_can_drop_blind_members(square_instance):
    pair, x = square_instance
    red = reduce_prune_objects(x, pair, "d1")
    assert red.pair.dset == frozenset({"e", "d1"})  # d2 never sees d1
    assert "2 of 3" in red.note


def test_prune_morphisms_makes_subset_left_absorbant(rng):
    pair = build_shape("free_square")  # dset {e}: betas get dropped
    x = random_diagram(rng, pair.cat, 2, hi=1, max_dim=2, cells=1)
    red = reduce_prune_morphisms(x, pair, "c")
    assert red.tag == "prune-morphisms"
    assert set(red.pair.cat.non_identity_morphisms()) \
        == {"alpha1", "alpha2", "gamma1", "gamma2"}
    assert "dropped 2" in red.note


def test_funnel_drops_everything_outside_subset_and_focus(square_instance):
    pair, x = square_instance
    red = reduce_funnel(x, pair, "d1")
    assert red.tag == "funnel"
    assert red.focus == "d1"
    # the subset survives whole; only the uninvolved object c goes
    assert set(red.pair.cat.objects) == {"e", "d1", "d2"}
    assert red.pair.dset == pair.dset
    assert red.note == "3 objects retained"
    assert set(red.diagram.at) == {"e", "d1", "d2"}

    # pruning objects first tightens the funnel to the members that
    # actually see the focus
    pruned = reduce_prune_objects(x, pair, "d1")
    tight = reduce_funnel(pruned.diagram, pruned.pair, "d1")
    assert set(tight.pair.cat.objects) == {"e", "d1"}


def test_funnel_is_everything_when_all_members_converge(rng):
    pair = build_shape("terminal_extension", n=3)
    x = random_diagram(rng, pair.cat, 2, hi=1, max_dim=2, cells=1)
    red = reduce_funnel(x, pair, "c_inf")
    assert set(red.pair.cat.objects) == set(pair.cat.objects)
    assert red.note == "4 objects retained"


def test_strict_funnel_requires_focus_outside(square_instance):
    pair, x = square_instance
    with pytest.raises(FocusInD):
        reduce_strict_funnel(x, pair, "d1")
    red = reduce_strict_funnel(x, pair, "c")
    assert red.tag == "strict-funnel"
    assert red.pair.dset == frozenset({"e", "d1", "d2"})


def test_reductions_reject_unknown_focus(square_instance):
    pair, x = square_instance
    for fn in (reduce_prune_objects, reduce_funnel, reduce_strict_funnel):
        with pytest.raises(UnknownObject):
            fn(x, pair, "ghost")


def test_verdict_preserved_along_a_reduction_chain(rng):
    # funnel with a genuine monoid: chain prune-objects -> funnel ->
    # prune-morphisms and compare against the strict funnel, all at the
    # same cutoff
    pair = funnel_monoid(k=2, arrows=2, action="cyclic")
    x = random_diagram(rng, pair.cat, 2, hi=1, max_dim=2, cells=1)
    base = codescent_at(x, pair, "c", cutoff=3)

    r1 = reduce_prune_objects(x, pair, "c")
    v1 = codescent_at(r1.diagram, r1.pair, "c", cutoff=3)
    r2 = reduce_funnel(r1.diagram, r1.pair, "c")
    v2 = codescent_at(r2.diagram, r2.pair, "c", cutoff=3)
    r3 = reduce_prune_morphisms(r2.diagram, r2.pair, "c")
    v3 = codescent_at(r3.diagram, r3.pair, "c", cutoff=3)
    strict = reduce_strict_funnel(x, pair, "c")
    v4 = codescent_at(strict.diagram, strict.pair, "c", cutoff=3)

    assert sig(v1) == sig(base)
    assert sig(v2) == sig(base)
    assert sig(v3) == sig(base)
    assert sig(v4) == sig(base)


def test_prune_morphisms_leaves_only_subset_sources(rng):
    pair = build_shape("free_square")
    x = random_diagram(rng, pair.cat, 2, hi=1, max_dim=2, cells=1)
    red = reduce_prune_morphisms(x, pair, "c")
    assert red.pair.cat.non_identity_morphisms()
    for m in red.pair.cat.non_identity_morphisms():
        assert red.pair.cat.source(m) in red.pair.dset


def test_reductions_reject_foreign_diagram(rng):
    pair = build_shape("commutative_square")
    other = build_shape("arrow")
    x = random_diagram(rng, other.cat, 2, hi=1, max_dim=2, cells=1)
    with pytest.raises(UnknownObject):
        reduce_prune_morphisms(x, pair, "c")
    with pytest.raises(UnknownObject):
        reduce_funnel(x, pair, "c")


def test_cover_split_verdicts(rng):
    pair = build_shape("free_square")
    x = random_diagram(rng, pair.cat, 3, hi=1, max_dim=2, cells=1)
    members = [("e", "d1", "c"), ("e", "d2", "c")]
    parts = cover_split(x, pair, members)
    assert [p.tag for p in parts] == ["cover-split", "cover-split"]
    # verdicts inside each member agree with the ambient ones
    for part in parts:
        for obj in part.pair.cat.objects:
            got = codescent_at(part.diagram, part.pair, obj)
            want = codescent_at(x, pair, obj)
            assert sig(got) == sig(want)


def test_cover_split_validation(square_instance):
    pair, x = square_instance
    with pytest.raises(NotACover):
        cover_split(x, pair, [])
    with pytest.raises(NotACover):
        cover_split(x, pair, [("e", "d1", "d2")])  # misses c
    with pytest.raises(NotACover):
        cover_split(x, pair, [("e", "d1", "c")])  # member misses d2 of dset
    with pytest.raises(NotACover):
        cover_split(x, pair, [("e", "d1", "d2", "c", "zz")])
