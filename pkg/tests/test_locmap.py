import pytest

from localic import (
    AdjointNotFrameHom, NotMeetPreserving, Sublocale, booleanization,
    build_map, chain_frame, closed_subl, compose, enumerate_sublocales,
    identity_map, open_subl, void_subl, whole_subl,
)
from localic.generators import inclusion_map


def test_identity_map(c3):
    f = identity_map(c3)
    assert f.table == (0, 1, 2)
    assert f.adjoint_table == (0, 1, 2)
    assert f.is_dense_map() and f.is_skeletal()
    assert f.is_weakly_closed_adjoint() and f.is_closed_map()
    assert not f.is_nowhere_dense_adjoint()


def test_build_map_c3_to_c2(c3):
    c2 = chain_frame(2)
    f = build_map(c3, c2, [0, 0, 1])
    # the adjoint is the frame homomorphism y -> meet{x : y <= f(x)}
    assert f.adjoint(0) == 0
    assert f.adjoint(1) == 2


def test_build_map_b2_to_c2(b2):
    c2 = chain_frame(2)
    # collapse everything below the top to 0
    table = [0] * b2.n
    table[b2.top] = 1
    f = build_map(b2, c2, table)
    assert f.adjoint(1) == b2.top
    assert f.adjoint(0) == b2.bottom


def test_build_map_rejects_non_meet_preserving(c3):
    c2 = chain_frame(2)
    with pytest.raises(NotMeetPreserving):
        build_map(c3, c2, [0, 1, 0])     # does not send top to top
    with pytest.raises(NotMeetPreserving):
        build_map(c3, c2, [1, 0, 1])


def test_constant_top_rejected_on_c2():
    c2 = chain_frame(2)
    # 0 -> 1, 1 -> 1 preserves binary meets but its adjoint kills the top
    with pytest.raises(AdjointNotFrameHom):
        build_map(c2, c2, [1, 1])


def test_adjoint_galois_property(c3, b2):
    a = b2.index_of("1")
    f = build_map(c3, b2, [a, a, b2.top])
    for x in range(c3.n):
        for y in range(b2.n):
            assert (c3.leq(f.adjoint(y), x)) == (b2.leq(y, f(x)))


def test_inclusion_of_booleanization(c3):
    inc = inclusion_map(booleanization(c3))
    sub = inc.source
    assert inc.table == (0, 2)
    # adjoint is the nucleus: the middle element maps up to the top
    assert inc.adjoint(1) == sub.top
    assert inc.is_dense_map()
    assert inc.is_skeletal()


def test_image_subl(c3):
    inc = inclusion_map(booleanization(c3))
    img = inc.image_subl(whole_subl(inc.source))
    assert img == booleanization(c3)
    assert inc.image_subl(void_subl(inc.source)).is_void()


def test_preimage_subl(c3):
    inc = inclusion_map(booleanization(c3))
    pre = inc.preimage_subl(closed_subl(c3, 1))
    assert pre.is_void()
    pre_whole = inc.preimage_subl(whole_subl(c3))
    assert pre_whole.is_whole()


def test_preimage_special_cases(c3, b2):
    a = b2.index_of("1")
    f = build_map(c3, b2, [a, a, b2.top])
    for a in range(b2.n):
        assert f.preimage_open(a) == f.preimage_subl(open_subl(b2, a))
        assert f.preimage_closed(a) == f.preimage_subl(closed_subl(b2, a))


def test_galois_adjunction_of_image_preimage(c4):
    f = build_map(c4, c4, [0, 0, 2, 3])
    subs = enumerate_sublocales(c4)
    for a in subs:
        for b in subs:
            lhs = f.image_subl(a) <= b
            rhs = a <= f.preimage_subl(b)
            assert lhs == rhs


def test_image_monotone(c4):
    f = build_map(c4, c4, [0, 0, 2, 3])
    subs = enumerate_sublocales(c4)
    for a in subs:
        for b in subs:
            if a <= b:
                assert f.image_subl(a) <= f.image_subl(b)
                assert f.preimage_subl(a) <= f.preimage_subl(b)


def test_compose(c3):
    c2 = chain_frame(2)
    f = build_map(c3, c2, [0, 0, 1])
    g = build_map(c2, c3, [0, 2])
    h = compose(g, f)
    assert h.table == (0, 0, 2)
    assert h.adjoint_table == tuple(
        f.adjoint_table[g.adjoint_table[y]] for y in range(c3.n))


def test_injective_surjective(c3):
    assert identity_map(c3).is_injective()
    assert identity_map(c3).is_surjective()
    inc = inclusion_map(booleanization(c3))
    assert inc.is_injective() and not inc.is_surjective()


def test_image_is_surjective(c3):
    assert identity_map(c3).image_is_surjective()
    inc = inclusion_map(booleanization(c3))
    assert not inc.image_is_surjective()
