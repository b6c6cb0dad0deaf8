import pytest

from localic import (
    DenseSquare, GenSpec, InvalidSquare, SquareChain, Triangle,
    booleanization, chain_frame, check_section4, check_section5,
    identity_map, whole_subl,
)
from localic.diagrams import (
    CHAIN_CHECKS, SQUARE_CHECKS, TRIANGLE_CHECKS, is_complemented_subl,
    is_f_remote_preserving, is_f_star_remote_preserving, takes_remainder,
)
from localic.generators import (
    gen_chains, gen_frames, gen_squares, gen_triangles, identity_square,
    inclusion_map, square_from,
)
from localic.result import FAIL, PASS


@pytest.fixture(scope="module")
def small_frames():
    return [f for f in gen_frames(GenSpec("all-posets-up-to", 3)) if f.n <= 8]


@pytest.fixture(scope="module")
def squares(small_frames):
    return gen_squares(small_frames, maps_per_pair=2, budget=60)


def test_identity_square_passes_everything(c3):
    sq = identity_square(c3, booleanization(c3))
    for check_id, fn in sorted(SQUARE_CHECKS.items()):
        r = fn(sq)
        assert r.verdict != FAIL, (check_id, r.witness)


def test_square_requires_commuting(c3):
    c2 = chain_frame(2)
    # verticals must start at the top row's frames
    with pytest.raises(InvalidSquare):
        DenseSquare(identity_map(c3), identity_map(c3),
                    identity_map(c2), identity_map(c3))


def test_square_requires_injective_verticals(c3):
    # a non-injective vertical (collapsing map) is rejected
    from localic import build_map
    collapse = build_map(c3, chain_frame(2), [0, 0, 1])
    with pytest.raises(InvalidSquare):
        DenseSquare(identity_map(c3), identity_map(chain_frame(2)),
                    collapse, collapse)


def test_takes_remainder_identity(c3):
    sq = identity_square(c3, whole_subl(c3))
    assert takes_remainder(sq)
    sq_bl = identity_square(c3, booleanization(c3))
    assert takes_remainder(sq_bl)


def test_remote_preserving_identity(c3):
    sq = identity_square(c3, booleanization(c3))
    assert is_f_remote_preserving(sq)
    assert is_f_star_remote_preserving(sq)


def test_is_complemented_subl(c3, b2):
    from localic import closed_subl, open_subl, subl_join, subl_meet
    assert is_complemented_subl(c3, closed_subl(c3, 1))
    assert is_complemented_subl(c3, booleanization(c3))
    for a in range(b2.n):
        assert is_complemented_subl(b2, closed_subl(b2, a))
    # closed and open at the same element witness each other's complement
    c, o = closed_subl(c3, 1), open_subl(c3, 1)
    assert subl_meet([c, o]).is_void() and subl_join([c, o]).is_whole()


def test_square_checks_never_fail(squares):
    for sq in squares:
        for r in check_section4(sq) + check_section5(sq):
            assert r.verdict != FAIL, (r.check_id, r.subject, r.witness)


def test_square_checks_sometimes_apply(squares):
    seen = {cid: 0 for cid in SQUARE_CHECKS}
    for sq in squares:
        for cid, fn in SQUARE_CHECKS.items():
            if fn(sq).verdict == PASS:
                seen[cid] += 1
    assert all(v > 0 for v in seen.values()), seen


def test_chain_checks(squares):
    chains = gen_chains(squares[:20], budget=40)
    assert chains
    for chain in chains:
        for cid, fn in sorted(CHAIN_CHECKS.items()):
            r = fn(chain)
            assert r.verdict != FAIL, (cid, r.subject, r.witness)


def test_chain_inner_square(squares):
    chains = gen_chains(squares[:10], budget=10)
    for chain in chains:
        inner = chain.inner_square()
        assert inner.l_frame is chain.r_frame
        assert inner.m_frame is chain.u_frame


def test_triangle_checks(small_frames):
    tris = gen_triangles(small_frames[:4], maps_per_pair=2, budget=40)
    assert tris
    for tri in tris:
        for cid, fn in sorted(TRIANGLE_CHECKS.items()):
            r = fn(tri)
            assert r.verdict != FAIL, (cid, r.subject, r.witness)


def test_triangle_rejects_mismatched_middle(c3):
    sq1 = identity_square(c3, whole_subl(c3))
    sq2 = identity_square(c3, booleanization(c3))
    with pytest.raises(InvalidSquare):
        Triangle(sq1, sq2)


def test_triangle_composite(c3):
    sq = identity_square(c3, booleanization(c3))
    tri = Triangle(sq, sq)
    assert tri.sq3.f.table == sq.f.table
    assert tri.sq3.l_frame is c3


def test_square_from_rejects_non_dense(c3):
    from localic import closed_subl
    assert square_from(identity_map(c3), closed_subl(c3, 1),
                       whole_subl(c3)) is None


def test_subjects_distinct(squares):
    subjects = [sq.subject() for sq in squares]
    assert len(subjects) == len(set(subjects))


def test_check_id_sets():
    assert set(SQUARE_CHECKS) == {
        "beta", "betastar", "beta1", "beta1star", "for", "forstar",
        "for1", "for1star", "gammaremotepreserving",
        "stargammaremotepreserving", "gammapreservationlemma",
        "remotepreservation"}
    assert set(CHAIN_CHECKS) == {
        "bvl", "starbvl", "gfremote", "obsfremote", "starobsgfremote"}
    assert set(TRIANGLE_CHECKS) == {"tfg-1", "tfg-2", "tfg-3"}
