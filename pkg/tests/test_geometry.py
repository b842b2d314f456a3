import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conequot import (
    Bunch,
    ample_cones,
    bunch_from_collection,
    classify,
    cone_from_generators,
    contains_cone,
    covering_collection,
    geometry_report,
    local_factoriality,
    make_grading_input,
    orbit_cones,
    picard_lattice,
    q_factoriality,
    relevant_faces,
    relint_contains,
    sublattice_index,
    two_maximal_collections,
)
from conequot.errors import InputError
from oracles import random_pointed_grading
from test_grading import SMOOTHEMB, suitable

NOSMOOTHEMB = suitable(2, [(1, 0)] * 4 + [(2, 3)] * 4 + [(0, 1)] * 4)


def c2(*gens):
    return cone_from_generators(2, list(gens))


QUADRANT = c2((1, 0), (0, 1))


def _interior_bunches(gi):
    om = orbit_cones(gi)
    out = {}
    for col in two_maximal_collections(om):
        if col.interior:
            out[frozenset(col.members)] = (col, bunch_from_collection(col))
    return om, out


def _smoothemb_bunches():
    om, table = _interior_bunches(SMOOTHEMB)
    phi0 = table[frozenset({c2((1, 1)), QUADRANT})][1]
    phi1 = table[frozenset({QUADRANT, c2((1, 0), (1, 1))})][1]
    return om, phi0, phi1


def test_relevant_faces_smoothemb_chamber():
    om, phi0, phi1 = _smoothemb_bunches()
    rlv = relevant_faces(SMOOTHEMB, om, phi1)
    signatures = {f.degrees for f in rlv}
    assert signatures == {
        ((0, 1), (1, 0)),
        ((1, 0), (1, 1)),
        ((0, 1), (1, 0), (1, 1)),
    }
    # faces {i, j} for a u1-index i and a middle-degree index j are in the
    # family with that signature; a pure last-group singleton is nowhere
    fam = next(f for f in rlv if f.degrees == ((1, 0), (1, 1)))
    assert fam.kind == "all-nonempty"
    assert fam.index_groups == ((1, 2, 3, 4), (5, 6, 7, 8))
    for f in rlv:
        assert f.index_groups != ((9, 10, 11, 12),)


def test_covering_smoothemb_ray():
    om, phi0, phi1 = _smoothemb_bunches()
    cov = covering_collection(relevant_faces(SMOOTHEMB, om, phi0))
    by_sig = {f.degrees: f for f in cov}
    assert set(by_sig) == {((1, 1),), ((0, 1), (1, 0))}
    # minimal faces: the four singletons of the middle group, and each
    # pair of one first-group and one last-group index
    assert by_sig[((1, 1),)].count == 4
    assert by_sig[((0, 1), (1, 0))].count == 16
    assert by_sig[((0, 1), (1, 0))].kind == "one-each"


def test_local_factoriality_verdicts():
    om, phi0, phi1 = _smoothemb_bunches()
    rlv0 = relevant_faces(SMOOTHEMB, om, phi0)
    rlv1 = relevant_faces(SMOOTHEMB, om, phi1)
    assert not local_factoriality(SMOOTHEMB, rlv0, covering_collection(rlv0))
    assert local_factoriality(SMOOTHEMB, rlv1, covering_collection(rlv1))

    om2, table2 = _interior_bunches(NOSMOOTHEMB)
    for col, bunch in table2.values():
        rlv = relevant_faces(NOSMOOTHEMB, om2, bunch)
        assert not local_factoriality(NOSMOOTHEMB, rlv, covering_collection(rlv))


def test_q_factoriality_verdicts():
    om, phi0, phi1 = _smoothemb_bunches()
    assert not q_factoriality(phi0, 2)
    assert q_factoriality(phi1, 2)


def test_picard_lattices():
    om, phi0, phi1 = _smoothemb_bunches()
    pic0 = picard_lattice(SMOOTHEMB, covering_collection(relevant_faces(SMOOTHEMB, om, phi0)))
    assert pic0.basis == ((1, 1),)
    assert sublattice_index(pic0, 2) is None
    pic1 = picard_lattice(SMOOTHEMB, covering_collection(relevant_faces(SMOOTHEMB, om, phi1)))
    assert pic1.basis == ((1, 0), (0, 1))
    assert sublattice_index(pic1, 2) == 1


def test_picard_lattice_rejects_empty_covering():
    with pytest.raises(InputError):
        picard_lattice(SMOOTHEMB, ())


def test_ample_cones():
    om, phi0, phi1 = _smoothemb_bunches()
    semi0, ok0, sample0 = ample_cones(phi0)
    assert semi0 == c2((1, 1)) and ok0 and sample0 == (1, 1)
    semi1, ok1, sample1 = ample_cones(phi1)
    assert semi1 == c2((1, 0), (1, 1)) and ok1 and sample1 == (2, 1)


def test_ample_can_be_empty():
    # two chambers meeting along a ray: semiample is the shared ray, but
    # its relint misses both chambers' interiors
    bunch = Bunch((c2((1, 0), (1, 1)), c2((1, 1), (0, 1))))
    semi, ok, sample = ample_cones(bunch)
    assert semi == c2((1, 1))
    assert not ok
    assert sample is None


def test_geometry_report_smoothemb(results):
    res = results["smoothemb"]
    by_members = {
        frozenset(c.members): g for c, g in zip(res.interior, res.geometry)
    }
    g0 = by_members[frozenset({c2((1, 1)), QUADRANT})]
    assert not g0.locally_factorial and not g0.q_factorial
    assert g0.smooth_toric_mode is False
    assert g0.class_group_rank == 2
    assert g0.picard_rank == 1
    assert g0.quasiprojective and g0.projective
    g1 = by_members[frozenset({QUADRANT, c2((1, 0), (1, 1))})]
    assert g1.locally_factorial and g1.q_factorial and g1.smooth_toric_mode
    assert g1.picard_rank == 2 and g1.picard_index == 1
    assert g1.quasiprojective and g1.projective


def test_geometry_report_nosmoothemb(results):
    res = results["nosmoothemb"]
    assert len(res.geometry) == 3
    assert all(not g.locally_factorial for g in res.geometry)
    assert sum(1 for g in res.geometry if g.q_factorial) == 2
    assert all(g.projective for g in res.geometry)


def test_geometry_report_requires_valid_input():
    gi = suitable(2, [(1, 0), (0, 1)])  # facet condition fails
    om = orbit_cones(gi)
    col = next(c for c in two_maximal_collections(om) if c.interior)
    with pytest.raises(InputError):
        geometry_report(gi, om, col)


def test_lf_implies_qf_on_fixtures(results):
    for name, res in results.items():
        for g in res.geometry:
            assert not g.locally_factorial or g.q_factorial, name


def test_sp6_matches_weight_patterns(results):
    # same weight data as smoothemb/nosmoothemb, multiplicity 6: the
    # classification verdicts carry over unchanged
    smooth = results["sp6-smooth-weights"]
    assert sum(1 for g in smooth.geometry if g.locally_factorial) == 2
    assert sum(1 for g in smooth.geometry if not g.q_factorial) == 1
    sing = results["sp6-sing-weights"]
    assert all(not g.locally_factorial for g in sing.geometry)
    assert sum(1 for g in sing.geometry if g.q_factorial) == 2
    assert all(g.projective for g in sing.geometry)


def test_relevant_faces_explicit_mode():
    gi = make_grading_input(
        2,
        [("a1", (1, 0)), ("a2", (0, 1)), ("a3", (1, 1))],
        "explicit",
        f_faces=[[], [1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]],
    )
    om = orbit_cones(gi)
    bunch = Bunch((c2((1, 1)),))
    rlv = relevant_faces(gi, om, bunch)
    assert all(f.kind == "single" and f.count == 1 for f in rlv)
    assert [f.index_groups for f in rlv] == [
        ((2,), (1,)),
        ((2,), (1,), (3,)),
        ((3,),),
    ]
    # minimal faces: drop the full one, keep the incomparable pair
    cov = covering_collection(rlv)
    assert [f.index_groups for f in cov] == [((2,), (1,)), ((3,),)]


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_geometry_invariants(rng):
    gi = random_pointed_grading(rng, max_rank=2, max_gens=6)
    try:
        res = classify(gi)
    except InputError:
        assume(False)
    for g in res.geometry:
        assert not g.locally_factorial or g.q_factorial
        assert g.picard_rank <= g.class_group_rank
        # semiample contains the ample sample when one exists
        if g.ample_sample is not None:
            assert relint_contains(g.semiample, g.ample_sample)
        for tau in g.bunch.members:
            assert contains_cone(tau, g.semiample)
