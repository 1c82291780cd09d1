from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mcmforge import (certify_mcm, construct_omega_syzygy, corollary_trivial_deformation,
                      find_cm_veronese, find_deformation_element, is_generalized_cm,
                      is_quasi_buchsbaum, is_quasi_gorenstein, splitting_complement_mcm,
                      theorem_A_hypotheses, theorem_A_pipeline)
from mcmforge.corpus import (RP2_FACETS, double_point, hypersurface, node, polynomial_ring, r3,
                             r4, r6, rp2, stanley_reisner, thick_planes, three_planes, torus)
from mcmforge.errors import (HypothesisFailure, InvariantViolation, NotFound, NotRegularSequence,
                             NotSplit, ParameterRange, PreconditionError, ZeroModule)
from mcmforge.frobenius import poly_ext_quotient_iso, veronese_submodule
from mcmforge.mcm import deformation_annihilator
from mcmforge.modules import free_module
from mcmforge.resolutions import is_nonzerodivisor

QUADRIC = hypersurface(3, "xyz", "x^2+y^2+z^2", name="quadric")


# --- ring certifiers ---------------------------------------------------------

@pytest.mark.parametrize("R", [QUADRIC, hypersurface(2, "xy", "x^3+y^3"), polynomial_ring(),
                               node(), rp2()], ids=lambda R: R.name)
def test_quasi_gorenstein_true(R):
    assert is_quasi_gorenstein(R)


def test_quasi_gorenstein_false():
    assert not is_quasi_gorenstein(r4())


def test_torus_is_quasi_gorenstein():
    # orientable surface: omega of its Stanley-Reisner ring is R
    assert is_quasi_gorenstein(torus())


def test_generalized_cm():
    assert is_generalized_cm(polynomial_ring())
    assert is_generalized_cm(r3()) and is_generalized_cm(r4())
    assert not is_generalized_cm(r6())
    with pytest.raises(ZeroModule):
        is_generalized_cm(free_module(polynomial_ring().S, ()))


def test_quasi_buchsbaum():
    assert is_quasi_buchsbaum(QUADRIC)
    assert is_quasi_buchsbaum(r4())
    assert not is_quasi_buchsbaum(thick_planes())
    assert is_quasi_buchsbaum(rp2())


# --- hypothesis report -------------------------------------------------------

def test_report_r4():
    rep = theorem_A_hypotheses(r4())
    assert "quasi-Gorenstein" in rep.failures
    assert "quasi-Buchsbaum" not in rep.failures
    assert rep.quasi_buchsbaum and not rep.quasi_gorenstein
    assert "equidimensional" in rep.unchecked and "domain" in rep.unchecked


def test_report_cm_dim_3():
    R = polynomial_ring(2, "xyz")
    rep = theorem_A_hypotheses(R)
    assert rep.lc_table.as_list() == [0, 0, 0]
    assert rep.quasi_gorenstein and rep.failures == ["length(H^2) = 1"]
    assert "domain" not in rep.unchecked


def test_report_length_two():
    rep = theorem_A_hypotheses(torus())
    assert rep.lc_table.as_list() == [0, 0, 2]
    assert rep.failures == ["length(H^2) = 1"]


def test_report_certified_rp2():
    rep = theorem_A_hypotheses(rp2())
    assert rep.certified and rep.dim == 3 and rep.depth == 2
    assert rep.lc_table.as_list() == [0, 0, 1]


def test_report_requires_regular_sequence():
    R = node()
    with pytest.raises(NotRegularSequence):
        theorem_A_hypotheses(R, [R("x")])


# --- deformation element and the syzygy ---------------------------------------

def test_deformation_element_r4():
    R = r4()
    x = find_deformation_element(R)
    assert str(x) == "x+z"
    assert x.homogeneous_degree() == 1
    assert x in deformation_annihilator(R)
    assert is_nonzerodivisor(x, R.module)


def test_deformation_element_cm_ring():
    R = polynomial_ring(2, "xy")
    assert str(find_deformation_element(R)) == "x"


def test_deformation_element_not_found():
    with pytest.raises(NotFound):
        find_deformation_element(r6())


@pytest.mark.parametrize("R", [r4(), rp2(), r3(), QUADRIC], ids=lambda R: R.name)
def test_deformation_element_invariants(R):
    x = find_deformation_element(R)
    assert x in deformation_annihilator(R)
    assert is_nonzerodivisor(x, R.module)


def test_omega_syzygy_r4():
    R = r4()
    Omega, wb, cover = construct_omega_syzygy(R, R("x+z"))
    # R4/(x+z) = k[x,y,w]/(x^2,xy,xw,yw); modulo its socle this is the node,
    # so the canonical module is cyclic
    assert wb.rank == 1 and len(cover) == 1
    HF = sum((R.hilbert_series().shift(a) for a in cover[1:]), R.hilbert_series().shift(cover[0]))
    assert Omega.hilbert_series() + wb.hilbert_series() == HF


def test_omega_syzygy_gorenstein_is_free():
    R = QUADRIC
    Omega, wb, cover = construct_omega_syzygy(R, R("x"))
    P = Omega.minimal()
    assert wb.rank == 1 and P.rank == 1 and P.relations == []


def test_omega_syzygy_zero_x():
    R = r4()
    with pytest.raises(PreconditionError):
        construct_omega_syzygy(R, R("0"))


# --- certify_mcm ----------------------------------------------------------------

def test_certify_ring_over_itself():
    R = QUADRIC
    c = certify_mcm(R.module, R)
    assert c.success and c.rank == 1


def test_certify_canonical_r4():
    R = r4()
    c = certify_mcm(R.canonical, R)
    assert c.success and c.depth == 2 and c.rank == 1


def test_certify_r3_fails():
    R = r3()
    c = certify_mcm(R.module, R)
    assert not c.success and c.depth == 1 and c.dim == 2


def test_certify_zero():
    with pytest.raises(ZeroModule):
        certify_mcm(free_module(r3().S, ()), r3())


@pytest.mark.parametrize("R", [r3(), r4(), node(), three_planes(), QUADRIC],
                         ids=lambda R: R.name)
def test_certificate_success_means_no_low_cohomology(R):
    for M in (R.module, R.canonical):
        c = certify_mcm(M, R)
        lengths = c.depth_evidence["lc_lengths"]
        if c.success:
            assert all(v == 0 for v in lengths[:c.dim])
        else:
            assert any(v != 0 for v in lengths[:c.dim])


# --- pipelines ----------------------------------------------------------------

@pytest.mark.parametrize("R", [QUADRIC, polynomial_ring(2, "xy"), node()], ids=lambda R: R.name)
def test_pipeline_gorenstein_degenerates(R):
    c = theorem_A_pipeline(R)
    P = c.module.minimal()
    assert c.success and P.rank == 1 and P.relations == []


def test_pipeline_r4_fails_hypotheses():
    with pytest.raises(HypothesisFailure) as info:
        theorem_A_pipeline(r4())
    assert "quasi-Gorenstein" in info.value.failed


def test_pipeline_rank_two():
    R = rp2()
    c = theorem_A_pipeline(R)
    assert c.success and c.rank == 2 and c.depth == 3
    assert str(c.witness["x"]) == "v1+v2+v3"


def test_pipeline_with_regular_sequence():
    R = rp2().extend(["t"], [1])
    c = theorem_A_pipeline(R, [R("t")])
    assert c.success and c.rank == 2 and c.dim == 4 and c.depth == 4


@st.composite
def surface_complex(draw):
    """Pure 2-dimensional complexes on 6 vertices containing a fixed triangle."""
    pool = [f for f in RP2_FACETS[1:]] + [(1, 2, 4), (2, 3, 6), (1, 5, 6), (3, 4, 5)]
    extra = draw(st.lists(st.sampled_from(pool), min_size=3, max_size=10, unique=True))
    return [RP2_FACETS[0]] + extra


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(facets=surface_complex())
def test_pipeline_contract_on_certified_inputs(facets):
    R = stanley_reisner(facets, 6, 2, name="random")
    rep = theorem_A_hypotheses(R)
    try:
        c = theorem_A_pipeline(R)
    except HypothesisFailure as ex:
        assert not rep.certified and ex.failed == rep.failures
        return
    except InvariantViolation as ex:
        assert rep.certified and ex.unchecked
        return
    except NotFound:
        assert not rep.certified
        return
    if rep.certified:
        assert c.success and c.rank == 2
    else:
        assert R.is_gorenstein() and c.success


def test_cm_veronese_cm_ring():
    R = hypersurface(2, "xyz", "x^2+y*z", name="cone")
    R.domain = True
    c = find_cm_veronese(R.module, R)
    assert c.success and (c.witness["e"], c.witness["i"]) == (1, 0)


def test_cm_veronese_r3():
    R = r3()
    c = find_cm_veronese(R.module, R)
    assert c.success and c.witness["e"] <= 3 and c.depth == 2
    assert c.rank == 2
    V = veronese_submodule(R, c.witness["e"], c.witness["i"])
    assert V.class_dims(4) == [1, 9, 17, 25, 33]


def test_cm_veronese_preconditions():
    with pytest.raises(PreconditionError):
        find_cm_veronese(r4().module, r4())
    with pytest.raises(PreconditionError):
        find_cm_veronese(r6().module, r6(), require_domain=False)
    with pytest.raises(ParameterRange):
        find_cm_veronese(r3().module, r3(), e_max=0)


def test_cm_veronese_depth_two_modules_are_gcm():
    # a successful search forces generalized Cohen-Macaulayness
    for R in (r3(), polynomial_ring(2, "xy")):
        if R.depth >= 2 or R.dimension >= 2:
            c = find_cm_veronese(R.module, R)
            assert c.success and is_generalized_cm(R)


def test_corollary_r3():
    R = r3()
    c = corollary_trivial_deformation(R, 1)
    assert c.success and c.dim == 3 and c.depth == 3
    e, i = c.witness["e"], c.witness["i"]
    assert poly_ext_quotient_iso(R, e, i, 0, 1, 1, bound=10)


def test_corollary_polynomial_ring():
    c = corollary_trivial_deformation(polynomial_ring(2, "xy"), 1)
    assert c.success


def test_corollary_e_max_zero():
    with pytest.raises(ParameterRange):
        corollary_trivial_deformation(r3(), 1, e_max=0)


def test_splitting_complement_mcm():
    c = splitting_complement_mcm(node())
    assert c.success and c.depth == 1 == c.dim
    c = splitting_complement_mcm(polynomial_ring(2, "x"))
    assert c.success and c.rank == 1
    with pytest.raises(NotSplit):
        splitting_complement_mcm(double_point())


def test_certificate_serializes():
    c = theorem_A_pipeline(rp2())
    d = c.as_dict()
    assert d["rank"] == 2 and d["witness"]["x"] == "v1+v2+v3"
    assert isinstance(c.rank, Fraction)
