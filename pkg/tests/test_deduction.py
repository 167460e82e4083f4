import pytest

from exotica import (
    ContradictionError,
    Fact,
    FiberSumDescription,
    blow_up,
    deduce,
    fiber_sum,
    record,
    standard,
)


def _x_and_target():
    z = blow_up(standard("T2xS2"), 4)
    xk = record("X_K", sigma=0, chi_h=1, b1=0, flags=("symplectic", "minimal"))
    x = (
        fiber_sum(xk, z, 2)
        .simply_connected()
        .with_parity("odd")
        .with_name("X")
    )
    return x, standard("3CP2 # 7CP2bar")


def _y_and_target():
    z = blow_up(standard("T2xS2"), 4)
    yk = record("Y_K", sigma=0, chi_h=0, b1=2, flags=("symplectic", "minimal"))
    y = (
        fiber_sum(yk, z, 2)
        .simply_connected()
        .with_parity("odd")
        .with_name("Y")
    )
    return y, standard("CP2 # 5CP2bar")


def test_first_construction_chain():
    x, n = _x_and_target()
    report = deduce([x, n, FiberSumDescription("X", False, False)])
    for conclusion in (
        "sw_nontrivial(X)",
        "sw_trivial(3CP2 # 7CP2bar)",
        "homeomorphic(X, 3CP2 # 7CP2bar)",
        "not_diffeomorphic(X, 3CP2 # 7CP2bar)",
        "minimal(X)",
        "irreducible(X)",
        "exotic(X, 3CP2 # 7CP2bar)",
    ):
        assert report.concludes(conclusion), conclusion
    rules = {step.rule for step in report.steps}
    assert {"R1", "R2", "R3", "R4", "R5", "R6", "R9"} <= rules


def test_second_construction_chain():
    y, n = _y_and_target()
    report = deduce([y, n, FiberSumDescription("Y", False, False)])
    for conclusion in (
        "homeomorphic(Y, CP2 # 5CP2bar)",
        "minimal(Y)",
        "irreducible(Y)",
        "not_diffeomorphic(Y, CP2 # 5CP2bar)",
        "exotic(Y, CP2 # 5CP2bar)",
    ):
        assert report.concludes(conclusion), conclusion
    # b2+ = 1: Taubes and the connected-sum vanishing stay silent, the
    # distinction comes from irreducibility against the nontrivial sum
    assert not report.concludes("sw_nontrivial(Y)")
    assert not report.concludes("sw_trivial(CP2 # 5CP2bar)")
    by_conclusion = {step.conclusion: step.rule for step in report.steps}
    assert by_conclusion["not_diffeomorphic(Y, CP2 # 5CP2bar)"] == "R7"


def test_standard_manifold_alone_yields_no_exoticness():
    report = deduce([standard("3CP2 # 7CP2bar")])
    for conclusion in report.conclusions():
        assert not conclusion.startswith(("homeomorphic", "not_diffeomorphic", "exotic"))


def test_contradictory_facts_raise():
    x, n = _x_and_target()
    with pytest.raises(ContradictionError):
        deduce([x, n, FiberSumDescription("X", False, False), Fact("sw_trivial", ("X",))])


def test_monotone_under_extra_facts():
    x, n = _x_and_target()
    base = deduce([x, n, FiberSumDescription("X", False, False)])
    extended = deduce(
        [x, n, FiberSumDescription("X", False, False), Fact("psc", ("n/a",))]
    )
    assert set(base.conclusions()) <= set(extended.conclusions())


def test_deterministic_reports():
    x, n = _x_and_target()
    items = [x, n, FiberSumDescription("X", False, False)]
    assert deduce(items).render() == deduce(items).render()


def test_usher_case_two_resolution():
    z = record("Zsum", sigma=0, e=4, b1=0, flags=("symplectic",))
    desc = FiberSumDescription(
        "Zsum", False, True, other_summand="W", other_summand_minimal=True
    )
    report = deduce([z, desc])
    assert report.concludes("minimal(Zsum)")
    desc_bad = FiberSumDescription(
        "Zsum", False, True, other_summand="W", other_summand_minimal=False
    )
    report2 = deduce([z, desc_bad])
    assert report2.concludes("not_minimal(Zsum)")


def test_psc_rule_both_directions():
    m = record("M", sigma=-4, e=8, b1=0, flags=("minimal",))
    assert m.b2_plus == 1
    report = deduce([m, Fact("psc", ("M",))])
    assert report.concludes("rational_or_ruled(M)")
    report2 = deduce([m, Fact("rational_or_ruled", ("M",))])
    assert report2.concludes("psc(M)")


def test_sphere_case_blocks_minimality():
    x, n = _x_and_target()
    report = deduce([x, n, FiberSumDescription("X", True, False)])
    assert report.concludes("not_minimal(X)")
    assert not report.concludes("minimal(X)")
