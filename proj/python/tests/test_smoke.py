import json
import os

import pytest

algred = pytest.importorskip("algred")

FREE_PARTICLE = """
[space]
coords = p q
degree = 3

[lie]
dim = 1

[momentum]
J = p^2/2

[chart]
alpha = q ; 0

[polarization]
span = q

[jets]
max_order = 3
action = 2+3*p
"""


def test_canonical_forms():
    assert algred.canonical("p^2/2", ["p", "q"]) == "1/2*p^2"
    assert algred.canonical("(1/2+i)*hbar*p - p*hbar*(1/2+i)", ["p"]) == "0"


def test_poisson_bracket_sign():
    assert algred.poisson_bracket("p", "q", ["p", "q"]) == "-1"
    assert algred.poisson_bracket("p^2/2", "q", ["p", "q"]) == "-p"


def test_groebner_and_normal_form():
    assert algred.groebner_basis(["p^2", "p^2*q+p"], ["p", "q"]) == ["p"]
    assert algred.normal_form("p^3", ["p^2-1"], ["p", "q"]) == "p"


def test_reduce_report():
    report = json.loads(algred.run_scenario_text(FREE_PARTICLE, "reduce"))
    assert report["result"]["invariant_basis"] == ["1", "p", "p*q", "p*q^2"]


def test_quantize_report():
    report = json.loads(algred.run_scenario_text(FREE_PARTICLE, "quantize"))
    assert report["result"]["symbolic_matrix"] == [["a", "0"], ["b", "a+i*hbar*c"]]


def test_kernel_report():
    report = json.loads(algred.run_scenario_text(FREE_PARTICLE, "kernel"))
    assert report["result"]["kernel_basis"] == ["delta(p)", "delta'(p)"]
    assert report["result"]["pairing_matrix"] == [["1", "0"], ["0", "-1"]]
    assert report["result"]["dual_action"]["2+3*p"] == [["2", "-3"], ["0", "2"]]


def test_isotypic_multiplicity_from_bundled_scenario():
    scenario_dir = os.environ.get("ALGRED_SCENARIOS")
    if not scenario_dir:
        pytest.skip("ALGRED_SCENARIOS not set")
    path = os.path.join(scenario_dir, "isotypic_two_spin_half.scn")
    report = json.loads(algred.run_scenario_file(path, "isotypic"))
    assert report["result"]["multiplicity"] == 2


def test_validation_errors_surface():
    bad = FREE_PARTICLE.replace("alpha = q ; 0", "alpha = 0 ; p")
    with pytest.raises(algred.AlgredError):
        algred.run_scenario_text(bad, "quantize")
