from fractions import Fraction

import pytest

import sprod


def test_dwpf_hand_value():
    assert sprod.dwpf([2, 4], [0, 1]) == Fraction(2, 3)


def test_theorem1_hand_value():
    assert sprod.z_su3([2], [0], [1], [3]) == Fraction(-1, 3)
    assert sprod.z_su3_lattice([2], [0], [1], [3]) == Fraction(-1, 3)


def test_fractions_accepted():
    lam = [Fraction(1, 3), Fraction(-5, 2)]
    ws = ["7/2", 4]
    assert sprod.dwpf(lam, ws) == sprod.dwpf(list(reversed(lam)), ws)


def test_chain_product_matches_job():
    args = dict(muC=["1/5"], lambdaC=["2/7"], lambdaB=["-1/3"], muB=["3/4"], ws=["1/3"], vs=["5/2"])
    direct = sprod.su3_chain_product(*args.values())
    report = sprod.run_job({"kind": "su3_scalar_product_direct", "params": args})
    assert report["schema"] == "1"
    assert Fraction(report["result"]) == direct


def test_errors_surface():
    with pytest.raises(sprod.SprodError, match="PoleAtPoint"):
        sprod.weight_f(1, 1)
    with pytest.raises(sprod.SprodError, match="UnknownKind"):
        sprod.run_job({"kind": "nope"})


def test_suite_passes():
    report = sprod.run_suite("staggered", 7)
    assert report["status"] == "pass"
    assert report["failed"] == 0
