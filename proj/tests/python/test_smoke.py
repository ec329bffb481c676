from fractions import Fraction

import pytest

import touchard


def test_routes_agree():
    for m in range(1, 4):
        for n in range(6):
            rod = touchard.touchard(m, n)
            assert rod == touchard.touchard(m, n, "recurrence")
            assert rod == touchard.touchard(m, n, "explicit")
    assert touchard.touchard(1, 3) == [0, 1, 3, 1]


def test_unknown_route():
    with pytest.raises(ValueError):
        touchard.touchard(1, 2, "umbral")


def test_numbers():
    assert touchard.bell_numbers(10)[-1] == 115975
    assert touchard.stirling2(4, 2) == 7
    assert touchard.gen_stirling(3, 1, 1) == Fraction(1, 2)
    assert touchard.triangle(2, 3)[3] == [6, 6, 1]
    assert touchard.triangle_from_weyl(3, 2) == [Fraction(3, 4), Fraction(1, 4)]
    assert touchard.power_qd(2, 2) == {(3, 1): 2, (4, 2): 1}
    assert touchard.hoppe_derivative([0, 0, 1], 2) == 2
    assert touchard.lowering_check(5)


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        touchard.stirling2(2, 5)
    with pytest.raises(ValueError):
        touchard.hoppe_derivative([1, 1], 1)


def test_special_polynomials():
    assert touchard.laguerre(2) == [1, -2, Fraction(1, 2)]
    assert touchard.bessel_poly(2) == [1, 3, 3]
    assert touchard.delta_poly(2) == [0, 0, 1, -1]


def test_verification_reports():
    assert touchard.verify_gf(3)["status"] == "pass"
    assert touchard.verify_shifted_gf(2, 1, 6)["status"] == "pass"
    assert touchard.verify_operational_expansion(2, 4)["status"] == "pass"
    assert touchard.verify_bessel_link(4)["status"] == "pass"
    printed = touchard.verify_laguerre_link(1, as_printed=True)
    assert printed["status"] == "fail"
    assert printed["first_mismatch"]["actual"] == ["-1", "1", "1"]


def test_cli_in_process():
    code, out, _ = touchard.run_cli(["touchard", "-m", "1", "-n", "2"])
    assert code == 0
    assert out == "T_0 = 1\nT_1 = x\nT_2 = x + x^2\n"
    code, _, _ = touchard.run_cli(["verify", "nope"])
    assert code == 2
