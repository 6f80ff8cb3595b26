import math

import pytest

import kgsolve


def test_energy_levels_table_one():
    pair = kgsolve.energy_levels(kgsolve.ModelParams(V0=3, S0=3), kgsolve.QuantumNumbers(1, 0))
    assert pair is not None
    assert pair.valid_p
    assert pair.e_a < pair.e_p


def test_missing_roots_give_none():
    rows = [r for r in kgsolve.load_table("I") if r["e_a"] is None and r["e_p"] is None]
    assert rows
    r = rows[0]
    p = kgsolve.ModelParams(m0=r["m0"], m1=r["m1"], V0=r["V0"], S0=r["S0"])
    assert kgsolve.energy_levels(p, kgsolve.QuantumNumbers(r["n"], r["l"])) is None


def test_table_rows_reproduced():
    for r in kgsolve.load_table("I"):
        p = kgsolve.ModelParams(m0=r["m0"], m1=r["m1"], V0=r["V0"], S0=r["S0"])
        pair = kgsolve.energy_levels(p, kgsolve.QuantumNumbers(r["n"], r["l"]))
        if r["e_p"] is not None:
            assert pair.e_p == pytest.approx(r["e_p"], abs=1e-6)


def test_oracle_agrees_with_closed_form():
    p = kgsolve.ModelParams(V0=3, S0=3)
    qn = kgsolve.QuantumNumbers(1, 0)
    e = kgsolve.energy_levels(p, qn).e_p
    shot = kgsolve.shoot(p, qn, e - 0.05, min(e + 0.05, 0.999999))
    assert shot.nodes == 1
    assert shot.energy == pytest.approx(e, abs=1e-6)


def test_wavefunction_is_normalized():
    p = kgsolve.ModelParams(V0=3, S0=3)
    qn = kgsolve.QuantumNumbers(1, 0)
    state = kgsolve.BoundState.make(p, qn, kgsolve.energy_levels(p, qn).e_p)
    h = 1e-3
    rs = [h * (i + 1) for i in range(60000)]
    total = sum(v * v for v in state(rs)) * h
    assert total == pytest.approx(1.0, abs=1e-3)


def test_jacobi_low_degree():
    assert kgsolve.jacobi(1, 0.5, 1.5, 0.3) == pytest.approx(0.5 * (0.5 - 1.5) + 0.5 * 4.0 * 0.3)
    assert kgsolve.jacobi_norm_integral(0, 1.0, 1.0) == pytest.approx(2.0)


def test_errors_surface_as_exceptions():
    with pytest.raises(kgsolve.KgsolveError):
        kgsolve.BoundState.make(kgsolve.ModelParams(V0=3, S0=3), kgsolve.QuantumNumbers(1, 0), 0.1)


def test_cli_round_trip():
    code, out, _ = kgsolve.run(["spectrum", "--V0", "3", "--S0", "3", "--format", "csv"])
    assert code == 0
    assert "n,l,e_a,e_p" in out
    code, _, _ = kgsolve.run(["spectrum", "--bogus"])
    assert code == 2


def test_find_levels_bound():
    levels = kgsolve.find_levels(kgsolve.ModelParams(V0=3, S0=3), 0, samples=80)
    assert levels
    assert all(abs(lv.energy) < 1.0 for lv in levels)
    assert not math.isnan(levels[0].energy)
