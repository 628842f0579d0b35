from typing import Any, Tuple
from fractions import Fraction
import pytest
from mpmath import mp

from core.engine import (
	Wavefunction, build_expansion, dump_tables, evaluate_wavefunction, nodal_polynomial,
	riccati_residual, solve_recursion, sum_series,
)
from core.error import DomainError
from core.models import CoefficientTables, EnergySeries, ExpansionPolynomials, ShiftData, StateIndex
from core.potentials import AnharmonicOscillator, CoulombPotential, HarmonicOscillator, RadialPotential
from core.shift import solve_shift_at
from util.misc import to_mpf

EXACT = mp.mpf('1e-30')

def _residual_floor() -> Any:
	return mp.mpf(10) ** -(mp.dps - 15)

def _solve(V: RadialPotential, k: int, l_D: Fraction, n_max: int = 8) -> Tuple[ShiftData, ExpansionPolynomials, CoefficientTables, EnergySeries]:
	shift = solve_shift_at(V, k, l_D)
	expansion = build_expansion(V, shift, n_max)
	tables, series = solve_recursion(expansion, shift, k, n_max)
	return shift, expansion, tables, series

GRID = [StateIndex(k, l, D) for k in range(3) for l in range(3) for D in (2, 3, 4)]

@pytest.mark.parametrize('state', GRID, ids = repr)
def test_harmonic_is_exact(state: StateIndex) -> None:
	_, _, _, series = _solve(HarmonicOscillator(Fraction(1, 2)), state.k, state.l_D)
	for c in series.corrections():
		assert abs(c) < EXACT
	assert abs(sum_series(series) - (state.l_D + 2 * state.k + mp.mpf(3) / 2)) < EXACT

@pytest.mark.parametrize('state', GRID, ids = repr)
def test_coulomb_is_exact(state: StateIndex) -> None:
	_, _, _, series = _solve(CoulombPotential(1), state.k, state.l_D)
	for c in series.corrections():
		assert abs(c) < EXACT
	nu = to_mpf(state.l_D + state.k + 1)
	assert abs(sum_series(series) + 1 / (2 * nu**2)) < EXACT

def test_expansion_structure() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), '0.7')
	shift, expansion, _, _ = _solve(V, 1, Fraction(0), 4)
	assert expansion.half_orders == 10
	assert len(expansion.b) == 13
	q0 = shift.q0
	assert abs(expansion.b[3] - (-2 + V.derivative(q0, 3) * q0**5 / (6 * shift.Q))) < EXACT
	v = expansion.v
	assert abs(v[0][0] - (2 * shift.beta + 1) / 2) < EXACT
	assert [j for j, c in enumerate(v[0]) if c] == [0, 2]
	assert [j for j, c in enumerate(v[1]) if c] == [1, 3]
	for n in range(2, expansion.half_orders + 1):
		assert {j for j, c in enumerate(v[n]) if c} <= { n - 2, n, n + 2 }

def test_harmonic_b2() -> None:
	V = HarmonicOscillator(Fraction(1, 2))
	shift = solve_shift_at(V, 0, Fraction(1))
	assert abs(build_expansion(V, shift, 0).b[2] - 2) < EXACT

def test_k1_closed_forms() -> None:
	shift, expansion, t, series = _solve(AnharmonicOscillator(Fraction(1, 2), 1), 1, Fraction(0))
	w = shift.omega
	beta = shift.beta
	b = expansion.b
	assert abs(t.D(1, 0) + w) < EXACT
	assert abs(t.C(1, 0) + b[3] / w) < EXACT
	assert abs(t.C(0, 0) - (2 * t.C(1, 0) + 2 * beta + 1) / w) < EXACT
	assert abs(t.D(2, 2) - (t.C(1, 0)**2 / 2 - b[4]) / w) < EXACT
	assert abs(t.D(1, 2) - (5 * t.D(2, 2) / 2 + t.C(0, 0) * t.C(1, 0) - 3 * (2 * beta + 1) / 2) / w) < EXACT
	e0 = (beta * (beta + 1) / 2 + t.a(0, 1) * t.C(1, 0) - 3 * t.D(1, 2) / 2 - t.C(0, 0)**2 / 2) / shift.q0**2
	assert abs(series[0] - e0) < EXACT
	assert abs(series[-1]) < EXACT

@pytest.mark.parametrize('k', [0, 1, 2, 3])
def test_table_invariants(k: int) -> None:
	shift, expansion, t, _ = _solve(AnharmonicOscillator(Fraction(1, 2), '0.3'), k, Fraction(1))
	S = t.half_orders
	for n in range(S + 1):
		assert t.D(0, n) == 0
		# W_n has parity (-1)^(n+1)
		assert all(c == 0 for j, c in enumerate(t.w[n]) if (j + n) % 2 == 0)
	assert abs(t.D(1, 0) + shift.omega) < EXACT
	# odd half-orders carry no energy
	assert all(t.e[s] == 0 for s in range(1, S + 1, 2))
	with pytest.raises(IndexError):
		t.a(k, 0)

@pytest.mark.parametrize('alpha,k,l_D', [('1', 1, Fraction(0)), ('0.01', 0, Fraction(19, 2)), ('50', 2, Fraction(1, 2))])
def test_riccati_residual(alpha: str, k: int, l_D: Fraction) -> None:
	_, expansion, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), alpha), k, l_D)
	assert max(tables.residuals) <= _residual_floor()
	assert max(riccati_residual(expansion, tables)) <= _residual_floor()

def test_nodal_polynomial() -> None:
	assert nodal_polynomial(0, 2) == [1]
	assert nodal_polynomial(1, 2) == [0, 1]
	f = nodal_polynomial(2, 2)
	# monic, a_0 = -k(k-1) / (4 omega)
	assert f[2] == 1
	assert f[1] == 0
	assert abs(f[0] + mp.mpf(2) / 8) < EXACT

def test_k0_has_no_nodal_corrections() -> None:
	_, _, t, _ = _solve(AnharmonicOscillator(Fraction(1, 2), '0.1'), 0, Fraction(0), 2)
	assert t.f[0] == [1]
	assert all(f == [] for f in t.f[1:])

def test_table3_raw_series() -> None:
	_, _, _, series = _solve(AnharmonicOscillator(Fraction(1, 2), 1), 1, Fraction(0))
	assert abs(sum_series(series) - mp.mpf('7.942405')) < mp.mpf('4e-6')
	_, _, _, series = _solve(AnharmonicOscillator(Fraction(1, 2), '0.01'), 1, Fraction(0))
	assert abs(sum_series(series) - mp.mpf('3.67109494')) < mp.mpf('2e-6')

def test_n_max_checks() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), 1)
	shift = solve_shift_at(V, 0, Fraction(0))
	with pytest.raises(DomainError):
		build_expansion(V, shift, -1)
	with pytest.raises(DomainError):
		solve_recursion(build_expansion(V, shift, 2), shift, 0, 3)

def test_dump_tables() -> None:
	_, _, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), 1), 1, Fraction(0), 2)
	rows = list(dump_tables(tables))
	names = { r[0] for r in rows }
	assert names == { 'D', 'C', 'a', 'residual' }
	assert ('D', 0, 1, tables.D(1, 0)) in rows
	assert len([r for r in rows if r[0] == 'residual']) == tables.half_orders + 1

def test_gaussian_at_order_zero() -> None:
	shift, _, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), '0.1'), 0, Fraction(0), 2)
	wf = Wavefunction(shift, tables, 0)
	F, U = wf.parts(mp.one)
	assert F == 1
	assert abs(U + shift.omega / 2) < EXACT
	d = mp.mpf('1e-3')
	second = (wf.parts(d)[1] - 2 * wf.parts(mp.zero)[1] + wf.parts(-d)[1]) / d**2
	assert abs(second + shift.omega) < mp.mpf('1e-20')
	assert evaluate_wavefunction(Wavefunction(shift, tables), shift.q0) == 1

def test_one_node_for_k1() -> None:
	shift, _, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), '0.5'), 1, Fraction(0))
	wf = Wavefunction(shift, tables, 2)
	h = 1 / mp.sqrt(shift.lbar)
	F0, U0 = wf.parts(mp.zero)
	assert abs(F0 - sum(tables.f[s][0] * h**s for s in range(3))) < EXACT
	assert U0 == 0
	xs = [mp.mpf(i) / 4 for i in range(-6, 13)]
	values = [wf.evaluate(shift.q0 * (1 + x * h)) for x in xs]
	signs = [v > 0 for v in values]
	assert sum(1 for a, b in zip(signs, signs[1:]) if a != b) == 1

def test_wavefunction_order_checked() -> None:
	shift, _, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), 1), 0, Fraction(0), 1)
	with pytest.raises(DomainError):
		Wavefunction(shift, tables, tables.half_orders + 1)
	with pytest.raises(DomainError):
		Wavefunction(shift, tables).evaluate(0)

def test_log_amplitude() -> None:
	shift, _, tables, _ = _solve(AnharmonicOscillator(Fraction(1, 2), '0.1'), 0, Fraction(1), 2)
	wf = Wavefunction(shift, tables)
	q = shift.q0 * mp.mpf('1.1')
	assert abs(wf.log_amplitude(q) - mp.log(wf.evaluate(q))) < EXACT
	assert wf.log_amplitude(shift.q0) == 0
