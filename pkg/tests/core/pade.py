from fractions import Fraction
import pytest
from mpmath import mp

from core.engine import build_expansion, solve_recursion, sum_series
from core.error import DegenerateTable, DomainError, PoleNearEvaluation
from core.models import EnergySeries
from core.pade import accelerated_energy, build_pade, pade_sequence, series_approximant, stability_degrees
from core.potentials import AnharmonicOscillator, HarmonicOscillator, RadialPotential
from core.shift import solve_shift_at

EXACT = mp.mpf('1e-40')

def _series(V: RadialPotential, k: int, l_D: Fraction) -> EnergySeries:
	shift = solve_shift_at(V, k, l_D)
	_, series = solve_recursion(build_expansion(V, shift, 8), shift, k, 8)
	return series

def test_recovers_rational_function() -> None:
	# (1 + x) / (1 + 2x)
	r = build_pade([1, -1, 2], 1, 1)
	assert r.degrees == (1, 1)
	assert all(abs(a - b) < EXACT for a, b in zip(r.numerator, [1, 1]))
	assert all(abs(a - b) < EXACT for a, b in zip(r.denominator_coeffs, [1, 2]))
	assert abs(r(mp.mpf('0.3')) - mp.mpf('1.3') / mp.mpf('1.6')) < EXACT

def test_geometric_series() -> None:
	r = build_pade([1, 1, 1], 0, 1)
	assert r.degrees == (0, 1)
	assert abs(r.numerator[0] - 1) < EXACT
	assert abs(r.denominator_coeffs[1] + 1) < EXACT
	assert abs(r(mp.mpf('0.5')) - 2) < EXACT
	# only c_0 .. c_(M+N) are read
	assert build_pade([1, 1, 7, -3], 0, 1).denominator_coeffs == r.denominator_coeffs

def test_denominator_starts_at_one() -> None:
	r = build_pade([2, 3, -1, 4, 5], 2, 2)
	assert r.denominator_coeffs[0] == 1

def test_reexpansion_matches_input() -> None:
	c = [mp.mpf(1) / mp.factorial(n) * (-1)**n for n in range(9)]
	r = build_pade(c, 4, 4)
	t = r.taylor(8)
	for a, b in zip(t, c):
		assert abs(a - b) < mp.mpf('1e-35')

def test_polynomial_needs_no_denominator() -> None:
	r = build_pade([1, 2, 0, 0, 0], 2, 2)
	assert r.denominator_coeffs == [1]
	assert r.degrees == (2, 0)

def test_coefficient_count_checked() -> None:
	with pytest.raises(DomainError):
		build_pade([1, 2, 3], 2, 2)
	with pytest.raises(DomainError):
		build_pade([1], -1, 1)

def test_degenerate_table() -> None:
	with pytest.raises(DegenerateTable):
		build_pade([1, 0, 0, 0, 1], 2, 2)

def test_pole_near_evaluation() -> None:
	# 1 / (1 - z) at z = 1 / lbar just short of the pole
	lbar = 1 / (1 - mp.mpf('1e-12'))
	series = EnergySeries([mp.zero, mp.zero, mp.one, mp.one], lbar, 1)
	with pytest.raises(PoleNearEvaluation) as info:
		accelerated_energy(series, 0, 1)
	assert info.value.value > mp.mpf('1e11')
	assert info.value.code == 'pole-near-evaluation'

def test_series_too_short() -> None:
	series = EnergySeries([mp.zero, mp.zero, mp.one, mp.one], mp.mpf(3), 1)
	with pytest.raises(DomainError):
		series_approximant(series, 2, 2)

def test_harmonic_matches_raw_sum() -> None:
	series = _series(HarmonicOscillator(Fraction(1, 2)), 1, Fraction(1))
	assert abs(accelerated_energy(series, 4, 4) - sum_series(series)) < mp.mpf('1e-30')
	assert abs(accelerated_energy(series, 4, 4) - mp.mpf('4.5')) < mp.mpf('1e-30')

def test_table3_pade() -> None:
	series = _series(AnharmonicOscillator(Fraction(1, 2), 1), 1, Fraction(0))
	assert abs(accelerated_energy(series, 4, 4) - mp.mpf('7.942404')) < mp.mpf('1e-6')
	series = _series(AnharmonicOscillator(Fraction(1, 2), '0.002'), 1, Fraction(0))
	assert abs(accelerated_energy(series, 4, 4) - mp.mpf('3.536744133')) < mp.mpf('2e-7')

def test_weak_coupling_pade_close_to_sum() -> None:
	# g = 1e-4, 2D, k = 0, l = 5
	series = _series(AnharmonicOscillator(Fraction(1, 2), Fraction(1, 20000)), 0, Fraction(9, 2))
	E = sum_series(series)
	assert abs(accelerated_energy(series, 4, 4) - E) / E < mp.mpf('1e-6')
	assert abs(2 * E - mp.mpf('12.00419695953')) < mp.mpf('1e-11')

def test_pade_sequence_spread() -> None:
	series = _series(AnharmonicOscillator(Fraction(1, 2), '0.1'), 1, Fraction(0))
	values, spread = pade_sequence(series, stability_degrees(4, 4))
	assert len(values) == 3
	assert all(v is not None for v in values)
	assert spread is not None
	assert spread < mp.mpf('1e-2')

def test_stability_degrees() -> None:
	assert stability_degrees(4, 4) == [(4, 4), (3, 3), (2, 2)]
	assert stability_degrees(3, 3) == [(3, 3), (2, 2)]
