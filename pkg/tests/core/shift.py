from typing import Any, Dict, List, Tuple
from fractions import Fraction
import pytest
from mpmath import mp

from core.engine import build_expansion
from core.error import DomainError, UnstableOrbit
from core.models import StateIndex
from core.potentials import AnharmonicOscillator, CoulombPotential, HarmonicOscillator, RadialPotential
from core.shift import leading_energy, leading_energy_orders, omega_at, solve_shift, solve_shift_at
from util.misc import to_mpf

TOL = mp.mpf('1e-40')

def test_omega_closed_forms() -> None:
	assert omega_at(HarmonicOscillator(Fraction(1, 2)), '1.7') == 2
	assert abs(omega_at(CoulombPotential(1), 3) - 1) < TOL
	# quartic-dominated orbits approach sqrt(6)
	w = omega_at(AnharmonicOscillator(Fraction(1, 2), 1), 10**6)
	assert w < mp.sqrt(6)
	assert mp.sqrt(6) - w < mp.mpf('1e-10')

def test_harmonic_shift() -> None:
	shift = solve_shift(HarmonicOscillator(Fraction(1, 2)), StateIndex(0, 1, 3))
	assert abs(shift.q0 - mp.sqrt(mp.mpf('2.5'))) < TOL
	assert abs(shift.omega - 2) < TOL
	assert abs(shift.beta + mp.mpf('1.5')) < TOL
	assert abs(shift.lbar - mp.mpf('2.5')) < TOL
	assert abs(shift.Q - shift.lbar**2) < TOL
	e_m2, e_m1 = leading_energy_orders(shift)
	assert abs(e_m2 - mp.mpf('0.4')) < TOL
	assert abs(e_m1) < TOL
	assert abs(shift.lbar**2 * e_m2 - mp.mpf('2.5')) < TOL

@pytest.mark.parametrize('k,l_D', [(0, Fraction(0)), (1, Fraction(-1, 2)), (2, Fraction(3, 2))])
def test_coulomb_shift(k: int, l_D: Fraction) -> None:
	shift = solve_shift_at(CoulombPotential(1), k, l_D)
	nu = to_mpf(l_D + k + 1)
	assert abs(shift.omega - 1) < TOL
	assert abs(shift.beta + (k + 1)) < TOL
	assert abs(shift.lbar - nu) < mp.mpf('1e-35')
	assert abs(shift.q0 - nu**2) < mp.mpf('1e-35')
	assert abs(shift.lbar**2 * shift.e_m2 + 1 / (2 * nu**2)) < mp.mpf('1e-35')

@pytest.mark.parametrize('alpha,k,l_D', [('0.1', 1, Fraction(0)), ('1', 0, Fraction(-1, 2)), ('8000', 1, Fraction(10))])
def test_quartic_shift_invariants(alpha: str, k: int, l_D: Fraction) -> None:
	V = AnharmonicOscillator(Fraction(1, 2), alpha)
	shift = solve_shift_at(V, k, l_D)
	q0 = shift.q0
	assert abs(shift.lbar - mp.sqrt(q0**3 * V.derivative(q0, 1))) < mp.mpf('1e-35') * shift.lbar
	assert abs(shift.omega - omega_at(V, q0)) < TOL
	assert abs(shift.beta + (mp.mpf(1) / 2 + (k + mp.mpf(1) / 2) * shift.omega)) < TOL
	assert 2 <= shift.omega < mp.sqrt(6)
	# q0 minimises the leading energy
	h = q0 * mp.mpf('1e-4')
	assert leading_energy(V, q0 + h, shift.Q) > shift.e_m2
	assert leading_energy(V, q0 - h, shift.Q) > shift.e_m2
	_, e_m1 = leading_energy_orders(shift)
	assert abs(e_m1) < mp.mpf('1e-35')

def test_leading_energy_is_stationary() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), '0.1')
	shift = solve_shift_at(V, 1, Fraction(0))
	q0 = shift.q0
	
	def odd_part(h: Any) -> Any:
		return leading_energy(V, q0 + h, shift.Q) - leading_energy(V, q0 - h, shift.Q)
	
	# a vanishing gradient leaves only the cubic term, so halving h divides the odd part by 8
	h = q0 * mp.mpf('1e-4')
	ratio = odd_part(h) / odd_part(h / 2)
	assert abs(ratio - 8) < mp.mpf('1e-3')
	# the even part is quadratic: the minimum is non-degenerate
	curv = leading_energy(V, q0 + h, shift.Q) + leading_energy(V, q0 - h, shift.Q) - 2 * shift.e_m2
	assert curv > 0

def test_frequency_matches_expansion() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), 1)
	shift = solve_shift_at(V, 1, Fraction(0))
	expansion = build_expansion(V, shift, 2)
	assert abs(shift.omega**2 - 2 * expansion.b[2]) < mp.mpf('1e-35')
	assert abs(expansion.b[1]) < mp.mpf('1e-35')

def test_q0_increases_with_l_D() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), '0.3')
	q = [solve_shift_at(V, 1, Fraction(n, 2)).q0 for n in range(0, 21)]
	assert all(a < b for a, b in zip(q, q[1:]))

def test_domain_errors() -> None:
	V = AnharmonicOscillator(Fraction(1, 2), 1)
	with pytest.raises(DomainError):
		solve_shift_at(V, 0, Fraction(-1))
	with pytest.raises(DomainError):
		solve_shift_at(V, -1, Fraction(0))

def test_unstable_orbit() -> None:
	with pytest.raises(UnstableOrbit):
		omega_at(_Barrier(), 1)

class _Barrier(RadialPotential):
	__slots__ = ()
	
	kind = 'barrier'
	
	def power_terms(self) -> List[Tuple[int, Any]]:
		return [(2, -mp.one)]
	
	def describe(self) -> Dict[str, str]:
		return {}
