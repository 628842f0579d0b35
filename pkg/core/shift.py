from typing import Any, Optional, Tuple
from fractions import Fraction
from mpmath import mp

from util.misc import Logger, Number, to_mpf
from .error import DegenerateState, DomainError, NoBracket, UnstableOrbit
from .models import ShiftData, StateIndex
from .potentials import RadialPotential
import settings

BRACKET_LO = '1e-3'
BRACKET_LO_MIN = '1e-30'
BRACKET_HI = 1
BRACKET_HI_DOUBLINGS = 60

def omega_at(potential: RadialPotential, q: Number) -> Any:
	q = to_mpf(q)
	d1 = potential.derivative(q, 1)
	if d1 <= 0:
		raise UnstableOrbit("V'(q) <= 0 at q = {}; no circular orbit".format(mp.nstr(q, 10)))
	radicand = 3 + q * potential.derivative(q, 2) / d1
	if radicand < 0:
		raise UnstableOrbit("3 + qV''/V' < 0 at q = {}".format(mp.nstr(q, 10)))
	return mp.sqrt(radicand)

def leading_energy(potential: RadialPotential, q: Number, Q: Any) -> Any:
	q = to_mpf(q)
	return 1 / (2 * q**2) + potential.value(q) / Q

def default_tol() -> Any:
	return mp.mpf(10) ** -(mp.dps - 10)

def solve_shift(potential: RadialPotential, state: StateIndex, tol: Optional[Any] = None) -> ShiftData:
	return solve_shift_at(potential, state.k, state.l_D, tol)

def solve_shift_at(potential: RadialPotential, k: int, l_D: Fraction, tol: Optional[Any] = None) -> ShiftData:
	if k < 0:
		raise DomainError("node count k must be >= 0")
	if l_D < Fraction(-1, 2):
		raise DomainError("l_D must be >= -1/2 (got {})".format(l_D))
	if tol is None:
		tol = default_tol()
	logger = Logger('shift', potential, settings.DEBUG_SHIFT)
	
	l_D_mp = to_mpf(l_D)
	kh = k + mp.mpf(1) / 2
	
	def residual(q: Any) -> Any:
		return mp.sqrt(q**3 * potential.derivative(q, 1)) - l_D_mp - mp.mpf(1) / 2 - kh * omega_at(potential, q)
	
	lo, hi = _bracket(residual, logger)
	# bisection error is compared against tol * max(1, q)
	steps = int(mp.ceil(mp.log(hi / (tol * min(lo, 1)), 2))) + 8
	q0 = mp.findroot(residual, (lo, hi), solver = 'bisect', tol = tol * min(lo, 1), maxsteps = steps, verify = False)
	logger.info("bisection", steps, "steps, q0 =", mp.nstr(q0, 20))
	
	omega = omega_at(potential, q0)
	beta = -(mp.mpf(1) / 2 + kh * omega)
	lbar = l_D_mp - beta
	if lbar <= 0:
		raise DegenerateState("lbar = l_D - beta vanishes for k={}, l_D={}".format(k, l_D))
	Q = lbar**2
	e_m2 = leading_energy(potential, q0, Q)
	return ShiftData(k, l_D, q0, omega, beta, lbar, Q, e_m2)

def leading_energy_orders(shift: ShiftData, state: Optional[StateIndex] = None) -> Tuple[Any, Any]:
	k = (shift.k if state is None else state.k)
	e_m1 = ((2 * shift.beta + 1) / 2 + (k + mp.mpf(1) / 2) * shift.omega) / shift.q0**2
	return shift.e_m2, e_m1

def _bracket(residual: Any, logger: Logger) -> Tuple[Any, Any]:
	lo = mp.mpf(BRACKET_LO)
	while residual(lo) >= 0:
		lo /= 2
		if lo < mp.mpf(BRACKET_LO_MIN):
			raise NoBracket("residual is non-negative down to q = {}".format(BRACKET_LO_MIN))
	hi = mp.mpf(BRACKET_HI)
	doublings = 0
	while residual(hi) <= 0:
		lo = hi
		hi *= 2
		doublings += 1
		if doublings > BRACKET_HI_DOUBLINGS:
			raise NoBracket("residual stays negative up to q = 2^{}".format(BRACKET_HI_DOUBLINGS))
	logger.info("bracket", mp.nstr(lo, 8), mp.nstr(hi, 8), "after", doublings, "doublings")
	return lo, hi
