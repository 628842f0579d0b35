from typing import Any, Optional
from fractions import Fraction
from mpmath import mp

from .engine import build_expansion, solve_recursion, sum_series
from .error import DegenerateTable, InvalidOption, PoleNearEvaluation
from .models import StateIndex, StateSolution
from .pade import accelerated_energy, pade_sequence, stability_degrees
from .potentials import RadialPotential
from .shift import solve_shift_at
import settings

class Solver:
	__slots__ = ('digits', 'order', 'pade_num', 'pade_den', 'tol')
	
	digits: int
	order: int
	pade_num: int
	pade_den: int
	tol: Optional[Any]
	
	def __init__(
		self, *, digits: Optional[int] = None, order: Optional[int] = None,
		pade_num: Optional[int] = None, pade_den: Optional[int] = None, tol: Optional[Any] = None,
	) -> None:
		self.digits = (settings.DIGITS if digits is None else digits)
		self.order = (settings.ORDER if order is None else order)
		self.pade_num = (settings.PADE_NUM if pade_num is None else pade_num)
		self.pade_den = (settings.PADE_DEN if pade_den is None else pade_den)
		self.tol = tol
		if self.digits < 15:
			raise InvalidOption("digits must be >= 15")
		if self.order < 0:
			raise InvalidOption("order must be >= 0")
		if self.pade_num < 0 or self.pade_den < 0 or self.pade_num + self.pade_den > self.order:
			raise InvalidOption("Pade [{},{}] needs order >= {}".format(self.pade_num, self.pade_den, self.pade_num + self.pade_den))
	
	def solve(self, potential: RadialPotential, k: int, l_D: Fraction) -> StateSolution:
		with mp.workdps(self.digits):
			shift = solve_shift_at(potential, k, l_D, (None if self.tol is None else mp.mpf(self.tol)))
			expansion = build_expansion(potential, shift, self.order)
			tables, series = solve_recursion(expansion, shift, k, self.order)
			raw = sum_series(series)
			pade_error = None
			try:
				pade = accelerated_energy(series, self.pade_num, self.pade_den)
			except PoleNearEvaluation as ex:
				pade = ex.value
				pade_error = ex.code
			except DegenerateTable as ex:
				pade = None
				pade_error = ex.code
			_, spread = pade_sequence(series, stability_degrees(self.pade_num, self.pade_den))
		return StateSolution(shift, tables, series, raw, pade, spread, pade_error = pade_error)
	
	def solve_state(self, potential: RadialPotential, state: StateIndex) -> StateSolution:
		return self.solve(potential, state.k, state.l_D)
