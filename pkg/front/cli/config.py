from typing import Optional
from fractions import Fraction

from core.error import InvalidOption
from core.models import StateIndex
from core.potentials import AnharmonicOscillator
from core.solver import Solver
from util.misc import half_integer
from .output import check_format
from .tables import g_to_alpha

class RunConfig:
	__slots__ = (
		'alpha0', 'alpha', 'k', 'l', 'D', 'l_D',
		'order', 'pade_num', 'pade_den', 'digits', 'tol', 'format', 'double_energy',
	)
	
	alpha0: Fraction
	alpha: Fraction
	k: int
	# None when the state was given by l_D alone
	l: Optional[int]
	D: Optional[int]
	l_D: Fraction
	order: int
	pade_num: int
	pade_den: int
	digits: int
	tol: Optional[str]
	format: str
	# display only
	double_energy: bool
	
	def __init__(
		self, *, alpha0: str, alpha: Optional[str], g: Optional[str], k: int, l: Optional[int], dim: int,
		lD: Optional[str], order: int, pade_num: int, pade_den: int, digits: int, tol: Optional[str] = None,
		format: str = 'table', double_energy: bool = False,
	) -> None:
		if alpha is not None and g is not None:
			raise InvalidOption("--alpha and --g are mutually exclusive")
		if l is not None and lD is not None:
			raise InvalidOption("--l/--dim and --lD are mutually exclusive")
		check_format(format)
		try:
			self.alpha0 = Fraction(alpha0)
			if g is not None:
				self.alpha = g_to_alpha(g)
			else:
				self.alpha = Fraction(alpha or '0')
			self.l_D = (Fraction(0) if lD is None else half_integer(lD))
		except ValueError as ex:
			raise InvalidOption(str(ex))
		self.k = k
		if lD is None:
			self.l = (0 if l is None else l)
			self.D = dim
			self.l_D = StateIndex(k, self.l, dim).l_D
		else:
			self.l = None
			self.D = None
		self.order = order
		self.pade_num = pade_num
		self.pade_den = pade_den
		self.digits = digits
		self.tol = tol
		self.format = format
		self.double_energy = double_energy
	
	def potential(self) -> AnharmonicOscillator:
		return AnharmonicOscillator(self.alpha0, self.alpha)
	
	def solver(self) -> Solver:
		return Solver(
			digits = self.digits, order = self.order,
			pade_num = self.pade_num, pade_den = self.pade_den, tol = self.tol,
		)
	
	def state(self) -> Optional[StateIndex]:
		if self.l is None or self.D is None:
			return None
		return StateIndex(self.k, self.l, self.D)
