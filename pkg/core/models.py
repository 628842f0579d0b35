from typing import Any, Dict, List, Optional, Tuple
from fractions import Fraction

from util import poly
from .error import DomainError

class StateIndex:
	__slots__ = ('k', 'l', 'D')
	
	k: int
	l: int
	D: int
	
	def __init__(self, k: int, l: int, D: int) -> None:
		if k < 0 or l < 0 or D < 2:
			raise DomainError("state needs k >= 0, l >= 0, D >= 2 (got k={}, l={}, D={})".format(k, l, D))
		self.k = k
		self.l = l
		self.D = D
	
	@property
	def l_D(self) -> Fraction:
		return self.l + Fraction(self.D - 3, 2)
	
	def key(self) -> Tuple[int, int, int]:
		return (self.k, self.l, self.D)
	
	def __eq__(self, other: Any) -> bool:
		if not isinstance(other, StateIndex):
			return False
		return self.key() == other.key()
	
	def __hash__(self) -> int:
		return hash(self.key())
	
	def __repr__(self) -> str:
		return 'StateIndex(k={}, l={}, D={})'.format(self.k, self.l, self.D)

class ShiftData:
	__slots__ = ('k', 'l_D', 'q0', 'omega', 'beta', 'lbar', 'Q', 'e_m2')
	
	k: int
	l_D: Fraction
	q0: Any
	omega: Any
	beta: Any
	lbar: Any
	Q: Any
	# E^(-2), the classical circular-orbit energy scaled by 1/lbar^2
	e_m2: Any
	
	def __init__(self, k: int, l_D: Fraction, q0: Any, omega: Any, beta: Any, lbar: Any, Q: Any, e_m2: Any) -> None:
		self.k = k
		self.l_D = l_D
		self.q0 = q0
		self.omega = omega
		self.beta = beta
		self.lbar = lbar
		self.Q = Q
		self.e_m2 = e_m2

class ExpansionPolynomials:
	__slots__ = ('b', 'v', 'half_orders')
	
	# b[n] is B_n for n = 0 .. half_orders + 2
	b: List[Any]
	# v[n][j] is the x^j coefficient of v^(n), n = 0 .. half_orders
	v: List[List[Any]]
	half_orders: int
	
	def __init__(self, b: List[Any], v: List[List[Any]], half_orders: int) -> None:
		self.b = b
		self.v = v
		self.half_orders = half_orders

class CoefficientTables:
	"""
	Solved Riccati unknowns, stored per half-order s of lbar^(-1/2).
	
	`w[s]` holds the dense coefficients of W_s = U^(s) + G^(s-1), the
	half-order-s part of U'(x); `f[s]` holds the coefficients of the nodal
	polynomial correction F_s (for s = 0 it includes the monic x^k term);
	`e[s]` is the energy term q0^2 E^(s/2 - 1), zero at odd s.
	The named C/D/a tables are read off these.
	"""
	
	__slots__ = ('k', 'w', 'f', 'e', 'residuals')
	
	k: int
	w: List[List[Any]]
	f: List[List[Any]]
	e: List[Any]
	# max |coefficient| of the order-s identity after solving, relative to the known part
	residuals: List[Any]
	
	def __init__(self, k: int, w: List[List[Any]], f: List[List[Any]], e: List[Any], residuals: List[Any]) -> None:
		self.k = k
		self.w = w
		self.f = f
		self.e = e
		self.residuals = residuals
	
	@property
	def half_orders(self) -> int:
		return len(self.w) - 1
	
	def U(self, n: int) -> List[Any]:
		# odd part of W_n
		return [(c if j % 2 == 1 else 0 * c) for j, c in enumerate(self.w[n])]
	
	def G(self, n: int) -> List[Any]:
		# even part of W_(n+1)
		return [(c if j % 2 == 0 else 0 * c) for j, c in enumerate(self.w[n + 1])]
	
	def D(self, m: int, n: int) -> Any:
		if m == 0:
			return poly.coeff([], 0)
		return poly.coeff(self.U(n), 2 * m - 1)
	
	def C(self, m: int, n: int) -> Any:
		return poly.coeff(self.G(n), 2 * m)
	
	def a(self, p: int, n: int) -> Any:
		if not 0 <= p < self.k:
			raise IndexError("a_p needs 0 <= p < k")
		return poly.coeff(self.f[n], p)

class EnergySeries:
	__slots__ = ('e', 'lbar', 'n_max')
	
	# e[i] is E^(i - 2)
	e: List[Any]
	lbar: Any
	n_max: int
	
	def __init__(self, e: List[Any], lbar: Any, n_max: int) -> None:
		self.e = e
		self.lbar = lbar
		self.n_max = n_max
	
	def __getitem__(self, n: int) -> Any:
		if n < -2 or n > self.n_max:
			raise IndexError("E^({}) not in series".format(n))
		return self.e[n + 2]
	
	def corrections(self) -> List[Any]:
		# E^(0) .. E^(n_max)
		return self.e[2:]

class StateSolution:
	__slots__ = ('shift', 'tables', 'series', 'energy_raw', 'energy_pade', 'pade_spread', 'pade_error')
	
	shift: ShiftData
	tables: CoefficientTables
	series: EnergySeries
	energy_raw: Any
	energy_pade: Optional[Any]
	pade_spread: Optional[Any]
	# code of the Pade failure; with 'pole-near-evaluation' energy_pade is kept but untrusted
	pade_error: Optional[str]
	
	def __init__(
		self, shift: ShiftData, tables: CoefficientTables, series: EnergySeries, energy_raw: Any,
		energy_pade: Optional[Any], pade_spread: Optional[Any], *, pade_error: Optional[str] = None,
	) -> None:
		self.shift = shift
		self.tables = tables
		self.series = series
		self.energy_raw = energy_raw
		self.energy_pade = energy_pade
		self.pade_spread = pade_spread
		self.pade_error = pade_error
	
	@property
	def untrusted(self) -> bool:
		return self.pade_error is not None
	
	@property
	def energy(self) -> Any:
		# best available estimate
		if self.energy_pade is not None:
			return self.energy_pade
		return self.energy_raw

class SpectrumEntry:
	__slots__ = ('state', 'l_D', 'solution', 'ladder', 'error')
	
	state: StateIndex
	l_D: Fraction
	solution: Optional[StateSolution]
	ladder: List[StateIndex]
	# error code of a failed solve
	error: Optional[str]
	
	def __init__(
		self, state: StateIndex, ladder: List[StateIndex], *,
		solution: Optional[StateSolution] = None, error: Optional[str] = None,
	) -> None:
		self.state = state
		self.l_D = state.l_D
		self.ladder = ladder
		self.solution = solution
		self.error = error
	
	@property
	def energy_raw(self) -> Optional[Any]:
		return (None if self.solution is None else self.solution.energy_raw)
	
	@property
	def energy_pade(self) -> Optional[Any]:
		return (None if self.solution is None else self.solution.energy_pade)
	
	@property
	def pade_spread(self) -> Optional[Any]:
		return (None if self.solution is None else self.solution.pade_spread)
	
	@property
	def shift(self) -> Optional[ShiftData]:
		return (None if self.solution is None else self.solution.shift)
	
	@property
	def failed(self) -> bool:
		return self.error is not None

class OracleConfig:
	__slots__ = ('basis_size', 'scale', 'digits', 'max_basis')
	
	basis_size: int
	# oscillator length of the basis; None picks an optimised one
	scale: Optional[Any]
	digits: int
	max_basis: int
	
	def __init__(self, basis_size: int = 16, scale: Optional[Any] = None, digits: int = 40, max_basis: int = 128) -> None:
		if basis_size < 4:
			raise DomainError("oracle basis_size must be >= 4")
		if scale is not None and scale <= 0:
			raise DomainError("oracle scale must be > 0")
		self.basis_size = basis_size
		self.scale = scale
		self.digits = digits
		self.max_basis = max_basis
	
	def with_size(self, basis_size: int, scale: Optional[Any] = None) -> 'OracleConfig':
		return OracleConfig(
			basis_size, (self.scale if scale is None else scale), self.digits, self.max_basis,
		)

class Fixture:
	__slots__ = ('kind', 'params', 'l_D', 'k', 'energy', 'delta', 'basis_size', 'scale', 'date_created')
	
	kind: str
	params: Dict[str, str]
	l_D: Fraction
	k: int
	# decimal strings, converted at the reader's precision
	energy: str
	delta: Optional[str]
	basis_size: int
	scale: Optional[str]
	date_created: Any
	
	def __init__(
		self, kind: str, params: Dict[str, str], l_D: Fraction, k: int, energy: str, delta: Optional[str],
		basis_size: int, scale: Optional[str], date_created: Any,
	) -> None:
		self.kind = kind
		self.params = params
		self.l_D = l_D
		self.k = k
		self.energy = energy
		self.delta = delta
		self.basis_size = basis_size
		self.scale = scale
		self.date_created = date_created
