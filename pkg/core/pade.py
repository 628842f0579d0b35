from typing import Any, List, Optional, Sequence, Tuple
from mpmath import mp

from util import poly
from .error import DegenerateTable, DomainError, PoleNearEvaluation, ServerError
from .models import EnergySeries

# default [M,N] plus the lower diagonal members used for the stability spread
SEQUENCE = [(3, 3), (2, 2)]

class RationalApproximant:
	__slots__ = ('numerator', 'denominator_coeffs')
	
	# P_0 .. P_M
	numerator: List[Any]
	# 1, q_1 .. q_N
	denominator_coeffs: List[Any]
	
	def __init__(self, numerator: List[Any], denominator_coeffs: List[Any]) -> None:
		assert denominator_coeffs[0] == 1
		self.numerator = numerator
		self.denominator_coeffs = denominator_coeffs
	
	@property
	def degrees(self) -> Tuple[int, int]:
		return len(self.numerator) - 1, len(self.denominator_coeffs) - 1
	
	def __call__(self, z: Any) -> Any:
		return poly.evaluate(self.numerator, z) / self.denominator(z)
	
	def denominator(self, z: Any) -> Any:
		return poly.evaluate(self.denominator_coeffs, z)
	
	def taylor(self, n: int) -> List[Any]:
		# Maclaurin coefficients t_0 .. t_n of P/Q
		q = self.denominator_coeffs
		t = [] # type: List[Any]
		for i in range(n + 1):
			c = poly.coeff(self.numerator, i)
			for j in range(1, min(i, len(q) - 1) + 1):
				c -= q[j] * t[i - j]
			t.append(c)
		return t

def build_pade(coeffs: Sequence[Any], M: int, N: int) -> RationalApproximant:
	if M < 0 or N < 0:
		raise DomainError("Pade degrees must be >= 0")
	if len(coeffs) < M + N + 1:
		raise DomainError("[{},{}] needs {} coefficients, got {}".format(M, N, M + N + 1, len(coeffs)))
	# coefficients past c_(M+N) do not enter the approximant
	c = [mp.mpf(x) for x in coeffs[:M + N + 1]]
	scale = max(mp.one, poly.max_abs(c))
	rhs = c[M + 1:]
	if N == 0 or poly.max_abs(rhs) <= negligible() * scale:
		# nothing for a denominator to fit
		return RationalApproximant(c[:M + 1], [mp.one])
	
	A = mp.matrix(N)
	for i in range(N):
		for j in range(N):
			if M + i - j >= 0:
				A[i, j] = c[M + i - j]
	try:
		cond = mp.cond(A)
	except ZeroDivisionError:
		raise DegenerateTable("[{},{}] denominator system is singular".format(M, N))
	if cond > mp.mpf(10) ** (mp.dps - 5):
		raise DegenerateTable("[{},{}] denominator system has condition {}".format(M, N, mp.nstr(cond, 3)))
	try:
		p, q = mp.pade(c, M, N)
	except ZeroDivisionError:
		raise DegenerateTable("[{},{}] denominator system is singular".format(M, N))
	return RationalApproximant([mp.mpf(x) for x in p], [mp.mpf(x) for x in q])

def accelerated_energy(series: EnergySeries, M: int, N: int) -> Any:
	approximant = series_approximant(series, M, N)
	lbar = series.lbar
	z = 1 / lbar
	den = approximant.denominator(z)
	rational = (poly.evaluate(approximant.numerator, z) / den if den else mp.inf)
	value = lbar**2 * series[-2] + lbar * series[-1] + rational
	if abs(den) < mp.mpf('1e-8') * max(mp.one, poly.max_abs(approximant.denominator_coeffs)):
		raise PoleNearEvaluation("[{},{}] denominator is {} at 1/lbar".format(M, N, mp.nstr(den, 3)), value)
	return value

def series_approximant(series: EnergySeries, M: int, N: int) -> RationalApproximant:
	c = series.corrections()
	if len(c) < M + N + 1:
		raise DomainError("[{},{}] needs E^(0)..E^({}), series stops at E^({})".format(M, N, M + N, series.n_max))
	return build_pade(c[:M + N + 1], M, N)

def pade_sequence(series: EnergySeries, degrees: Sequence[Tuple[int, int]]) -> Tuple[List[Optional[Any]], Optional[Any]]:
	values = [] # type: List[Optional[Any]]
	for M, N in degrees:
		try:
			values.append(accelerated_energy(series, M, N))
		except (ServerError, DomainError):
			values.append(None)
	present = [x for x in values if x is not None]
	if len(present) < 2:
		return values, None
	return values, max(present) - min(present)

def stability_degrees(M: int, N: int) -> List[Tuple[int, int]]:
	degrees = [(M, N)]
	for d in SEQUENCE:
		if d not in degrees:
			degrees.append(d)
	return degrees

def negligible() -> Any:
	return mp.mpf(10) ** -(mp.dps - 15)
