from typing import Any, Dict, List, Tuple
from abc import ABCMeta, abstractmethod
from mpmath import mp

from util.misc import Number, to_mpf
from .error import DomainError, UnsupportedPotential

class RadialPotential(metaclass = ABCMeta):
	__slots__ = ()
	
	kind = 'radial'
	
	@abstractmethod
	def power_terms(self) -> List[Tuple[int, Any]]:
		# V(q) = sum(c * q**p for p, c in power_terms()), coefficients as mpf
		pass
	
	@abstractmethod
	def describe(self) -> Dict[str, str]:
		pass
	
	def value(self, q: Number) -> Any:
		return self.derivative(q, 0)
	
	def derivative(self, q: Number, n: int) -> Any:
		if n < 0:
			raise DomainError("derivative order must be >= 0 (got {})".format(n))
		q = _positive(q)
		total = mp.zero
		for p, c in self.power_terms():
			ff = falling_factorial(p, n)
			if ff == 0: continue
			total += c * ff * q ** (p - n)
		return total
	
	def even_powers(self) -> List[Tuple[int, Any]]:
		terms = self.power_terms()
		for p, _ in terms:
			if p < 0 or p % 2 != 0:
				raise UnsupportedPotential("{} has a q^{} term; only even non-negative powers are supported".format(self.kind, p))
		return terms
	
	def __repr__(self) -> str:
		return '{}({})'.format(type(self).__name__, ', '.join('{}={}'.format(k, v) for k, v in self.describe().items()))

class AnharmonicOscillator(RadialPotential):
	__slots__ = ('alpha0', 'alpha')
	
	kind = 'aho'
	
	alpha0: Number
	alpha: Number
	
	def __init__(self, alpha0: Number, alpha: Number) -> None:
		if to_mpf(alpha0) <= 0:
			raise DomainError("alpha0 must be > 0 (double wells are not supported)")
		if to_mpf(alpha) < 0:
			raise DomainError("alpha must be >= 0")
		self.alpha0 = alpha0
		self.alpha = alpha
	
	def power_terms(self) -> List[Tuple[int, Any]]:
		return [(2, to_mpf(self.alpha0)), (4, to_mpf(self.alpha))]
	
	def describe(self) -> Dict[str, str]:
		return { 'alpha0': str(self.alpha0), 'alpha': str(self.alpha) }

class HarmonicOscillator(RadialPotential):
	__slots__ = ('alpha0',)
	
	kind = 'harmonic'
	
	alpha0: Number
	
	def __init__(self, alpha0: Number) -> None:
		if to_mpf(alpha0) <= 0:
			raise DomainError("alpha0 must be > 0")
		self.alpha0 = alpha0
	
	def power_terms(self) -> List[Tuple[int, Any]]:
		return [(2, to_mpf(self.alpha0))]
	
	def describe(self) -> Dict[str, str]:
		return { 'alpha0': str(self.alpha0) }

class CoulombPotential(RadialPotential):
	__slots__ = ('Z',)
	
	kind = 'coulomb'
	
	Z: Number
	
	def __init__(self, Z: Number) -> None:
		if to_mpf(Z) <= 0:
			raise DomainError("Coulomb charge Z must be > 0")
		self.Z = Z
	
	def power_terms(self) -> List[Tuple[int, Any]]:
		return [(-1, -to_mpf(self.Z))]
	
	def describe(self) -> Dict[str, str]:
		return { 'Z': str(self.Z) }

KINDS = {
	AnharmonicOscillator.kind: AnharmonicOscillator,
	HarmonicOscillator.kind: HarmonicOscillator,
	CoulombPotential.kind: CoulombPotential,
}

def from_params(kind: str, params: Dict[str, str]) -> RadialPotential:
	cls = KINDS.get(kind)
	if cls is None:
		raise UnsupportedPotential("unknown potential kind: {}".format(kind))
	return cls(**params) # type: ignore

def falling_factorial(p: int, n: int) -> int:
	# d^n/dq^n q^p = p (p-1) ... (p-n+1) q^(p-n)
	r = 1
	for i in range(n):
		r *= (p - i)
	return r

def _positive(q: Number) -> Any:
	q = to_mpf(q)
	if q <= 0:
		raise DomainError("potential evaluated at q = {} (needs q > 0)".format(mp.nstr(q, 10)))
	return q
