"""
Variational check on the radial equation
	
	-u''/2 + l_D (l_D + 1) u / (2 q^2) + V(q) u = E u

in the orthonormal basis q^(l_D+1) L_n^(a)(q^2/s^2) exp(-q^2/(2 s^2)),
a = l_D + 1/2. Multiplication by q^2/s^2 is the Laguerre Jacobi matrix J,
so q^(2p) = s^(2p) J^p (taken from a basis p functions larger, which makes
the truncation exact) and kinetic plus centrifugal energy is
(diag(2n + a + 1) - J/2) / s^2.
"""

from typing import Any, List, Optional, Tuple
from fractions import Fraction
from mpmath import mp
import numpy as np
from scipy.optimize import minimize_scalar

from util.misc import Logger, to_mpf
from .error import DomainError, IllConditionedOverlap, NoConvergence, UnsupportedPotential
from .models import OracleConfig
from .potentials import RadialPotential
import settings

# log-scale search window around the harmonic length
SCALE_WINDOW = (-3.0, 1.0)

def hamiltonian(potential: RadialPotential, l_D: Fraction, size: int, scale: Any) -> Any:
	a = _laguerre_a(l_D)
	terms = _halved_powers(potential)
	top = max(p for p, _ in terms)
	big = size + top
	J = _jacobi(a, big)
	s2 = to_mpf(scale) ** 2
	
	H = mp.matrix(size, size)
	for i in range(size):
		H[i, i] = (2 * i + a + 1) / s2
		for j in range(max(0, i - 1), min(size, i + 2)):
			H[i, j] -= J[i][j] / (2 * s2)
	power = [[(mp.one if i == j else mp.zero) for j in range(big)] for i in range(big)]
	for p in range(1, top + 1):
		power = _tridiagonal_times(J, power)
		for exp, c in terms:
			if exp != p or not c: continue
			for i in range(size):
				for j in range(size):
					H[i, j] += c * s2**p * power[i][j]
	for exp, c in terms:
		if exp == 0:
			for i in range(size):
				H[i, i] += c
	return H

def diagonalize(potential: RadialPotential, l_D: Fraction, config: OracleConfig, count: int = 1, *, k: int = 0) -> List[Any]:
	if count < 1 or count > config.basis_size:
		raise DomainError("count must be in 1..basis_size")
	scale = config.scale
	if scale is None:
		scale = optimize_scale(potential, l_D, k, config.basis_size)
	with mp.workdps(config.digits):
		H = hamiltonian(potential, l_D, config.basis_size, scale)
		E = mp.eigsy(H, eigvals_only = True)
		energies = sorted(E[i] for i in range(config.basis_size))
	return energies[:count]

def harmonic_scale(potential: RadialPotential) -> float:
	for p, c in potential.even_powers():
		if p == 2 and c > 0:
			return float((2 * c) ** mp.mpf('-0.25'))
	return 1.0

def optimize_scale(potential: RadialPotential, l_D: Fraction, k: int, size: int) -> float:
	if k >= size:
		raise DomainError("state k={} needs more than {} basis functions".format(k, size))
	logger = Logger('oracle', potential, settings.DEBUG_ORACLE)
	a = float(_laguerre_a(l_D))
	terms = [(p, float(c)) for p, c in _halved_powers(potential)]
	s0 = harmonic_scale(potential)
	
	def objective(log_s: float) -> float:
		H = _hamiltonian_double(terms, a, size, float(np.exp(log_s)))
		return float(np.linalg.eigvalsh(H)[k])
	
	lo, hi = np.log(s0) + SCALE_WINDOW[0], np.log(s0) + SCALE_WINDOW[1]
	res = minimize_scalar(objective, bounds = (lo, hi), method = 'bounded', options = { 'xatol': 1e-6 })
	scale = float(np.exp(res.x))
	logger.info("scale", scale, "for k =", k, "size", size, "E ~", res.fun)
	return scale

def converged_energy(
	potential: RadialPotential, l_D: Fraction, k: int, tol: Any, config: Optional[OracleConfig] = None,
) -> Tuple[Any, Any]:
	energy, delta, _ = converge(potential, l_D, k, tol, config)
	return energy, delta

def converge(
	potential: RadialPotential, l_D: Fraction, k: int, tol: Any, config: Optional[OracleConfig] = None,
) -> Tuple[Any, Any, int]:
	# doubles the basis until two sizes agree to the relative tol; returns the larger size too
	if config is None:
		config = OracleConfig(settings.ORACLE_BASIS, None, settings.ORACLE_DIGITS, settings.ORACLE_MAX_BASIS)
	tol = to_mpf(tol)
	if tol <= 0:
		raise DomainError("tol must be > 0")
	logger = Logger('oracle', potential, settings.DEBUG_ORACLE)
	size = max(config.basis_size, k + 2)
	previous = None # type: Optional[Any]
	delta = None # type: Optional[Any]
	while size <= config.max_basis:
		energy = diagonalize(potential, l_D, config.with_size(size), k + 1, k = k)[k]
		if previous is not None:
			delta = abs(energy - previous)
			logger.info("size", size, "E =", mp.nstr(energy, 20), "delta", mp.nstr(delta, 3))
			if delta < tol * abs(energy):
				return energy, delta, size
		previous = energy
		size *= 2
	raise NoConvergence("k={} at l_D={} not converged to {} within {} basis functions".format(k, l_D, mp.nstr(tol, 3), config.max_basis), previous, delta)

def _laguerre_a(l_D: Fraction) -> Any:
	if Fraction(l_D) <= Fraction(-3, 2):
		raise IllConditionedOverlap("basis norms Gamma(n + l_D + 3/2) are not positive for l_D = {}".format(l_D))
	return to_mpf(l_D) + mp.mpf(1) / 2

def _halved_powers(potential: RadialPotential) -> List[Tuple[int, Any]]:
	try:
		terms = potential.even_powers()
	except UnsupportedPotential:
		raise UnsupportedPotential("the oracle basis handles polynomial potentials in q^2 only; {} is not".format(potential.kind))
	return [(p // 2, c) for p, c in terms]

def _jacobi(a: Any, n: int) -> List[List[Any]]:
	J = [[mp.zero] * n for _ in range(n)]
	for i in range(n):
		J[i][i] = 2 * i + a + 1
		if i + 1 < n:
			J[i][i + 1] = J[i + 1][i] = -mp.sqrt((i + 1) * (i + 1 + a))
	return J

def _tridiagonal_times(J: List[List[Any]], M: List[List[Any]]) -> List[List[Any]]:
	n = len(J)
	out = []
	for i in range(n):
		row = []
		for j in range(n):
			x = J[i][i] * M[i][j]
			if i > 0: x += J[i][i - 1] * M[i - 1][j]
			if i + 1 < n: x += J[i][i + 1] * M[i + 1][j]
			row.append(x)
		out.append(row)
	return out

def _hamiltonian_double(terms: List[Tuple[int, float]], a: float, size: int, scale: float) -> np.ndarray:
	top = max(p for p, _ in terms)
	big = size + top
	n = np.arange(big, dtype = float)
	off = -np.sqrt((n[:-1] + 1) * (n[:-1] + 1 + a))
	J = np.diag(2 * n + a + 1) + np.diag(off, 1) + np.diag(off, -1)
	s2 = scale * scale
	H = (np.diag(2 * n[:size] + a + 1) - J[:size, :size] / 2) / s2
	for p, c in terms:
		if c:
			H += c * s2**p * np.linalg.matrix_power(J, p)[:size, :size]
	return H
