"""
Order-by-order solution of the shifted-l Riccati hierarchy.

With h = lbar^(-1/2) and x = (q - q0) / (q0 h), the radial equation for
Psi = F(x) exp(U(x)) becomes
	
	F R - U' F' - F'' / 2 = 0,    R = -U''/2 - U'^2/2 + v(x) - e

where v = sum v^(s) h^s is the scaled effective potential and
e = sum e_s h^s is the scaled energy (e_(2n+2) = q0^2 E^(n)). Expanding
U' = sum W_s h^s and F = sum F_s h^s, every half-order s >= 1 is linear
in its unknowns (W_s, F_s, e_s) and is solved from the top power of x down.
"""

from typing import Any, Iterator, List, Optional, Tuple
from mpmath import mp

from util import poly
from util.misc import Logger, Number, to_mpf
from .error import DomainError, OrderOverflow, SingularOrder
from .models import CoefficientTables, EnergySeries, ExpansionPolynomials, ShiftData
from .potentials import RadialPotential
from .shift import leading_energy_orders
import settings

def half_orders(n_max: int) -> int:
	# E^(n) sits at h^(2n+2)
	return 2 * n_max + 2

def build_expansion(potential: RadialPotential, shift: ShiftData, n_max: int) -> ExpansionPolynomials:
	if n_max < 0:
		raise DomainError("n_max must be >= 0")
	S = half_orders(n_max)
	q0 = shift.q0
	Q = shift.Q
	b = [] # type: List[Any]
	for n in range(S + 3):
		b.append((-1)**n * mp.mpf(n + 1) / 2 + potential.derivative(q0, n) * q0**(n + 2) / (mp.factorial(n) * Q))
	
	two_beta_1 = 2 * shift.beta + 1
	beta_beta_1 = shift.beta * (shift.beta + 1) / 2
	v = [] # type: List[poly.Poly]
	for n in range(S + 1):
		p = poly.zeros(n + 3)
		p[n + 2] = b[n + 2]
		p[n] += (-1)**n * two_beta_1 * (n + 1) / 2
		if n >= 2:
			p[n - 2] += (-1)**n * beta_beta_1 * (n - 1)
		v.append(p)
	return ExpansionPolynomials(b, v, S)

def nodal_polynomial(k: int, omega: Any) -> poly.Poly:
	# monic solution of -k w F + w x F' - F''/2 = 0
	f = poly.unit(k)
	for p in range(k - 2, -1, -2):
		f[p] = (p + 2) * (p + 1) * f[p + 2] / (2 * omega * (p - k))
	return f

def solve_recursion(expansion: ExpansionPolynomials, shift: ShiftData, k: int, n_max: Optional[int] = None) -> Tuple[CoefficientTables, EnergySeries]:
	if n_max is None:
		n_max = (expansion.half_orders - 2) // 2
	S = half_orders(n_max)
	if S > expansion.half_orders:
		raise DomainError("expansion carries {} half-orders, n_max={} needs {}".format(expansion.half_orders, n_max, S))
	if k < 0:
		raise DomainError("node count k must be >= 0")
	omega = shift.omega
	if abs(omega) < mp.eps ** mp.mpf('0.5'):
		raise SingularOrder("omega = {} leaves the order equations without a pivot".format(mp.nstr(omega, 5)))
	logger = Logger('engine', shift, settings.DEBUG_ENGINE)
	limit = overflow_limit()
	
	e_m2, e_m1 = leading_energy_orders(shift)
	f0 = nodal_polynomial(k, omega)
	w = [[mp.zero, -omega]] # type: List[poly.Poly]
	f = [f0]
	e = [shift.q0**2 * e_m1]
	v = expansion.v
	rs = [_r_part(0, w, v, e)]
	residuals = [_order_residual(0, w, f, rs)]
	
	for s in range(1, S + 1):
		acc = _known_part(s, w, f, v, rs)
		scale = max(mp.one, poly.max_abs(acc))
		ws = poly.zeros(s + 2)
		fs = poly.zeros(k)
		es = mp.zero
		# unknown of degree d: w_(d-k-1) above k, e_s at k, a_d below k
		for d in range(k + s + 2, -1, -2):
			c = poly.coeff(acc, d)
			if d > k:
				j = d - k - 1
				u = -c / omega
				ws[j] = u
				poly.add_into(acc, _w_response(f0, omega, j), u)
			elif d == k:
				es = c
				poly.add_into(acc, f0, -es)
			else:
				u = -c / (omega * (d - k))
				fs[d] = u
				poly.add_into(acc, _a_response(k, omega, d), u)
		biggest = max(poly.max_abs(ws), poly.max_abs(fs), abs(es))
		if biggest > limit:
			raise OrderOverflow("half-order {} coefficients reach {} (limit {})".format(s, mp.nstr(biggest, 5), mp.nstr(limit, 5)))
		w.append(ws)
		f.append(fs)
		e.append(es)
		rs.append(_r_part(s, w, v, e))
		residuals.append(poly.max_abs(acc) / scale)
		logger.info("order", s, "max coefficient", mp.nstr(biggest, 6), "residual", mp.nstr(residuals[-1], 3))
	
	tables = CoefficientTables(k, w, f, e, residuals)
	corrections = [e[2 * n + 2] / shift.q0**2 for n in range(n_max + 1)]
	series = EnergySeries([e_m2, e_m1] + corrections, shift.lbar, n_max)
	return tables, series

def riccati_residual(expansion: ExpansionPolynomials, tables: CoefficientTables) -> List[Any]:
	# every half-order identity rebuilt from the stored tables alone
	w, f, e, v = tables.w, tables.f, tables.e, expansion.v
	rs = [_r_part(j, w, v, e) for j in range(len(w))]
	return [_order_residual(s, w, f, rs) for s in range(len(w))]

def sum_series(series: EnergySeries) -> Any:
	lbar = series.lbar
	total = lbar**2 * series[-2] + lbar * series[-1]
	for n, c in enumerate(series.corrections()):
		total += c / lbar**n
	return total

def overflow_limit() -> Any:
	return mp.mpf(10) ** max(mp.dps - 5, 10)

def dump_tables(tables: CoefficientTables) -> Iterator[Tuple[str, int, int, Any]]:
	S = tables.half_orders
	for n in range(0, S + 1, 2):
		for m in range(1, (len(tables.w[n]) + 1) // 2 + 1):
			yield ('D', n, m, tables.D(m, n))
	for n in range(0, S, 2):
		for m in range(0, len(tables.w[n + 1]) // 2 + 1):
			yield ('C', n, m, tables.C(m, n))
	for n in range(S + 1):
		for p in range(tables.k):
			yield ('a', n, p, tables.a(p, n))
	for s, r in enumerate(tables.residuals):
		yield ('residual', s, 0, r)

class Wavefunction:
	__slots__ = ('shift', 'tables', 'order', '_u', '_f')
	
	shift: ShiftData
	tables: CoefficientTables
	# highest half-order kept
	order: int
	_u: List[poly.Poly]
	_f: List[poly.Poly]
	
	def __init__(self, shift: ShiftData, tables: CoefficientTables, order: Optional[int] = None) -> None:
		if order is None:
			order = tables.half_orders
		if not 0 <= order <= tables.half_orders:
			raise DomainError("wavefunction order {} outside 0..{}".format(order, tables.half_orders))
		self.shift = shift
		self.tables = tables
		self.order = order
		self._u = [poly.integ(ws) for ws in tables.w[:order + 1]]
		self._f = tables.f[:order + 1]
	
	def x_of(self, q: Number) -> Any:
		q = to_mpf(q)
		if q <= 0:
			raise DomainError("wavefunction evaluated at q <= 0")
		return mp.sqrt(self.shift.lbar) * (q - self.shift.q0) / self.shift.q0
	
	def parts(self, x: Any) -> Tuple[Any, Any]:
		# (F(x), U(x)) with U(0) = 0
		h = 1 / mp.sqrt(self.shift.lbar)
		F = mp.zero
		U = mp.zero
		for s in range(self.order + 1):
			F += h**s * poly.evaluate(self._f[s], x)
			U += h**s * poly.evaluate(self._u[s], x)
		return F, U
	
	def evaluate(self, q: Number) -> Any:
		F, U = self.parts(self.x_of(q))
		return F * mp.exp(U)
	
	def log_amplitude(self, q: Number) -> Any:
		F, U = self.parts(self.x_of(q))
		if F == 0:
			return mp.ninf
		return mp.log(abs(F)) + U

def evaluate_wavefunction(wf: Wavefunction, q: Number) -> Any:
	return wf.evaluate(q)

def _r_part(j: int, w: List[poly.Poly], v: List[poly.Poly], e: List[Any]) -> poly.Poly:
	# R_j = -W_j'/2 - (1/2) sum_(a+b=j) W_a W_b + v^(j) - e_j
	r = poly.scale(poly.der(w[j]), -mp.mpf(1) / 2)
	for a in range(j + 1):
		poly.add_into(r, poly.times(w[a], w[j - a]), -mp.mpf(1) / 2)
	poly.add_into(r, v[j])
	poly.add_into(r, [e[j]], -1)
	return r

def _known_part(s: int, w: List[poly.Poly], f: List[poly.Poly], v: List[poly.Poly], rs: List[poly.Poly]) -> poly.Poly:
	r_known = list(v[s])
	for a in range(1, s):
		poly.add_into(r_known, poly.times(w[a], w[s - a]), -mp.mpf(1) / 2)
	acc = poly.times(f[0], r_known)
	for i in range(1, s):
		poly.add_into(acc, poly.times(f[i], rs[s - i]))
		poly.add_into(acc, poly.times(poly.der(f[i]), w[s - i]), -1)
	return acc

def _w_response(f0: poly.Poly, omega: Any, j: int) -> poly.Poly:
	# F0 (-W'/2 + w x W) - F0' W for W = x^j
	res = poly.times(f0, poly.unit(j + 1, omega))
	if j > 0:
		poly.add_into(res, poly.times(f0, poly.unit(j - 1)), -mp.mpf(j) / 2)
	poly.add_into(res, poly.times(poly.der(f0), poly.unit(j)), -1)
	return res

def _a_response(k: int, omega: Any, p: int) -> poly.Poly:
	# -k w F + w x F' - F''/2 for F = x^p
	res = poly.unit(p, omega * (p - k))
	if p >= 2:
		res[p - 2] = -mp.mpf(p * (p - 1)) / 2
	return res

def _order_residual(s: int, w: List[poly.Poly], f: List[poly.Poly], rs: List[poly.Poly]) -> Any:
	total = poly.scale(poly.der(poly.der(f[s])), -mp.mpf(1) / 2)
	scale = mp.one
	for i in range(s + 1):
		for term, sign in ((poly.times(f[i], rs[s - i]), 1), (poly.times(poly.der(f[i]), w[s - i]), -1)):
			scale = max(scale, poly.max_abs(term))
			poly.add_into(total, term, sign)
	return poly.max_abs(total) / scale
