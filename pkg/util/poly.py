# Dense polynomials as coefficient lists, lowest degree first:
# [a0, a1, a2] is a0 + a1*x + a2*x**2. Trailing zeros are kept so that
# a coefficient's index is always its degree.

from typing import Any, List
from mpmath import mp

Poly = List[Any]

def zeros(length: int) -> Poly:
	return [mp.zero] * length

def unit(power: int, coeff: Any = 1) -> Poly:
	res = zeros(power + 1)
	res[power] = mp.mpf(coeff)
	return res

def add_into(acc: Poly, a: Poly, coeff: Any = 1) -> None:
	# acc += coeff * a, in place; acc grows if a is longer
	if len(acc) < len(a):
		acc.extend([mp.zero] * (len(a) - len(acc)))
	for i, c in enumerate(a):
		if c:
			acc[i] += coeff * c

def scale(a: Poly, coeff: Any) -> Poly:
	return [coeff * c for c in a]

def times(a: Poly, b: Poly) -> Poly:
	if not a or not b:
		return []
	res = zeros(len(a) + len(b) - 1)
	for i, x in enumerate(a):
		if not x: continue
		for j, y in enumerate(b):
			res[i + j] += x * y
	return res

def der(a: Poly) -> Poly:
	return [i * a[i] for i in range(1, len(a))]

def integ(a: Poly) -> Poly:
	# antiderivative vanishing at x = 0
	return [mp.zero] + [c / (i + 1) for i, c in enumerate(a)]

def evaluate(a: Poly, x: Any) -> Any:
	if not a:
		return mp.zero
	return mp.polyval(a[::-1], x)

def coeff(a: Poly, i: int) -> Any:
	if 0 <= i < len(a):
		return a[i]
	return mp.zero

def max_abs(a: Poly) -> Any:
	return max((abs(c) for c in a), default = mp.zero)
