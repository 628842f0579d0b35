from typing import Any, Union
from fractions import Fraction
import sys
import traceback

from mpmath import mp

Number = Union[int, str, Fraction, Any]

def to_mpf(x: Number) -> Any:
	# Fractions, "p/q" strings and decimal strings are converted at the current working precision
	if isinstance(x, str) and '/' in x:
		x = Fraction(x)
	if isinstance(x, Fraction):
		return mp.mpf(x.numerator) / x.denominator
	return mp.mpf(x)

def half_integer(x: Number) -> Fraction:
	fr = Fraction(x)
	if (2 * fr).denominator != 1:
		raise ValueError("not a half-integer: {}".format(x))
	return fr

def fmt(x: Any, digits: int = 15) -> str:
	if x is None:
		return '-'
	if isinstance(x, Fraction):
		return str(x)
	return mp.nstr(x, digits)

class Logger:
	__slots__ = ('prefix', '_log')
	
	prefix: str
	_log: bool
	
	def __init__(self, prefix: str, obj: object, area_debug: bool) -> None:
		import settings
		self.prefix = '{}/{:04x}'.format(prefix, hash(obj) % 0xFFFF)
		self._log = settings.DEBUG and area_debug
	
	def info(self, *args: Any) -> None:
		if self._log:
			print(self.prefix, *args, file = sys.stderr)
	
	def error(self, exc: Exception) -> None:
		traceback.print_exception(type(exc), exc, exc.__traceback__)
