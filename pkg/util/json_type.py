from typing import Any
from fractions import Fraction
import json
from sqlalchemy import types
from sqlalchemy.dialects import postgresql
from mpmath import mp

class JSONType(types.TypeDecorator): # type: ignore
	impl = types.TEXT
	
	def load_dialect_impl(self, dialect: Any) -> Any:
		if dialect.name == 'postgresql':
			t = postgresql.JSON()
		else:
			t = types.TEXT()
		return dialect.type_descriptor(t)
	
	def process_bind_param(self, value: Any, dialect: Any) -> Any:
		if value is None:
			return value
		if dialect.name == 'postgresql':
			return json.loads(dumps(value))
		return dumps(value)
	
	def process_result_value(self, value: Any, dialect: Any) -> Any:
		if value is None or dialect.name == 'postgresql':
			return value
		return json.loads(value)

def dumps(value: Any, **kwargs: Any) -> str:
	return json.dumps(value, default = _encode, **kwargs)

def _encode(x: Any) -> Any:
	# mpf and Fraction are stored as decimal strings
	if isinstance(x, Fraction):
		return str(x)
	if isinstance(x, mp.mpf):
		return mp.nstr(x, max(mp.dps, 15))
	raise TypeError("{} is not JSON serializable".format(type(x).__name__))
