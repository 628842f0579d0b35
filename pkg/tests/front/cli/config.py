from fractions import Fraction
import pytest

from core.error import InvalidOption
from core.models import StateIndex
from front.cli.config import RunConfig

def _config(**kwargs: object) -> RunConfig:
	args = dict(alpha0 = '0.5', alpha = None, g = None, k = 0, l = None, dim = 3, lD = None, order = 8, pade_num = 4, pade_den = 4, digits = 50)
	args.update(kwargs)
	return RunConfig(**args) # type: ignore

def test_g_alias_halves() -> None:
	c = _config(g = '20')
	assert c.alpha == 10
	assert c.potential().describe() == { 'alpha0': '1/2', 'alpha': '10' }

def test_state_from_l_and_dim() -> None:
	c = _config(k = 1, l = 2, dim = 2)
	assert c.l_D == Fraction(3, 2)
	assert c.state() == StateIndex(1, 2, 2)

def test_state_from_l_D() -> None:
	c = _config(lD = '-1/2')
	assert c.l_D == Fraction(-1, 2)
	assert c.state() is None

def test_exclusive_options() -> None:
	with pytest.raises(InvalidOption):
		_config(alpha = '1', g = '2')
	with pytest.raises(InvalidOption):
		_config(l = 1, lD = '1')
	with pytest.raises(InvalidOption):
		_config(lD = '0.3')
	with pytest.raises(InvalidOption):
		_config(alpha = 'abc')
	with pytest.raises(InvalidOption):
		_config(format = 'xml')
