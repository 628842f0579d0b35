from typing import Iterator
from fractions import Fraction
import pytest
from mpmath import mp

from core.db import Conn, FixtureStore
from core.potentials import AnharmonicOscillator, HarmonicOscillator
from core.solver import Solver

@pytest.fixture(autouse = True)
def precision() -> Iterator[None]:
	saved = mp.dps
	mp.dps = 50
	yield
	mp.dps = saved

@pytest.fixture
def conn() -> Conn:
	conn = Conn('sqlite:///:memory:')
	conn.create_all()
	return conn

@pytest.fixture
def fixture_store(conn: Conn) -> FixtureStore:
	return FixtureStore(conn)

@pytest.fixture
def solver() -> Solver:
	return Solver(digits = 50, order = 8, pade_num = 4, pade_den = 4)

@pytest.fixture
def harmonic() -> HarmonicOscillator:
	return HarmonicOscillator(Fraction(1, 2))

@pytest.fixture
def quartic() -> AnharmonicOscillator:
	return AnharmonicOscillator(Fraction(1, 2), 1)
