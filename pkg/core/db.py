from typing import Any, Iterator, List, Optional
from contextlib import contextmanager
from datetime import datetime
from fractions import Fraction
import sqlalchemy as sa
from sqlalchemy.ext.declarative import declarative_base
from sqlalchemy.orm import sessionmaker
from mpmath import mp

from util.json_type import JSONType
from .models import Fixture
from .potentials import RadialPotential

def Col(*args: Any, **kwargs: Any) -> sa.Column:
	if 'nullable' not in kwargs:
		kwargs['nullable'] = False
	return sa.Column(*args, **kwargs)

class Base(declarative_base()): # type: ignore
	__abstract__ = True

class OracleFixture(Base):
	__tablename__ = 't_oracle_fixture'
	
	id = Col(sa.Integer, primary_key = True)
	date_created = Col(sa.DateTime, default = datetime.utcnow)
	kind = Col(sa.String)
	# e.g. params = { 'alpha0': '0.5', 'alpha': '1' }
	params = Col(JSONType)
	# exact, as "p/q"
	l_D = Col(sa.String)
	k = Col(sa.Integer)
	# decimal strings keep the full precision
	energy = Col(sa.String)
	delta = Col(sa.String, nullable = True)
	basis_size = Col(sa.Integer)
	scale = Col(sa.String, nullable = True)
	__table_args__ = (sa.Index('fixture_state_index', 'kind', 'l_D', 'k'),)

class Conn:
	__slots__ = ('engine', 'session_factory', '_session', '_depth')
	
	engine: Any
	session_factory: Any
	_session: Any
	_depth: int
	
	def __init__(self, conn_str: str) -> None:
		self.engine = sa.create_engine(conn_str)
		self.session_factory = sessionmaker(bind = self.engine)
		self._session = None
		self._depth = 0
	
	def create_all(self) -> None:
		Base.metadata.create_all(self.engine)
	
	@contextmanager
	def session(self) -> Iterator[Any]:
		if self._depth > 0:
			yield self._session
			return
		sess = self.session_factory()
		self._session = sess
		self._depth += 1
		try:
			yield sess
			sess.commit()
		except:
			sess.rollback()
			raise
		finally:
			sess.close()
			self._session = None
			self._depth -= 1

class FixtureStore:
	__slots__ = ('_conn',)
	
	_conn: Conn
	
	def __init__(self, conn: Conn) -> None:
		self._conn = conn
	
	def add(
		self, potential: RadialPotential, l_D: Fraction, k: int, energy: Any, delta: Optional[Any],
		basis_size: int, scale: Optional[Any] = None,
	) -> None:
		with self._conn.session() as sess:
			sess.add(OracleFixture(
				kind = potential.kind, params = potential.describe(), l_D = str(Fraction(l_D)), k = k,
				energy = _dec(energy), delta = (None if delta is None else _dec(delta)),
				basis_size = basis_size, scale = (None if scale is None else _dec(scale)),
			))
	
	def find(self, potential: RadialPotential, l_D: Fraction, k: int) -> Optional[Fixture]:
		params = potential.describe()
		with self._conn.session() as sess:
			rows = sess.query(OracleFixture).filter(
				OracleFixture.kind == potential.kind,
				OracleFixture.l_D == str(Fraction(l_D)),
				OracleFixture.k == k,
			).order_by(OracleFixture.id.desc()).all()
			for row in rows:
				if row.params == params:
					return _fixture_from_db(row)
		return None
	
	def all(self) -> List[Fixture]:
		with self._conn.session() as sess:
			return [_fixture_from_db(row) for row in sess.query(OracleFixture).order_by(OracleFixture.id).all()]

def _dec(x: Any) -> str:
	return mp.nstr(x, max(mp.dps, 15), strip_zeros = False)

def _fixture_from_db(row: OracleFixture) -> Fixture:
	return Fixture(
		row.kind, dict(row.params), Fraction(row.l_D), row.k, row.energy, row.delta,
		row.basis_size, row.scale, row.date_created,
	)
