from typing import Optional
from fractions import Fraction

from core import oracle
from core.db import Conn, FixtureStore
from core.models import OracleConfig
from core.potentials import AnharmonicOscillator
from front.cli import tables
from util.misc import fmt
import settings

def emit(*, table: int, db: Optional[str] = None, tol: str = settings.ORACLE_TOL, basis: int = settings.ORACLE_BASIS) -> None:
	store = _store(db)
	config = OracleConfig(basis, None, settings.ORACLE_DIGITS, settings.ORACLE_MAX_BASIS)
	seen = set()
	for cell in tables.cells(table):
		key = (cell.alpha, cell.state.k, cell.state.l_D)
		if key in seen: continue
		seen.add(key)
		potential = AnharmonicOscillator(Fraction(tables.ALPHA0), cell.alpha)
		if store.find(potential, cell.state.l_D, cell.state.k) is not None:
			print("have", potential, "k =", cell.state.k, "l_D =", cell.state.l_D)
			continue
		energy, delta, size = oracle.converge(potential, cell.state.l_D, cell.state.k, tol, config)
		store.add(potential, cell.state.l_D, cell.state.k, energy, delta, size)
		print("added", potential, "k =", cell.state.k, "l_D =", cell.state.l_D, "E =", fmt(energy, 20))

def show(*, db: Optional[str] = None) -> None:
	for f in _store(db).all():
		print("{:10} {:30} k={:<3} l_D={:<6} E={} delta={}".format(
			f.kind, ' '.join('{}={}'.format(k, v) for k, v in sorted(f.params.items())),
			f.k, str(f.l_D), f.energy, f.delta or '-',
		))

def _store(db: Optional[str]) -> FixtureStore:
	conn = Conn(db or settings.FIXTURE_DB)
	conn.create_all()
	return FixtureStore(conn)

if __name__ == '__main__':
	import funcli
	funcli.main({ emit, show })
