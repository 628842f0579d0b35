from typing import Any, Dict, List, Optional, Sequence, Tuple
from fractions import Fraction
import sys
from mpmath import mp

from core import oracle
from core.db import Conn, FixtureStore
from core.engine import dump_tables
from core.error import ClientError, InvalidOption, ServerError
from core.models import OracleConfig, StateIndex
from core.potentials import AnharmonicOscillator
from core.solver import Solver
from core.spectrum import Key, Outcome, build_spectrum, degeneracy_ladder, solve_keys
from util.misc import fmt, to_mpf
from . import tables
from .config import RunConfig
from .output import STATE_FIELDS, Record, check_format, state_record, write, write_dump, write_series
import settings

TABLE_FIELDS = ['table', 'alpha', 'k', 'l', 'D', 'column', 'reference', 'computed', 'delta', 'tol', 'status', 'note']
VERIFY_FIELDS = [
	'alpha', 'k', 'l', 'D', 'l_D', 'E_pslet', 'E_oracle', 'oracle_delta', 'rel_diff',
	'reference', 'ref_delta', 'ref_status', 'source', 'status',
]

def solve(
	*, alpha0: str = '0.5', alpha: Optional[str] = None, g: Optional[str] = None,
	k: int = 0, l: Optional[int] = None, dim: int = 3, lD: Optional[str] = None,
	order: int = settings.ORDER, pade_num: int = settings.PADE_NUM, pade_den: int = settings.PADE_DEN,
	digits: int = settings.DIGITS, tol: Optional[str] = None, format: str = 'table',
	double_energy: bool = False, dump: bool = False,
) -> int:
	try:
		config = RunConfig(
			alpha0 = alpha0, alpha = alpha, g = g, k = k, l = l, dim = dim, lD = lD, order = order,
			pade_num = pade_num, pade_den = pade_den, digits = digits, tol = tol,
			format = format, double_energy = double_energy,
		)
		solution = config.solver().solve(config.potential(), config.k, config.l_D)
	except (ClientError, ServerError) as ex:
		return _fail(ex)
	
	state = config.state()
	ladder = (None if state is None else degeneracy_ladder(state, state.l + (state.D - 2) // 2))
	rec = state_record(config.k, config.l, config.D, config.l_D, solution, ladder = ladder, double = config.double_energy)
	write([rec], STATE_FIELDS, config.format)
	if config.format == 'table':
		write_series(solution, double = config.double_energy)
	if dump:
		write_dump(dump_tables(solution.tables))
	return 0

def table(
	*, id: int, order: int = settings.ORDER, pade_num: int = settings.PADE_NUM, pade_den: int = settings.PADE_DEN,
	digits: int = settings.DIGITS, format: str = 'table', workers: int = settings.WORKERS,
) -> int:
	try:
		check_format(format)
		cells = tables.cells(id)
		solver = Solver(digits = digits, order = order, pade_num = pade_num, pade_den = pade_den)
	except ClientError as ex:
		return _fail(ex)
	
	alpha0 = Fraction(tables.ALPHA0)
	outcomes = _solve_grid(solver, [(alpha0, c.alpha, (c.state.k, c.state.l_D)) for c in cells], workers)
	records = []
	failed = 0
	for cell in cells:
		with mp.workdps(digits):
			rec, ok = _table_record(cell, outcomes[(alpha0, cell.alpha, (cell.state.k, cell.state.l_D))])
		records.append(rec)
		if not ok:
			failed += 1
	write(records, TABLE_FIELDS, format)
	print("table {}: {}; {} gated cell(s) outside tolerance".format(id, tables.title(id), failed), file = sys.stderr)
	return (1 if failed else 0)

def verify(
	*, alpha0: str = '0.5', alpha: Optional[str] = None, g: Optional[str] = None,
	k: int = 0, l: Optional[int] = None, dim: int = 3, lD: Optional[str] = None,
	order: int = settings.ORDER, pade_num: int = settings.PADE_NUM, pade_den: int = settings.PADE_DEN,
	digits: int = settings.DIGITS, oracle_basis: int = settings.ORACLE_BASIS, tol: str = settings.ORACLE_TOL,
	table: Optional[int] = None, fixtures: Optional[str] = None, format: str = 'table',
	double_energy: bool = False, workers: int = settings.WORKERS,
) -> int:
	try:
		config = RunConfig(
			alpha0 = alpha0, alpha = alpha, g = g, k = k, l = l, dim = dim, lD = lD, order = order,
			pade_num = pade_num, pade_den = pade_den, digits = digits,
			format = format, double_energy = double_energy,
		)
		solver = config.solver()
		oracle_config = OracleConfig(oracle_basis, None, settings.ORACLE_DIGITS, settings.ORACLE_MAX_BASIS)
		if table is None:
			targets = [(config.alpha0, config.alpha, config.k, config.l, config.D, config.l_D)]
			references = {} # type: Dict[Tuple[Fraction, StateIndex], tables.Cell]
		else:
			targets = _table_targets(table)
			references = tables.oracle_references(table)
	except ClientError as ex:
		return _fail(ex)
	
	store = None # type: Optional[FixtureStore]
	if fixtures is not None:
		conn = Conn(fixtures)
		conn.create_all()
		store = FixtureStore(conn)
	
	factor = (2 if config.double_energy else 1)
	outcomes = _solve_grid(solver, [(a0, a, (kk, l_D)) for a0, a, kk, _, _, l_D in targets], workers)
	records = []
	errors = 0
	for a0, a, kk, ll, D, l_D in targets:
		potential = AnharmonicOscillator(a0, a)
		solution, error = outcomes[(a0, a, (kk, l_D))]
		rec = { 'alpha': str(a), 'k': str(kk), 'l': fmt(ll), 'D': fmt(D), 'l_D': str(l_D) }
		if solution is None:
			errors += 1
			rec['status'] = error or 'server'
			records.append(rec)
			continue
		try:
			e_oracle, delta, source = _oracle_energy(potential, l_D, kk, tol, oracle_config, store)
		except (ClientError, ServerError) as ex:
			errors += 1
			rec['E_pslet'] = fmt(factor * solution.energy)
			rec['status'] = ex.code
			records.append(rec)
			continue
		with mp.workdps(config.digits):
			rec['E_pslet'] = fmt(factor * solution.energy)
			rec['E_oracle'] = fmt(factor * e_oracle)
			rec['oracle_delta'] = fmt(None if delta is None else factor * delta, 3)
			rec['rel_diff'] = fmt(abs(solution.energy - e_oracle) / abs(e_oracle), 3)
			cell = (None if ll is None or D is None else references.get((a, StateIndex(kk, ll, D))))
			ok = _reference_fields(rec, cell, e_oracle)
		rec['source'] = source
		rec['status'] = ('ok' if ok else 'FAIL')
		if not ok:
			errors += 1
		records.append(rec)
	write(records, VERIFY_FIELDS, config.format)
	return (1 if errors else 0)

def spectrum(
	*, alpha0: str = '0.5', alpha: Optional[str] = None, g: Optional[str] = None,
	k_max: int = 1, l_max: int = 2, dims: str = '2,3',
	order: int = settings.ORDER, pade_num: int = settings.PADE_NUM, pade_den: int = settings.PADE_DEN,
	digits: int = settings.DIGITS, format: str = 'table', double_energy: bool = False,
	workers: int = settings.WORKERS,
) -> int:
	try:
		config = RunConfig(
			alpha0 = alpha0, alpha = alpha, g = g, k = 0, l = None, dim = 3, lD = None, order = order,
			pade_num = pade_num, pade_den = pade_den, digits = digits,
			format = format, double_energy = double_energy,
		)
		dim_list = _parse_dims(dims)
		entries = build_spectrum(config.potential(), k_max, l_max, dim_list, solver = config.solver(), workers = workers)
	except ClientError as ex:
		return _fail(ex)
	
	records = [
		state_record(
			e.state.k, e.state.l, e.state.D, e.l_D, e.solution,
			ladder = e.ladder, error = e.error, double = config.double_energy,
		)
		for e in entries
	]
	write(records, STATE_FIELDS, config.format)
	return (1 if any(e.failed for e in entries) else 0)

def run(argv: Sequence[str]) -> int:
	import funcli
	saved = sys.argv
	sys.argv = ['pslet'] + list(argv)
	try:
		ret = funcli.main({ solve, table, verify, spectrum })
	except SystemExit as ex:
		ret = ex.code
	finally:
		sys.argv = saved
	if ret is None:
		return 0
	if isinstance(ret, int):
		return ret
	return 2

def main() -> None:
	sys.exit(run(sys.argv[1:]))

def _fail(ex: Exception) -> int:
	code = getattr(ex, 'code', 'error')
	print("error: {}: {}".format(code, ex), file = sys.stderr)
	return (2 if isinstance(ex, ClientError) else 1)

def _parse_dims(dims: str) -> List[int]:
	try:
		out = [int(d) for d in dims.split(',') if d.strip()]
	except ValueError:
		raise InvalidOption("--dims takes a comma-separated list of integers, got '{}'".format(dims))
	if not out:
		raise InvalidOption("--dims is empty")
	return out

GridKey = Tuple[Fraction, Fraction, Key]

def _solve_grid(solver: Solver, jobs: List[GridKey], workers: int) -> Dict[GridKey, Outcome]:
	# jobs are (alpha0, alpha, (k, l_D)); one potential per coupling pair
	by_potential = {} # type: Dict[Tuple[Fraction, Fraction], List[Key]]
	for alpha0, alpha, key in jobs:
		keys = by_potential.setdefault((alpha0, alpha), [])
		if key not in keys:
			keys.append(key)
	outcomes = {} # type: Dict[GridKey, Outcome]
	for alpha0, alpha in sorted(by_potential):
		potential = AnharmonicOscillator(alpha0, alpha)
		keys = by_potential[(alpha0, alpha)]
		for key, outcome in zip(keys, solve_keys(solver, potential, keys, workers)):
			outcomes[(alpha0, alpha, key)] = outcome
	return outcomes

def _table_record(cell: tables.Cell, outcome: Outcome) -> Tuple[Record, bool]:
	solution, error = outcome
	factor = (2 if cell.doubled else 1)
	rec = {
		'table': str(cell.table), 'alpha': str(cell.alpha),
		'k': str(cell.state.k), 'l': str(cell.state.l), 'D': str(cell.state.D),
		'column': cell.column, 'reference': cell.printed, 'tol': fmt(cell.tolerance(), 3),
		'note': ('inferred' if cell.inferred else ''),
	}
	if solution is None:
		rec['computed'] = rec['delta'] = '-'
		rec['status'] = error or 'server'
		return rec, not cell.gated
	attr = tables.COMPUTED.get(cell.column, 'energy_pade')
	value = getattr(solution, attr)
	if value is None:
		rec['computed'] = rec['delta'] = '-'
		rec['status'] = solution.pade_error or 'server'
		return rec, not cell.gated
	computed = factor * value
	delta = computed - cell.value()
	rec['computed'] = fmt(computed, 15)
	rec['delta'] = fmt(delta, 3)
	if not cell.gated:
		rec['status'] = 'info'
		return rec, True
	ok = abs(delta) <= cell.tolerance()
	rec['status'] = ('pass' if ok else 'FAIL')
	return rec, ok

def _table_targets(table_id: int) -> List[Tuple[Fraction, Fraction, int, Optional[int], Optional[int], Fraction]]:
	seen = [] # type: List[Tuple[Fraction, Fraction, int, Optional[int], Optional[int], Fraction]]
	for cell in tables.cells(table_id):
		target = (Fraction(tables.ALPHA0), cell.alpha, cell.state.k, cell.state.l, cell.state.D, cell.state.l_D)
		if target not in seen:
			seen.append(target)
	return seen

def _oracle_energy(
	potential: AnharmonicOscillator, l_D: Fraction, k: int, tol: str, config: OracleConfig, store: Optional[FixtureStore],
) -> Tuple[Any, Optional[Any], str]:
	if store is not None:
		fixture = store.find(potential, l_D, k)
		if fixture is not None:
			return to_mpf(fixture.energy), (None if fixture.delta is None else to_mpf(fixture.delta)), 'fixture'
	energy, delta, size = oracle.converge(potential, l_D, k, tol, config)
	if store is not None:
		store.add(potential, l_D, k, energy, delta, size)
	return energy, delta, 'oracle'

def _reference_fields(rec: Record, cell: Optional[tables.Cell], e_oracle: Any) -> bool:
	if cell is None:
		return True
	factor = (2 if cell.doubled else 1)
	delta = factor * e_oracle - cell.value()
	rec['reference'] = cell.printed
	rec['ref_delta'] = fmt(delta, 3)
	if cell.column not in tables.ORACLE_GATED:
		rec['ref_status'] = 'info'
		return True
	ok = abs(delta) <= cell.tolerance()
	rec['ref_status'] = ('pass' if ok else 'FAIL')
	return ok
