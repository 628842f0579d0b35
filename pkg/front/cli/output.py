from typing import Any, Dict, Iterable, List, Optional, TextIO
from fractions import Fraction
import json
import sys

from core.error import InvalidOption
from core.models import StateIndex, StateSolution
from util.misc import fmt

FORMATS = ('table', 'tsv', 'json-lines')

STATE_FIELDS = [
	'k', 'l', 'D', 'l_D', 'q0', 'omega', 'beta', 'lbar',
	'E_raw', 'E_pade', 'pade_spread', 'ladder', 'status',
]

Record = Dict[str, str]

def check_format(format: str) -> None:
	if format not in FORMATS:
		raise InvalidOption("unknown format '{}' (choose from {})".format(format, ', '.join(FORMATS)))

def state_record(
	k: int, l: Optional[int], D: Optional[int], l_D: Fraction, solution: Optional[StateSolution], *,
	ladder: Optional[List[StateIndex]] = None, error: Optional[str] = None, double: bool = False,
) -> Record:
	factor = (2 if double else 1)
	rec = { 'k': str(k), 'l': fmt(l), 'D': fmt(D), 'l_D': str(l_D) }
	if solution is None:
		for name in ('q0', 'omega', 'beta', 'lbar', 'E_raw', 'E_pade', 'pade_spread'):
			rec[name] = fmt(None)
	else:
		shift = solution.shift
		rec['q0'] = fmt(shift.q0)
		rec['omega'] = fmt(shift.omega)
		rec['beta'] = fmt(shift.beta)
		rec['lbar'] = fmt(shift.lbar)
		rec['E_raw'] = fmt(factor * solution.energy_raw)
		rec['E_pade'] = fmt(None if solution.energy_pade is None else factor * solution.energy_pade)
		rec['pade_spread'] = fmt(None if solution.pade_spread is None else factor * solution.pade_spread)
	rec['ladder'] = format_ladder(ladder)
	rec['status'] = status_of(solution, error)
	return rec

def status_of(solution: Optional[StateSolution], error: Optional[str]) -> str:
	if error is not None:
		return error
	if solution is not None and solution.pade_error is not None:
		return solution.pade_error
	return 'ok'

def format_ladder(ladder: Optional[Iterable[StateIndex]]) -> str:
	if not ladder:
		return '-'
	return ' '.join('({},{},{})'.format(s.k, s.l, s.D) for s in ladder)

def write(records: List[Record], fields: List[str], format: str, out: Optional[TextIO] = None) -> None:
	check_format(format)
	if out is None:
		out = sys.stdout
	if format == 'json-lines':
		for rec in records:
			out.write(json.dumps({ name: rec.get(name, '-') for name in fields }) + '\n')
		return
	rows = [[rec.get(name, '-') for name in fields] for rec in records]
	if format == 'tsv':
		out.write('\t'.join(fields) + '\n')
		for row in rows:
			out.write('\t'.join(row) + '\n')
		return
	widths = [max([len(name)] + [len(row[i]) for row in rows]) for i, name in enumerate(fields)]
	out.write('  '.join(name.ljust(w) for name, w in zip(fields, widths)).rstrip() + '\n')
	out.write('  '.join('-' * w for w in widths) + '\n')
	for row in rows:
		out.write('  '.join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + '\n')

def write_series(solution: StateSolution, out: Optional[TextIO] = None, *, double: bool = False) -> None:
	if out is None:
		out = sys.stdout
	factor = (2 if double else 1)
	series = solution.series
	out.write('\n')
	for n in range(-2, series.n_max + 1):
		out.write('E^({}) = {}\n'.format(n, fmt(factor * series[n], 20)))
	out.write('max residual = {}\n'.format(fmt(max(solution.tables.residuals), 3)))

def write_dump(rows: Iterable[Any], out: Optional[TextIO] = None) -> None:
	if out is None:
		out = sys.stdout
	out.write('\n')
	for table, order, index, value in rows:
		out.write('{}\t{}\t{}\t{}\n'.format(table, order, index, fmt(value, 30)))
