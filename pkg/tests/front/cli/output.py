from fractions import Fraction
import io
import json
import pytest

from core.error import InvalidOption
from core.models import StateIndex
from front.cli import output

def test_tsv_and_json_share_schema() -> None:
	rec = output.state_record(0, 1, 3, Fraction(1), None, error = 'no-bracket')
	tsv = io.StringIO()
	output.write([rec], output.STATE_FIELDS, 'tsv', tsv)
	head, row = tsv.getvalue().splitlines()
	assert head.split('\t') == output.STATE_FIELDS
	assert row.split('\t')[-1] == 'no-bracket'
	js = io.StringIO()
	output.write([rec], output.STATE_FIELDS, 'json-lines', js)
	obj = json.loads(js.getvalue())
	assert list(obj) == output.STATE_FIELDS
	assert obj['E_raw'] == '-'
	assert obj['l_D'] == '1'

def test_table_is_aligned() -> None:
	recs = [{ 'a': '1', 'b': 'long value' }, { 'a': '12345', 'b': 'x' }]
	out = io.StringIO()
	output.write(recs, ['a', 'b'], 'table', out)
	lines = out.getvalue().splitlines()
	assert lines[0] == 'a      b'
	assert lines[2].index('long') == lines[3].index('x') == 7

def test_ladder_format() -> None:
	assert output.format_ladder(None) == '-'
	assert output.format_ladder([StateIndex(1, 2, 3), StateIndex(1, 1, 5)]) == '(1,2,3) (1,1,5)'

def test_bad_format() -> None:
	with pytest.raises(InvalidOption):
		output.check_format('csv')
