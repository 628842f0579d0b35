# Working precision, in decimal digits. 15 is roughly hardware double.
DIGITS = 50
# Highest energy correction E^(n) kept in the series.
ORDER = 8
PADE_NUM = 4
PADE_DEN = 4

ORACLE_BASIS = 16
ORACLE_MAX_BASIS = 128
ORACLE_DIGITS = 40
ORACLE_TOL = '1e-12'

FIXTURE_DB = 'sqlite:///fixtures.sqlite'

# Process pool size for batch subcommands; 1 solves in-process.
WORKERS = 1

DEBUG = False
DEBUG_SHIFT = False
DEBUG_ENGINE = False
DEBUG_ORACLE = False
DEBUG_SPECTRUM = False

try:
	from settings_local import *
except ImportError:
	pass
