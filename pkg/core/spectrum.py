from typing import Dict, Iterable, List, Optional, Tuple
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import threading

from util.misc import Logger
from .error import ClientError, DomainError, ServerError
from .models import SpectrumEntry, StateIndex, StateSolution
from .potentials import RadialPotential
from .solver import Solver
import settings

Key = Tuple[int, Fraction]
Outcome = Tuple[Optional[StateSolution], Optional[str]]

def effective_l(state: StateIndex) -> Fraction:
	return state.l_D

def degeneracy_ladder(state: StateIndex, l_max: int) -> List[StateIndex]:
	# l + (D-3)/2 is kept fixed by trading one unit of l for two dimensions
	ladder = []
	for l in range(min(l_max, state.l + (state.D - 2) // 2), -1, -1):
		D = state.D + 2 * (state.l - l)
		if D < 2: continue
		ladder.append(StateIndex(state.k, l, D))
	return ladder

class SolutionCache:
	__slots__ = ('_outcomes', '_lock')
	
	_outcomes: Dict[Key, Outcome]
	_lock: threading.Lock
	
	def __init__(self) -> None:
		self._outcomes = {}
		self._lock = threading.Lock()
	
	def __contains__(self, key: Key) -> bool:
		return key in self._outcomes
	
	def __len__(self) -> int:
		return len(self._outcomes)
	
	def get(self, key: Key) -> Optional[Outcome]:
		return self._outcomes.get(key)
	
	def put(self, key: Key, outcome: Outcome) -> Outcome:
		# first writer wins
		with self._lock:
			return self._outcomes.setdefault(key, outcome)

def build_spectrum(
	potential: RadialPotential, k_max: int, l_max: int, dims: Iterable[int], *,
	solver: Optional[Solver] = None, workers: Optional[int] = None, cache: Optional[SolutionCache] = None,
) -> List[SpectrumEntry]:
	if k_max < 0 or l_max < 0:
		raise DomainError("k_max and l_max must be >= 0")
	if solver is None:
		solver = Solver()
	if workers is None:
		workers = settings.WORKERS
	if cache is None:
		cache = SolutionCache()
	logger = Logger('spectrum', cache, settings.DEBUG_SPECTRUM)
	
	states = sorted(
		(StateIndex(k, l, D) for k in range(k_max + 1) for l in range(l_max + 1) for D in sorted(set(dims))),
		key = StateIndex.key,
	)
	keys = [] # type: List[Key]
	for state in states:
		key = (state.k, state.l_D)
		if key in cache:
			logger.info("cache hit", key)
		elif key not in keys:
			keys.append(key)
	
	for key, outcome in zip(keys, solve_keys(solver, potential, keys, workers)):
		cache.put(key, outcome)
		if outcome[1] is not None:
			logger.info("failed", key, outcome[1])
	
	entries = []
	for state in states:
		solution, error = cache.get((state.k, state.l_D)) or (None, None)
		entries.append(SpectrumEntry(state, degeneracy_ladder(state, l_max), solution = solution, error = error))
	return entries

def solve_keys(solver: Solver, potential: RadialPotential, keys: List[Key], workers: int) -> List[Outcome]:
	jobs = [(solver, potential, k, l_D) for k, l_D in keys]
	if workers <= 1 or len(jobs) <= 1:
		return [_solve_one(job) for job in jobs]
	# one process per solve; mpmath precision is process-global
	with ProcessPoolExecutor(max_workers = workers) as pool:
		return list(pool.map(_solve_one, jobs))

def _solve_one(job: Tuple[Solver, RadialPotential, int, Fraction]) -> Outcome:
	solver, potential, k, l_D = job
	try:
		return solver.solve(potential, k, l_D), None
	except (ClientError, ServerError) as ex:
		return None, ex.code
