from typing import Any, Optional

class ClientError(Exception):
	code = 'client'

class ServerError(Exception):
	code = 'server'

class DomainError(ClientError):
	code = 'domain'

class DegenerateState(ClientError):
	code = 'degenerate-state'

class UnsupportedPotential(ClientError):
	code = 'unsupported-potential'

class InvalidOption(ClientError):
	code = 'invalid-option'

class UnstableOrbit(ServerError):
	code = 'unstable-orbit'

class NoBracket(ServerError):
	code = 'no-bracket'

class SingularOrder(ServerError):
	code = 'singular-order'

class OrderOverflow(ServerError):
	code = 'order-overflow'

class DegenerateTable(ServerError):
	code = 'degenerate-table'

class PoleNearEvaluation(ServerError):
	code = 'pole-near-evaluation'
	
	# The approximant value is still returned to callers that want it, flagged untrusted
	value: Any
	
	def __init__(self, message: str, value: Any) -> None:
		super().__init__(message)
		self.value = value

class IllConditionedOverlap(ServerError):
	code = 'ill-conditioned-overlap'

class NoConvergence(ServerError):
	code = 'no-convergence'
	
	value: Any
	delta: Optional[Any]
	
	def __init__(self, message: str, value: Any, delta: Optional[Any]) -> None:
		super().__init__(message)
		self.value = value
		self.delta = delta
